// Copyright 2026 The saftkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("saftkit_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with args (shell syntax) and returns its exit status.
  int run(const std::string& args) {
    const std::string command = std::string("'") + SAFTKIT_CLI_PATH + "' " +
                                args + " >'" + path("stdout.txt") + "' 2>'" +
                                path("stderr.txt") + "'";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::size_t lines(const std::string& name) const {
    const std::string text = slurp(name);
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  int generate(const std::string& name, const std::string& extra = "") {
    return run("generate --kind gaussian --n 1024 --range -20,20 --out '" +
               path(name) + "' " + extra);
  }

  fs::path dir_;
};

TEST_F(Cli, GenerateWritesRows) {
  ASSERT_EQ(generate("f.csv", "--sigma 1"), 0);
  EXPECT_EQ(lines("f.csv"), 1025u);  // header + 1024 rows
}

TEST_F(Cli, BadKindIsUsageError) {
  EXPECT_EQ(run("generate --kind sawtooth --out '" + path("x.csv") + "'"), 2);
  EXPECT_NE(slurp("stderr.txt").find("--kind"), std::string::npos);
}

TEST_F(Cli, UnwritablePathIsIoError) {
  EXPECT_EQ(run("generate --out '" + path("missing/dir/x.csv") + "'"), 3);
}

TEST_F(Cli, TransformForwardAndPreset) {
  ASSERT_EQ(generate("f.csv"), 0);
  EXPECT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix '0,1,-1,0;0,0' --fwd --method fast --out '" +
                path("F.csv") + "'"),
            0);
  EXPECT_EQ(slurp("F.csv").rfind("omega,re,im\n", 0), 0u);
  EXPECT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix frft:0.7853981 --out '" + path("G.csv") + "'"),
            0);
}

TEST_F(Cli, TransformInverseRestoresSignal) {
  ASSERT_EQ(generate("f.csv"), 0);
  ASSERT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix '1,2,0.5,2;0.3,-0.4' --out '" + path("F.csv") + "'"),
            0);
  ASSERT_EQ(run("transform --in '" + path("F.csv") +
                "' --matrix '1,2,0.5,2;0.3,-0.4' --inv --n 1024 --range -20,20 "
                "--out '" + path("back.csv") + "'"),
            0);
  EXPECT_EQ(lines("back.csv"), 1025u);
}

TEST_F(Cli, ZeroBFastIsDegenerate) {
  ASSERT_EQ(generate("f.csv"), 0);
  EXPECT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix '1,0,0,1;0,0' --method fast --out '" +
                path("X.csv") + "'"),
            4);
  EXPECT_NE(slurp("stderr.txt").find("b = 0"), std::string::npos);
  EXPECT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix '1,0,0,1;0,0' --method direct --out '" +
                path("X.csv") + "'"),
            0);
}

TEST_F(Cli, BadMatrixIsUsageError) {
  ASSERT_EQ(generate("f.csv"), 0);
  EXPECT_EQ(run("transform --in '" + path("f.csv") +
                "' --matrix '1,1,1,1;0,0' --out '" + path("X.csv") + "'"),
            2);
}

TEST_F(Cli, ConvolveOperators) {
  ASSERT_EQ(generate("f.csv"), 0);
  ASSERT_EQ(generate("g.csv", "--sigma 1.5"), 0);
  const std::string inputs =
      "convolve --in1 '" + path("f.csv") + "' --in2 '" + path("g.csv") + "' ";
  EXPECT_EQ(run(inputs + "--operator saft --matrix '1,2,0.5,2;0.3,-0.4' --out '" +
                path("h.csv") + "'"),
            0);
  EXPECT_EQ(lines("h.csv"), 1025u);
  EXPECT_EQ(run(inputs + "--operator std --matrix '1,2,0.5,2;0.3,-0.4' --out '" +
                path("s.csv") + "'"),
            0);
  EXPECT_NE(slurp("stderr.txt").find("warning"), std::string::npos);
}

TEST_F(Cli, ConvolveMismatchedGrids) {
  ASSERT_EQ(generate("f.csv"), 0);
  ASSERT_EQ(run("generate --n 512 --out '" + path("g.csv") + "'"), 0);
  EXPECT_EQ(run("convolve --in1 '" + path("f.csv") + "' --in2 '" +
                path("g.csv") + "' --operator std --out '" + path("h.csv") +
                "'"),
            5);
}

TEST_F(Cli, VerifySingleIdentity) {
  EXPECT_EQ(run("verify --identity convolution-theorem --matrix "
                "'1,2,0.5,2;0.3,-0.4' --report '" + path("r.csv") + "'"),
            0);
  EXPECT_EQ(lines("r.csv"), 2u);  // header + one row
}

TEST_F(Cli, VerifyTightToleranceFails) {
  EXPECT_EQ(run("verify --identity oracle-equivalence --matrix fourier --tol 1e-30"),
            1);
}

TEST_F(Cli, VerifyJsonReport) {
  EXPECT_EQ(run("verify --identity unitarity --matrix fresnel:2 --json --report '" +
                path("r.json") + "'"),
            0);
  EXPECT_EQ(slurp("r.json").front(), '[');
}

TEST_F(Cli, VerifyUnknownIdentity) {
  EXPECT_EQ(run("verify --identity nope"), 2);
}

TEST_F(Cli, MissingSubcommand) { EXPECT_EQ(run(""), 2); }

}  // namespace
