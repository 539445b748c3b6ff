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


// saftkit command-line front end. Talks to the library only through the C API.
//
//   saftkit generate  --kind gaussian --sigma 1 --n 1024 --range -20,20 --out f.csv
//   saftkit transform --in f.csv --matrix frft:0.785 --fwd --method fast --out F.csv
//   saftkit convolve  --in1 f.csv --in2 g.csv --matrix 1,2,0.5,2;0.3,-0.4
//                     --operator saft --out h.csv
//   saftkit verify    --all --report report.csv

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "saftkit/saftkit.h"

namespace {

enum Exit : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitDegenerate = 4,
  kExitGridMismatch = 5,
};

struct Deleter {
  void operator()(saft_matrix* p) const { saft_matrix_destroy(p); }
  void operator()(saft_signal* p) const { saft_signal_destroy(p); }
  void operator()(saft_spectrum* p) const { saft_spectrum_destroy(p); }
  void operator()(saft_report_list* p) const { saft_report_list_destroy(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

// Thrown to unwind out of a command with a finished exit code.
struct Failure {
  int code;
};

int exit_code_for(saft_status status) {
  switch (status) {
    case SAFT_OK: return kExitOk;
    case SAFT_ERR_IO:
    case SAFT_ERR_FORMAT: return kExitIo;
    case SAFT_ERR_DEGENERATE_B:
    case SAFT_ERR_DEGENERATE_BRANCH:
    case SAFT_ERR_NEGATIVE_D: return kExitDegenerate;
    case SAFT_ERR_GRID_MISMATCH: return kExitGridMismatch;
    default: return kExitUsage;
  }
}

void check(saft_status status) {
  if (status == SAFT_OK) return;
  std::fprintf(stderr, "saftkit: %s: %s\n", saft_status_string(status),
               saft_last_error());
  if (status == SAFT_ERR_DEGENERATE_B) {
    std::fprintf(stderr,
                 "saftkit: b = 0 has no integral kernel; the transform reduces "
                 "to sqrt(d) exp(j(cd/2)(w-p)^2 + jwq) f(d(w-p)), available "
                 "via 'transform --fwd --method direct'\n");
  }
  throw Failure{exit_code_for(status)};
}

Handle<saft_matrix> parse_matrix(const std::string& text) {
  saft_matrix* m = nullptr;
  check(saft_matrix_parse(text.c_str(), &m));
  return Handle<saft_matrix>(m);
}

Handle<saft_signal> read_signal(const std::string& path) {
  saft_signal* f = nullptr;
  check(saft_signal_read(path.c_str(), &f));
  return Handle<saft_signal>(f);
}

// "lo,hi" with lo < hi.
std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  double lo = 0, hi = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    lo = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    std::fprintf(stderr, "saftkit: --range expects lo,hi, got '%s'\n",
                 text.c_str());
    throw Failure{kExitUsage};
  }
  return {lo, hi};
}

struct GenerateArgs {
  std::string kind = "gaussian";
  double sigma = 1.0, t0 = 0.0, rate = 0.0, width = 1.0;
  std::size_t n = 1024;
  std::string range = "-20,20";
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  saft_generator spec;
  saft_generator_init(&spec);
  if (args.kind == "chirp") spec.kind = SAFT_SIGNAL_CHIRP;
  if (args.kind == "rect") spec.kind = SAFT_SIGNAL_RECT;
  spec.sigma = args.sigma;
  spec.t0 = args.t0;
  spec.rate = args.rate;
  spec.width = args.width;
  const auto [lo, hi] = parse_range(args.range);
  saft_signal* raw = nullptr;
  check(saft_signal_generate(&spec, args.n, lo, hi, &raw));
  Handle<saft_signal> f(raw);
  check(saft_signal_write(f.get(), args.out.c_str()));
  return kExitOk;
}

struct TransformArgs {
  std::string in, matrix, out;
  bool inverse = false;
  std::string method = "fast";
  std::optional<std::size_t> n;
  std::optional<std::string> range;
};

int cmd_transform(const TransformArgs& args) {
  const auto m = parse_matrix(args.matrix);
  double entries[6];
  check(saft_matrix_get(m.get(), entries));
  const double b = entries[1];

  if (!args.inverse) {
    const auto f = read_signal(args.in);
    saft_spectrum* raw = nullptr;
    if (args.method == "fast") {
      check(saft_transform_fast(f.get(), m.get(), &raw));
    } else if (b == 0.0) {
      check(saft_transform_b0(f.get(), m.get(), nullptr, 0, &raw));
    } else {
      check(saft_transform_direct(f.get(), m.get(), nullptr, 0, &raw));
    }
    Handle<saft_spectrum> spectrum(raw);
    check(saft_spectrum_write(spectrum.get(), args.out.c_str()));
    return kExitOk;
  }

  saft_spectrum* raw_spectrum = nullptr;
  check(saft_spectrum_read(args.in.c_str(), &raw_spectrum));
  Handle<saft_spectrum> spectrum(raw_spectrum);
  const std::size_t count = saft_spectrum_size(spectrum.get());
  std::size_t n = args.n.value_or(count);
  double lo = 0, hi = 0;
  if (args.range) {
    std::tie(lo, hi) = parse_range(*args.range);
  } else {
    // Conjugate time grid of the spectrum grid.
    std::vector<double> omegas(count);
    check(saft_spectrum_omegas(spectrum.get(), omegas.data(), count));
    if (count < 2 || b == 0.0) check(SAFT_ERR_DEGENERATE_B);
    const double dw = omegas[1] - omegas[0];
    const double dt = 2.0 * std::numbers::pi * std::abs(b) /
                      (static_cast<double>(count) * dw);
    lo = -0.5 * static_cast<double>(n) * dt;
    hi = 0.5 * static_cast<double>(n) * dt;
  }
  saft_signal* raw = nullptr;
  check(saft_transform_inverse(spectrum.get(), m.get(), n, lo, hi, &raw));
  Handle<saft_signal> f(raw);
  check(saft_signal_write(f.get(), args.out.c_str()));
  return kExitOk;
}

struct ConvolveArgs {
  std::string in1, in2, out;
  std::optional<std::string> matrix;
  std::string op = "saft";
};

int cmd_convolve(const ConvolveArgs& args) {
  const auto f = read_signal(args.in1);
  const auto g = read_signal(args.in2);
  Handle<saft_matrix> m;
  saft_conv_operator op = SAFT_CONV_STD;
  if (args.op == "std") {
    if (args.matrix) {
      std::fprintf(stderr,
                   "saftkit: warning: --operator std ignores --matrix\n");
    }
  } else {
    if (!args.matrix) {
      std::fprintf(stderr, "saftkit: --operator %s requires --matrix\n",
                   args.op.c_str());
      return kExitUsage;
    }
    m = parse_matrix(*args.matrix);
    op = args.op == "saft" ? SAFT_CONV_SAFT : SAFT_CONV_PHASE_FREE;
  }
  saft_signal* raw = nullptr;
  check(saft_convolve(f.get(), g.get(), m.get(), op, &raw));
  Handle<saft_signal> h(raw);
  check(saft_signal_write(h.get(), args.out.c_str()));
  return kExitOk;
}

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> identities;
  std::vector<std::string> matrices;
  std::optional<double> tol;
  std::optional<std::string> report;
  bool json = false;
  std::size_t n = 1024;
  std::string range = "-20,20";
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<Handle<saft_matrix>> owned;
  std::vector<const saft_matrix*> matrices;
  for (const auto& text : args.matrices) {
    owned.push_back(parse_matrix(text));
    matrices.push_back(owned.back().get());
  }
  std::vector<const char*> identities;
  for (const auto& name : args.identities) identities.push_back(name.c_str());

  saft_verify_options options;
  saft_verify_options_init(&options);
  options.n = args.n;
  std::tie(options.t_min, options.t_max) = parse_range(args.range);
  options.identities = identities.data();
  options.identity_count = identities.size();
  options.matrices = matrices.data();
  options.matrix_count = matrices.size();
  if (args.tol) {
    options.has_tolerance = 1;
    options.tolerance = *args.tol;
  }

  saft_report_list* raw = nullptr;
  check(saft_verify_run(&options, &raw));
  Handle<saft_report_list> reports(raw);

  char matrix_text[256];
  const std::size_t count = saft_report_count(reports.get());
  for (std::size_t k = 0; k < count; ++k) {
    saft_report_view view;
    check(saft_report_get(reports.get(), k, &view));
    const double* e = view.matrix;
    std::snprintf(matrix_text, sizeof matrix_text, "%g,%g,%g,%g;%g,%g", e[0],
                  e[1], e[2], e[3], e[4], e[5]);
    std::printf("%s  %-20s %-28s %.3e (tol %.0e)  %s\n",
                view.passed ? "PASS" : "FAIL", view.identity, matrix_text,
                view.residual, view.tolerance, view.subject);
    for (std::size_t j = 0; j < view.note_count; ++j) {
      std::printf("      note: %s\n", saft_report_note(reports.get(), k, j));
    }
  }

  if (args.report) {
    check(args.json ? saft_report_write_json(reports.get(), args.report->c_str())
                    : saft_report_write_csv(reports.get(), args.report->c_str()));
  }
  const bool ok = saft_report_all_passed(reports.get()) != 0;
  std::printf("%zu report(s), %s\n", count, ok ? "all passed" : "FAILURES");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saftkit: special affine Fourier transform toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a corpus signal CSV");
  generate->add_option("--kind", gen.kind, "gaussian | chirp | rect")
      ->check(CLI::IsMember({"gaussian", "chirp", "rect"}));
  generate->add_option("--sigma", gen.sigma, "Gaussian width");
  generate->add_option("--t0", gen.t0, "Gaussian center");
  generate->add_option("--rate", gen.rate, "Chirp rate");
  generate->add_option("--width", gen.width, "Rect width");
  generate->add_option("--n", gen.n, "Number of samples (power of two)");
  generate->add_option("--range", gen.range, "Time window lo,hi");
  generate->add_option("--out", gen.out, "Output CSV")->required();

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Forward or inverse SAFT");
  transform->add_option("--in", tr.in, "Input CSV")->required();
  transform->add_option("--matrix", tr.matrix, "a,b,c,d;p,q or preset[:params]")
      ->required();
  auto* fwd = transform->add_flag("--fwd", "Forward transform (default)");
  auto* inv = transform->add_flag("--inv", tr.inverse, "Inverse transform");
  fwd->excludes(inv);
  transform->add_option("--method", tr.method, "fast | direct")
      ->check(CLI::IsMember({"fast", "direct"}));
  transform->add_option("--n", tr.n, "Inverse: output samples");
  transform->add_option("--range", tr.range, "Inverse: output window lo,hi");
  transform->add_option("--out", tr.out, "Output CSV")->required();

  ConvolveArgs cv;
  auto* convolve = app.add_subcommand("convolve", "Convolve two signal files");
  convolve->add_option("--in1", cv.in1, "First signal CSV")->required();
  convolve->add_option("--in2", cv.in2, "Second signal CSV")->required();
  convolve->add_option("--matrix", cv.matrix, "a,b,c,d;p,q or preset[:params]");
  convolve->add_option("--operator", cv.op, "saft | phasefree | std")
      ->check(CLI::IsMember({"saft", "phasefree", "std"}));
  convolve->add_option("--out", cv.out, "Output CSV")->required();

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  auto* all = verify->add_flag("--all", vf.all, "Every identity (default)");
  auto* ident = verify->add_option("--identity", vf.identities,
                                   "Identity name (repeatable)");
  all->excludes(ident);
  verify->add_option("--matrix", vf.matrices, "Matrix (repeatable)");
  verify->add_option("--tol", vf.tol, "Override every tolerance");
  verify->add_option("--report", vf.report, "Report path");
  verify->add_flag("--json", vf.json, "Write the report as JSON");
  verify->add_option("--n", vf.n, "Grid size");
  verify->add_option("--range", vf.range, "Time window lo,hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*transform) return cmd_transform(tr);
    if (*convolve) return cmd_convolve(cv);
    return cmd_verify(vf);
  } catch (const Failure& failure) {
    return failure.code;
  }
}
