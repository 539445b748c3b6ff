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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "saftkit/errors.hpp"
#include "saftkit/saft_matrix.hpp"
#include "test_support.hpp"

namespace saftkit {
namespace {

using testing::fourier;
using testing::offset_lct;
constexpr double kPi = std::numbers::pi;

void expect_entries(const SaftMatrix& m, double a, double b, double c,
                    double d, double p, double q, double tol = 1e-15) {
  EXPECT_NEAR(m.a(), a, tol);
  EXPECT_NEAR(m.b(), b, tol);
  EXPECT_NEAR(m.c(), c, tol);
  EXPECT_NEAR(m.d(), d, tol);
  EXPECT_NEAR(m.p(), p, tol);
  EXPECT_NEAR(m.q(), q, tol);
}

void expect_complex(Complex actual, Complex expected, double tol = 1e-14) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

// Random unimodular matrix with b in [0.5, 4].
SaftMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ad(-2.0, 2.0), bs(0.5, 4.0),
      off(-1.0, 1.0);
  const double a = ad(rng), b = bs(rng), d = ad(rng);
  return make_matrix(a, b, (a * d - 1.0) / b, d, off(rng), off(rng));
}

TEST(SaftMatrix, AcceptsFourierMatrix) {
  const SaftMatrix m = make_matrix(0, 1, -1, 0, 0, 0);
  EXPECT_FALSE(m.b_is_zero());
  EXPECT_FALSE(m.has_offset());
  EXPECT_DOUBLE_EQ(m.determinant(), 1.0);
}

TEST(SaftMatrix, IdentityFlagsZeroB) {
  EXPECT_TRUE(make_matrix(1, 0, 0, 1, 0, 0).b_is_zero());
}

TEST(SaftMatrix, TinyBIsNotZero) {
  EXPECT_FALSE(make_matrix(1, 1e-300, 0, 1, 0, 0).b_is_zero());
}

TEST(SaftMatrix, AcceptsOffsetMatrix) {
  const SaftMatrix m = offset_lct();
  EXPECT_TRUE(m.has_offset());
  EXPECT_NEAR(m.determinant(), 1.0, 1e-15);
}

TEST(SaftMatrix, RejectsNonUnimodular) {
  EXPECT_THROW(make_matrix(1, 1, 1, 1, 0, 0), DeterminantError);
  EXPECT_THROW(make_matrix(1, 0, 0, 1 + 1e-9, 0, 0), DeterminantError);
  EXPECT_NO_THROW(make_matrix(1, 0, 0, 1 + 1e-13, 0, 0));
}

TEST(SaftMatrix, RejectsNonFinite) {
  EXPECT_THROW(make_matrix(NAN, 1, -1, 0, 0, 0), NonFiniteError);
  EXPECT_THROW(make_matrix(0, 1, -1, 0, INFINITY, 0), NonFiniteError);
}

TEST(Preset, FrftAtQuarterTurnIsFourier) {
  const SaftMatrix m = preset("frft", std::vector<double>{kPi / 2});
  expect_entries(m, 0, 1, -1, 0, 0, 0, 1e-15);
}

TEST(Preset, Fresnel) {
  expect_entries(preset("fresnel", std::vector<double>{2.0}), 1, 2, 0, 1, 0, 0);
}

TEST(Preset, MagnifyZeroIsIdentity) {
  const SaftMatrix m = preset("magnify", std::vector<double>{0.0});
  expect_entries(m, 1, 0, 0, 1, 0, 0);
  EXPECT_TRUE(m.b_is_zero());
}

TEST(Preset, ShiftsAndScales) {
  expect_entries(preset("time-shift", std::vector<double>{1.5}), 1, 0, 0, 1,
                 1.5, 0);
  expect_entries(preset("freq-shift", std::vector<double>{-2}), 1, 0, 0, 1, 0,
                 -2);
  expect_entries(preset("time-scale", std::vector<double>{2}), 0.5, 0, 0, 2, 0,
                 0);
  expect_entries(preset("lens", std::vector<double>{0.25}), 1, 0, 0.25, 1, 0,
                 0);
}

TEST(Preset, EveryNameBuildsUnimodularMatrix) {
  for (const std::string& name : preset_names()) {
    std::vector<double> params;
    if (name == "offset-fourier") params = {0.2, 0.3};
    else if (name == "offset-frft") params = {0.4, 0.2, 0.3};
    else if (name == "lct") params = {1, 2, 0.5, 2};
    else if (name != "fourier") params = {0.7};
    const SaftMatrix m = preset(name, params);
    EXPECT_NEAR(m.determinant(), 1.0, 1e-12) << name;
  }
}

TEST(Preset, WrongArityAndUnknownName) {
  EXPECT_THROW(preset("frft", std::vector<double>{}), ParamError);
  EXPECT_THROW(preset("fourier", std::vector<double>{1}), ParamError);
  EXPECT_THROW(preset("warp", std::vector<double>{}), UnknownPresetError);
  EXPECT_THROW(preset("time-scale", std::vector<double>{0}), ParamError);
}

TEST(InverseMatrix, Fourier) {
  expect_entries(inverse_matrix(fourier()), 0, -1, 1, 0, 0, 0);
}

TEST(InverseMatrix, OffsetExample) {
  expect_entries(inverse_matrix(offset_lct()), 2, -2, -0.5, 1, -1.4, 0.55,
                 1e-15);
}

TEST(InverseMatrix, DoubleInverseRestoresBlock) {
  const SaftMatrix m = testing::plain_lct();
  EXPECT_EQ(inverse_matrix(inverse_matrix(m)), m);
}

TEST(HalfOffset, ZeroOffsetsUnchanged) {
  EXPECT_EQ(half_offset_matrix(testing::plain_lct()), testing::plain_lct());
}

TEST(HalfOffset, DividesBySqrt2AndIsNotIdempotent) {
  const SaftMatrix m = make_matrix(0, 1, -1, 0, std::numbers::sqrt2, 0);
  expect_entries(half_offset_matrix(m), 0, 1, -1, 0, 1, 0);
  expect_entries(half_offset_matrix(half_offset_matrix(m)), 0, 1, -1, 0,
                 std::numbers::sqrt2 / 2, 0);
}

TEST(KernelNormalization, PrincipalBranch) {
  expect_complex(kernel_normalization(1.0), 1.0 / std::sqrt(2 * kPi));
  expect_complex(kernel_normalization(-2.0),
                 Complex(0, -1.0 / std::sqrt(4 * kPi)));
  EXPECT_THROW(kernel_normalization(0.0), DegenerateBError);
}

TEST(PhaseConstant, ZeroOffsetIsOne) {
  expect_complex(phase_constant_C(testing::plain_lct()), 1.0);
}

TEST(PhaseConstant, OffsetExample) {
  expect_complex(phase_constant_C(offset_lct()), std::polar(1.0, 0.445));
}

TEST(InversionConstant, IsJForBothSigns) {
  expect_complex(inversion_constant(offset_lct()), Complex(0, 1));
  expect_complex(inversion_constant(make_matrix(1, -3, 0, 1, 0, 0)),
                 Complex(0, 1));
  EXPECT_THROW(inversion_constant(make_matrix(1, 0, 0, 1, 0, 0)),
               DegenerateBError);
}

TEST(PhaseFactorConv, Examples) {
  expect_complex(phase_factor_conv(offset_lct(), 0.0), 1.0);
  for (double w : {-3.0, 0.5, 7.0}) {
    expect_complex(phase_factor_conv(fourier(), w), 1.0);
  }
  expect_complex(phase_factor_conv(offset_lct(), 1.0),
                 std::polar(1.0, 0.7) * std::polar(1.0, -0.5));
}

TEST(PhaseFactorProd, Examples) {
  expect_complex(phase_factor_prod(offset_lct(), 0.0), 1.0);
  expect_complex(phase_factor_prod(fourier(), 2.5), 1.0);
  // a t^2/(2b) = 1/4; (t/b)(a p0 + b q0) = (1/2)(-1.4 + 1.1) = -0.15.
  expect_complex(phase_factor_prod(offset_lct(), 1.0),
                 std::polar(1.0, 0.25 + 0.15));
}

TEST(ChirpMod, Examples) {
  const SaftMatrix m = offset_lct();
  expect_complex(chirp_mod(m, 0.0, ChirpDirection::kUp), 1.0);
  expect_complex(chirp_mod(m, 0.0, ChirpDirection::kDown), 1.0);
  expect_complex(chirp_mod(m, 2.0, ChirpDirection::kUp), std::polar(1.0, 1.0));
  // Inverse matrix: a_inv / (2 b_inv) = d / (-2b).
  expect_complex(chirp_mod(inverse_matrix(m), 2.0, ChirpDirection::kUp),
                 std::polar(1.0, -2.0));
  expect_complex(chirp_mod(fourier(), 3.0, ChirpDirection::kUp), 1.0);
}

TEST(KernelEval, FourierKernel) {
  for (double t : {-1.0, 0.3, 2.0}) {
    for (double w : {-2.0, 0.0, 1.7}) {
      expect_complex(kernel_eval(fourier(), t, w),
                     std::polar(1.0 / std::sqrt(2 * kPi), t * w));
    }
  }
}

TEST(KernelEval, OriginValue) {
  expect_complex(kernel_eval(offset_lct(), 0, 0), 1.0 / std::sqrt(4 * kPi));
}

TEST(KernelEval, RejectsZeroB) {
  EXPECT_THROW(kernel_eval(make_matrix(1, 0, 0, 1, 0, 0), 0, 0),
               DegenerateBError);
}

TEST(MatrixText, ParseNumericAndPreset) {
  expect_entries(parse_matrix("1,2,0.5,2;0.3,-0.4"), 1, 2, 0.5, 2, 0.3, -0.4);
  expect_entries(parse_matrix(" -1, 0, 0, -1 ; 0, 0 "), -1, 0, 0, -1, 0, 0);
  expect_entries(parse_matrix("fourier"), 0, 1, -1, 0, 0, 0);
  const SaftMatrix m = parse_matrix("frft:0.7853981");
  EXPECT_NEAR(m.a(), std::cos(0.7853981), 1e-15);
}

TEST(MatrixText, Rejections) {
  EXPECT_THROW(parse_matrix(""), ParamError);
  EXPECT_THROW(parse_matrix("1,2,0.5,2"), ParamError);
  EXPECT_THROW(parse_matrix("1,2,0.5;0,0"), ParamError);
  EXPECT_THROW(parse_matrix("1,2,x,2;0,0"), ParamError);
  EXPECT_THROW(parse_matrix("1,1,1,1;0,0"), DeterminantError);
  EXPECT_THROW(parse_matrix("bogus:1"), UnknownPresetError);
}

TEST(MatrixText, FormatRoundTripsExactly) {
  const SaftMatrix m = preset("offset-frft", std::vector<double>{0.3, 0.1, -0.7});
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
}

// Seeded property checks.

TEST(Properties, RandomMatricesAreUnimodularAndInvert) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const SaftMatrix m = random_matrix(rng);
    EXPECT_NEAR(m.determinant(), 1.0, 1e-12);
    const SaftMatrix inv = inverse_matrix(m);
    // Block product is the identity.
    EXPECT_NEAR(m.a() * inv.a() + m.b() * inv.c(), 1.0, 1e-12);
    EXPECT_NEAR(m.a() * inv.b() + m.b() * inv.d(), 0.0, 1e-12);
    EXPECT_NEAR(m.c() * inv.a() + m.d() * inv.c(), 0.0, 1e-12);
  }
}

TEST(Properties, ChirpUpTimesDownIsOne) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ts(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const SaftMatrix m = random_matrix(rng);
    const double t = ts(rng);
    expect_complex(chirp_mod(m, t, ChirpDirection::kUp) *
                       chirp_mod(m, t, ChirpDirection::kDown),
                   1.0, 1e-13);
  }
}

TEST(Properties, PhaseFactorsHaveUnitModulus) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-10, 10);
  for (int i = 0; i < 200; ++i) {
    const SaftMatrix m = random_matrix(rng);
    const double x = xs(rng);
    EXPECT_NEAR(std::abs(phase_constant_C(m)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(phase_factor_conv(m, x)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(phase_factor_prod(m, x)), 1.0, 1e-14);
  }
}

TEST(Properties, KernelModulusDependsOnlyOnB) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> xs(-10, 10);
  for (int i = 0; i < 200; ++i) {
    const SaftMatrix m = random_matrix(rng);
    EXPECT_NEAR(std::abs(kernel_eval(m, xs(rng), xs(rng))),
                1.0 / std::sqrt(2 * kPi * m.b()), 1e-14);
  }
}

}  // namespace
}  // namespace saftkit
