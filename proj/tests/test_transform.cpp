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
#include <cstdlib>
#include <numbers>
#include <vector>

#include "saftkit/errors.hpp"
#include "saftkit/transform.hpp"
#include "test_support.hpp"

namespace saftkit {
namespace {

using testing::default_grid;
using testing::fourier;
using testing::gaussian;
using testing::offset_lct;
using testing::rel_l2;
constexpr double kPi = std::numbers::pi;

std::vector<SampledSignal> corpus() {
  GeneratorSpec chirp{SignalKind::kChirp, 1.2};
  chirp.rate = 0.5;
  GeneratorSpec rect{SignalKind::kRect};
  rect.width = 3;
  return {gaussian(1.0), generate(chirp, default_grid()),
          generate(rect, default_grid())};
}

std::vector<Complex> gaussian_at(std::span<const double> ws) {
  std::vector<Complex> out;
  for (double w : ws) out.emplace_back(std::exp(-w * w / 2));
  return out;
}

TEST(ConjugateGrid, FourierSpacingAndOrder) {
  const OmegaGrid ws = conjugate_grid(default_grid(), fourier());
  ASSERT_EQ(ws.size(), 1024u);
  const double step = 2 * kPi / 40.0;
  EXPECT_NEAR(ws.values()[0], -512 * step, 1e-12);
  EXPECT_NEAR(ws.values()[1] - ws.values()[0], step, 1e-12);
  EXPECT_EQ(ws.values()[512], 0.0);
}

TEST(ConjugateGrid, NegativeBStaysIncreasing) {
  const OmegaGrid ws =
      conjugate_grid(default_grid(), make_matrix(1, -2, 0, 1, 0, 0));
  for (std::size_t k = 1; k < ws.size(); ++k) {
    EXPECT_LT(ws.values()[k - 1], ws.values()[k]);
  }
  EXPECT_THROW(conjugate_grid(default_grid(), make_matrix(1, 0, 0, 1, 0, 0)),
               DegenerateBError);
}

TEST(OmegaGridType, RejectsUnsorted) {
  EXPECT_THROW(OmegaGrid({1.0, 0.0}), GridError);
  EXPECT_THROW(OmegaGrid({0.0, NAN}), GridError);
}

TEST(SaftDirect, FourierGaussianIsSelfDual) {
  const OmegaGrid ws = conjugate_grid(default_grid(), fourier());
  const Spectrum F = saft_direct(gaussian(1.0), fourier(), ws);
  EXPECT_LE(rel_l2(F.values(), gaussian_at(ws.values())), 1e-6);
}

TEST(SaftDirect, ZeroAndLinearity) {
  const GridSpec g = default_grid();
  const OmegaGrid ws({-1.0, 0.0, 0.5, 2.0});
  const Spectrum zero =
      saft_direct(SampledSignal(g, std::vector<Complex>(g.size())),
                  offset_lct(), ws);
  for (Complex z : zero.values()) EXPECT_EQ(z, Complex(0.0));

  const Complex alpha(0.3, -1.7);
  const SampledSignal f = gaussian(1.5);
  const SampledSignal scaled =
      testing::sample(g, [&](double t) { return alpha * std::exp(-t * t / 4.5); });
  const Spectrum F = saft_direct(f, offset_lct(), ws);
  const Spectrum S = saft_direct(scaled, offset_lct(), ws);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    EXPECT_NEAR(std::abs(S[k] - alpha * F[k]), 0.0, 1e-13);
  }
}

TEST(SaftDirect, MatchesKernelSum) {
  const SampledSignal f = gaussian(1.0, make_grid(64, -6, 6));
  const SaftMatrix m = offset_lct();
  const double w = 0.8;
  Complex expected = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    expected += f[k] * std::conj(kernel_eval(m, f.grid().point(k), w));
  }
  expected *= f.grid().spacing();
  const double ws[] = {w};
  EXPECT_NEAR(std::abs(saft_direct_values(f, m, ws)[0] - expected), 0.0,
              1e-14);
}

TEST(SaftFast, MatchesDirectOnCorpus) {
  for (const SaftMatrix& m :
       {offset_lct(), fourier(), make_matrix(1, -2, 0.5, 0, 0.2, 0.1)}) {
    for (const SampledSignal& f : corpus()) {
      const Spectrum fast = saft_fast(f, m);
      const auto direct = saft_direct_values(f, m, fast.omegas());
      EXPECT_LE(rel_l2(fast.values(), direct), 1e-10) << format_matrix(m);
    }
  }
}

TEST(SaftFast, FourierGaussian) {
  const Spectrum F = saft_fast(gaussian(1.0), fourier());
  EXPECT_LE(rel_l2(F.values(), gaussian_at(F.omegas())), 1e-6);
}

TEST(SaftFast, ZeroSignal) {
  const GridSpec g = default_grid();
  const Spectrum F =
      saft_fast(SampledSignal(g, std::vector<Complex>(g.size())), offset_lct());
  for (Complex z : F.values()) EXPECT_EQ(z, Complex(0.0));
}

TEST(SaftFast, RejectsZeroB) {
  EXPECT_THROW(saft_fast(gaussian(1.0), make_matrix(1, 0, 0, 1, 0, 0)),
               DegenerateBError);
}

TEST(SaftFast, ThreadCountDoesNotChangeBits) {
  const SampledSignal f = corpus()[1];
  ::setenv("SAFT_KIT_THREADS", "1", 1);
  const Spectrum one = saft_direct(f, offset_lct(),
                                   conjugate_grid(f.grid(), offset_lct()));
  ::setenv("SAFT_KIT_THREADS", "4", 1);
  const Spectrum four = saft_direct(f, offset_lct(),
                                    conjugate_grid(f.grid(), offset_lct()));
  ::unsetenv("SAFT_KIT_THREADS");
  for (std::size_t k = 0; k < one.size(); ++k) EXPECT_EQ(one[k], four[k]);
}

TEST(SaftInverse, RoundTrip) {
  for (const SaftMatrix& m :
       {offset_lct(), fourier(), make_matrix(1, -2, 0.5, 0, 0.2, 0.1)}) {
    for (const SampledSignal& f : corpus()) {
      const SampledSignal back = saft_inverse(saft_fast(f, m), m, f.grid());
      EXPECT_LE(rel_l2(back.values(), f.values()), 1e-6) << format_matrix(m);
    }
  }
}

TEST(SaftInverse, FourierIsClassicalInverse) {
  const SampledSignal f = gaussian(1.5);
  const Spectrum F = saft_fast(f, fourier());
  const SampledSignal back = saft_inverse(F, fourier(), f.grid());
  const double dw = F.uniform_spacing();
  for (std::size_t k : {100u, 512u, 700u}) {
    const double t = f.grid().point(k);
    Complex classical = 0;
    for (std::size_t j = 0; j < F.size(); ++j) {
      classical += F[j] * std::polar(1.0, F.omegas()[j] * t);
    }
    classical *= dw / std::sqrt(2 * kPi);
    EXPECT_NEAR(std::abs(back[k] - classical), 0.0, 1e-12) << t;
  }
}

TEST(SaftInverse, ZeroSpectrumAndNonuniformGrid) {
  const Spectrum zero({-1, 0, 1, 2}, std::vector<Complex>(4));
  const SampledSignal f = saft_inverse(zero, offset_lct(), make_grid(8, -1, 1));
  for (Complex z : f.values()) EXPECT_EQ(z, Complex(0.0));
  const Spectrum uneven({-1, 0, 1, 3}, std::vector<Complex>(4));
  EXPECT_THROW(saft_inverse(uneven, offset_lct(), make_grid(8, -1, 1)),
               GridError);
}

TEST(SaftB0, IdentityReturnsInput) {
  const SampledSignal f = gaussian(1.0);
  const OmegaGrid ws(f.grid().points());
  const Spectrum out = saft_b0(f, make_matrix(1, 0, 0, 1, 0, 0), ws);
  EXPECT_LE(testing::max_abs_diff(out.values(), f.values()), 1e-9);
}

TEST(SaftB0, GridShiftMovesMagnitudeExactly) {
  const SampledSignal f = gaussian(1.0);
  const double tau = 40 * f.grid().spacing();
  const OmegaGrid ws({-2.5, 0.0, tau, 2.5});  // all on the grid
  const Spectrum out =
      saft_b0(f, preset("time-shift", std::vector<double>{tau}), ws);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const double x = ws.values()[k] - tau;
    EXPECT_NEAR(std::abs(out[k]), std::exp(-x * x / 2), 1e-9);
  }
}

TEST(SaftB0, OffGridShiftWithinInterpolationBound) {
  const double tau = 1.5;
  const SampledSignal f = gaussian(1.0);
  const double bound = testing::linear_interp_bound(f.grid(), 1.0);
  const OmegaGrid ws({-2.0, 0.0, 1.5, 2.25, 4.0});
  const Spectrum out =
      saft_b0(f, preset("time-shift", std::vector<double>{tau}), ws);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const double x = ws.values()[k] - tau;
    EXPECT_NEAR(std::abs(out[k]), std::exp(-x * x / 2), bound);
  }
}

TEST(SaftB0, MagnitudeScalesWithD) {
  const SaftMatrix m = make_matrix(0.5, 0, 0.3, 2, 0.25, -0.5);
  const SampledSignal f = gaussian(1.0);
  const OmegaGrid ws({-3.0, -0.5, 0.0, 1.0, 3.0});
  const Spectrum out = saft_b0(f, m, ws);
  const double bound =
      std::sqrt(2.0) * testing::linear_interp_bound(f.grid(), 1.0);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const double x = 2 * (ws.values()[k] - 0.25);
    EXPECT_NEAR(std::abs(out[k]), std::sqrt(2.0) * std::exp(-x * x / 2), bound);
  }
}

TEST(SaftB0, Errors) {
  const SampledSignal f = gaussian(1.0);
  const OmegaGrid ws({0.0});
  EXPECT_THROW(saft_b0(f, offset_lct(), ws), DegenerateBranchError);
  EXPECT_THROW(saft_b0(f, make_matrix(-1, 0, 0, -1, 0, 0), ws), NegativeDError);
  EXPECT_THROW(saft_b0(f, make_matrix(1, 0, 0, 1, 0, 0), OmegaGrid({25.0})),
               RangeError);
}

}  // namespace
}  // namespace saftkit
