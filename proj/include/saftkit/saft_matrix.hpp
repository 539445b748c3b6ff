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

// Scalar layer of the special affine Fourier transform (SAFT): the augmented
// parameter matrix [a b | p; c d | q], the named presets, and every phase
// factor and kernel value as a closed-form function of continuous arguments.
// Nothing here discretizes.

#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saftkit {

using Complex = std::complex<double>;

// Unit-modulus phase factors (Φ, m, C) and kernel values are plain complex
// scalars; the aliases name the role at call sites.
using PhaseScalar = Complex;
using KernelValue = Complex;

inline constexpr double kUnimodularTolerance = 1e-12;

enum class ChirpDirection { kUp, kDown };

class SaftMatrix {
 public:
  // Throws NonFiniteError / DeterminantError.
  static SaftMatrix make(double a, double b, double c, double d, double p,
                         double q);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  // Exact test, no threshold: tiny nonzero b still uses the integral branch.
  bool b_is_zero() const noexcept { return b_is_zero_; }
  bool has_offset() const noexcept { return p_ != 0.0 || q_ != 0.0; }
  double determinant() const noexcept { return a_ * d_ - b_ * c_; }

  friend bool operator==(const SaftMatrix&, const SaftMatrix&) = default;

 private:
  SaftMatrix(double a, double b, double c, double d, double p, double q)
      : a_(a), b_(b), c_(c), d_(d), p_(p), q_(q), b_is_zero_(b == 0.0) {}

  double a_, b_, c_, d_, p_, q_;
  bool b_is_zero_;
};

SaftMatrix make_matrix(double a, double b, double c, double d, double p,
                       double q);

// Names: fourier, offset-fourier(p,q), frft(theta), offset-frft(theta,p,q),
// lct(a,b,c,d), fresnel(b), time-scale(alpha), time-shift(tau),
// freq-shift(xi), lens(tau), free-space(eta), magnify(beta),
// hyperbolic(alpha).
SaftMatrix preset(std::string_view name, std::span<const double> params);
std::vector<std::string> preset_names();

// (d, -b, -c, a | bq - dp, cp - aq)
SaftMatrix inverse_matrix(const SaftMatrix& m);

// Same 2x2 block, offsets divided by sqrt(2).
SaftMatrix half_offset_matrix(const SaftMatrix& m);

// K_b = 1/sqrt(2*pi*b), principal branch of the complex square root, so
// K_b = -j/sqrt(2*pi*|b|) for b < 0. Throws DegenerateBError for b = 0.
Complex kernel_normalization(double b);

// exp((j/2)(c d p^2 + a b q^2 - 2 a d p q)).
PhaseScalar phase_constant_C(const SaftMatrix& m);

// Factor c such that c * <F, kappa_inv(., t)> reproduces f exactly for the
// kernel implemented by kernel_eval: 1 / (2*pi*|b| * K_b * K_{-b}).
PhaseScalar inversion_constant(const SaftMatrix& m);

// Phi(w) = exp(j w (dp - bq)/b) * exp(-j d w^2 / (2b)).
PhaseScalar phase_factor_conv(const SaftMatrix& m, double omega);

// Phi_inv(t) = exp(j a t^2/(2b)) * exp(-j (t/b)(a p0 + b q0)).
PhaseScalar phase_factor_prod(const SaftMatrix& m, double t);

// m(t) = exp(j (a/(2b)) t^2) for kUp, its conjugate for kDown.
PhaseScalar chirp_mod(const SaftMatrix& m, double t, ChirpDirection direction);

// kappa(t, w) = conj(K_b) * exp(-(j/(2b)) (a t^2 + d w^2 + 2t(p - w)
//                                          - 2w(dp - bq)))
KernelValue kernel_eval(const SaftMatrix& m, double t, double omega);

// Argument of the exponential in kernel_eval, so that
// kernel_eval = conj(K_b) * exp(j * kernel_phase). Requires b != 0.
double kernel_phase(const SaftMatrix& m, double t, double omega);

// Text forms: "a,b,c,d;p,q" or "name" / "name:param[,param...]".
SaftMatrix parse_matrix(std::string_view text);
std::string format_matrix(const SaftMatrix& m);

}  // namespace saftkit
