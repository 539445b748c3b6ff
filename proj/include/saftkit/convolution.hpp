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

// Convolution operators adapted to the SAFT.
//
// The chirped operators (saft_convolve, phase_free_convolve,
// spectral_convolve_inv) use the plain convolution integral
// (u (x) v)(t) = int u(x) v(t - x) dx; std_convolve carries the extra
// 1/sqrt(2*pi) of the classical unitary convention. Linear (not circular)
// convolution throughout: inputs are zero-padded to twice their length and
// the result is cut back to the input window.

#pragma once

#include <vector>

#include "saftkit/saft_matrix.hpp"
#include "saftkit/signal_grid.hpp"
#include "saftkit/transform.hpp"

namespace saftkit {

// Energy of the full convolution that falls outside the returned window,
// relative to the total. Above kSupportWarningThreshold a verification report
// records a SupportWarning.
inline constexpr double kSupportWarningThreshold = 1e-10;

struct ConvolutionOutput {
  SampledSignal signal;
  double truncated_energy = 0.0;
};

struct SpectralConvolutionOutput {
  Spectrum spectrum;
  double truncated_energy = 0.0;
};

// (f * g)(t) = (1/sqrt(2 pi)) int f(x) g(t - x) dx. Throws GridMismatchError
// when the grids differ and GridError when t_min is not a multiple of the
// spacing (the output would not land on the input grid).
SampledSignal std_convolve(const SampledSignal& f, const SampledSignal& g);
ConvolutionOutput std_convolve_detailed(const SampledSignal& f,
                                        const SampledSignal& g);

// h(t) = K_b conj(m(t)) int f_up(x) g_up(t - x) dx, m = chirp_mod(m, ., up).
SampledSignal saft_convolve(const SampledSignal& f, const SampledSignal& g,
                            const SaftMatrix& m);
ConvolutionOutput saft_convolve_detailed(const SampledSignal& f,
                                         const SampledSignal& g,
                                         const SaftMatrix& m);

// h(t) = sqrt(2) K_b conj(m(t)) c(sqrt(2) t), c(x) = int f_up(y) g_up(x - y) dy.
// c is evaluated by direct summation with the partner factor resampled
// band-limited; both orderings are summed and averaged so the operator is
// exactly symmetric. Throws RangeError when sqrt(2) t leaves the support of c.
SampledSignal phase_free_convolve(const SampledSignal& f,
                                  const SampledSignal& g, const SaftMatrix& m);
ConvolutionOutput phase_free_convolve_detailed(const SampledSignal& f,
                                               const SampledSignal& g,
                                               const SaftMatrix& m);

// (F *_inv G)(w) = conj(K_b) conj(m_inv(w)) int F_up(v) G_up(w - v) dv with
// m_inv = chirp_mod(inverse_matrix(m), ., up) = exp(-j d w^2 / (2b)).
Spectrum spectral_convolve_inv(const Spectrum& F, const Spectrum& G,
                               const SaftMatrix& m);
SpectralConvolutionOutput spectral_convolve_inv_detailed(const Spectrum& F,
                                                         const Spectrum& G,
                                                         const SaftMatrix& m);

// h(t) = phase_factor_prod(m, t) f(t) g(t).
SampledSignal product_modulated(const SampledSignal& f, const SampledSignal& g,
                                const SaftMatrix& m);

// Plain pointwise product f(t) g(t).
SampledSignal pointwise_product(const SampledSignal& f, const SampledSignal& g);

// K_b^2 conj(Phi(w)) int F(v) Phi(v) G_FT((w - v)/b) dv, with F the SAFT of f
// under m on the given uniform grid and G_FT(x) = int g(t) exp(-j x t) dt.
Spectrum xiang_qin_product_rhs(const SampledSignal& f, const SampledSignal& g,
                               const SaftMatrix& m, const OmegaGrid& omegas);

}  // namespace saftkit
