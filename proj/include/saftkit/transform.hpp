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

// Forward and inverse SAFT on sampled signals.
//
// saft_direct is the O(N^2) quadrature of <f, kappa(., w)> and serves as the
// oracle. saft_fast factors the kernel into pre-chirp, a DFT and a post-chirp
// and evaluates it on the conjugate omega grid in O(N log N); on that grid the
// two are the same sum up to rounding.

#pragma once

#include <span>
#include <vector>

#include "saftkit/saft_matrix.hpp"
#include "saftkit/signal_grid.hpp"

namespace saftkit {

// Strictly increasing, finite frequency list.
class OmegaGrid {
 public:
  explicit OmegaGrid(std::vector<double> omegas);  // throws GridError
  std::span<const double> values() const noexcept { return omegas_; }
  std::size_t size() const noexcept { return omegas_.size(); }

 private:
  std::vector<double> omegas_;
};

// w_k = b * 2*pi*k / (n*dt), k = -n/2 .. n/2-1, returned in increasing order
// (reversed for b < 0). Throws DegenerateBError.
OmegaGrid conjugate_grid(const GridSpec& grid, const SaftMatrix& m);

// Values of sum_k f(t_k) conj(kappa(t_k, w)) dt at any list of frequencies,
// in the given order. Each output uses a fixed summation order.
std::vector<Complex> saft_direct_values(const SampledSignal& f,
                                        const SaftMatrix& m,
                                        std::span<const double> omegas);

Spectrum saft_direct(const SampledSignal& f, const SaftMatrix& m,
                     const OmegaGrid& omegas);

// Spectrum on conjugate_grid(f.grid(), m).
Spectrum saft_fast(const SampledSignal& f, const SaftMatrix& m);

// f(t_k) = c * sum_j F(w_j) conj(kappa_inv(w_j, t_k)) dw with kappa_inv taken
// under inverse_matrix(m) and c = inversion_constant(m). F must sit on a
// uniform grid (GridError otherwise).
SampledSignal saft_inverse(const Spectrum& spectrum, const SaftMatrix& m,
                           const GridSpec& times);

// b = 0 branch: sqrt(d) exp(j (cd/2)(w-p)^2 + j w q) f(d(w-p)), with f
// evaluated by band-limited resampling. Throws DegenerateBranchError if
// b != 0, NegativeDError if d <= 0, RangeError if d(w-p) leaves the grid.
Spectrum saft_b0(const SampledSignal& f, const SaftMatrix& m,
                 const OmegaGrid& omegas);

}  // namespace saftkit
