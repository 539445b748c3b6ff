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


#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "saftkit/saft_matrix.hpp"
#include "saftkit/signal_grid.hpp"

namespace saftkit::testing {

inline GridSpec default_grid() { return make_grid(1024, -20.0, 20.0); }

inline SaftMatrix fourier() { return make_matrix(0, 1, -1, 0, 0, 0); }
inline SaftMatrix offset_lct() { return make_matrix(1, 2, 0.5, 2, 0.3, -0.4); }
inline SaftMatrix plain_lct() { return make_matrix(1, 2, 0.5, 2, 0, 0); }

inline SampledSignal gaussian(double sigma, const GridSpec& grid = default_grid(),
                              double t0 = 0.0) {
  GeneratorSpec spec;
  spec.sigma = sigma;
  spec.t0 = t0;
  return generate(spec, grid);
}

template <typename Fn>
SampledSignal sample(const GridSpec& grid, Fn&& fn) {
  std::vector<Complex> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = fn(grid.point(k));
  return SampledSignal(grid, std::move(values));
}

// Worst-case error of linear interpolation on the 8x fine grid used by
// Resampler: (h^2 / 8) max|f''|, h = spacing / 8.
inline double linear_interp_bound(const GridSpec& grid,
                                  double max_second_derivative) {
  const double h = grid.spacing() / 8.0;
  return h * h / 8.0 * max_second_derivative;
}

inline double rel_l2(std::span<const Complex> a, std::span<const Complex> b) {
  double diff = 0, ref = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff += std::norm(a[k] - b[k]);
    ref += std::norm(b[k]);
  }
  return std::sqrt(diff / ref);
}

inline double max_abs_diff(std::span<const Complex> a,
                           std::span<const Complex> b) {
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

}  // namespace saftkit::testing
