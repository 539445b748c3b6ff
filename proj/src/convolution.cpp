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

#include "saftkit/convolution.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "parallel.hpp"
#include "saftkit/errors.hpp"

namespace saftkit {

namespace {

constexpr double kInvSqrtTwoPi = 0.3989422804014326779399460599343819;

void require_same_grid(const GridSpec& f, const GridSpec& g) {
  if (!f.matches(g)) {
    throw GridMismatchError("convolution operands must share one grid");
  }
}

// Index of the full linear convolution that lands on the first output
// sample: positions are 2*x_min + s*step, outputs x_min + k*step.
std::size_t origin_offset(double x_min, double step, std::size_t n) {
  const double ratio = -x_min / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 || rounded < 0 ||
      rounded > static_cast<double>(n - 1)) {
    throw GridError(
        "linear convolution needs the grid origin at an integer multiple of "
        "the spacing within the grid");
  }
  return static_cast<std::size_t>(rounded);
}

struct Windowed {
  std::vector<Complex> values;
  double truncated_energy;
};

Windowed windowed_convolution(const std::vector<Complex>& a,
                              const std::vector<Complex>& b, double x_min,
                              double step, double weight) {
  const std::size_t n = a.size();
  const std::size_t offset = origin_offset(x_min, step, n);
  const std::vector<Complex> full = detail::linear_convolve(a, b);
  Windowed out{std::vector<Complex>(n), 0.0};
  double inside = 0.0, outside = 0.0;
  for (std::size_t s = 0; s < full.size(); ++s) {
    const double e = std::norm(full[s]);
    if (s >= offset && s < offset + n) {
      out.values[s - offset] = full[s] * weight;
      inside += e;
    } else {
      outside += e;
    }
  }
  const double total = inside + outside;
  out.truncated_energy = total > 0 ? outside / total : 0.0;
  return out;
}

std::vector<Complex> to_vector(std::span<const Complex> s) {
  return {s.begin(), s.end()};
}

void require_nonzero_b(const SaftMatrix& m, const char* what) {
  if (m.b_is_zero()) {
    throw DegenerateBError(std::string(what) + " requires b != 0");
  }
}

double uniform_step(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) throw GridError("need at least two frequencies");
  const double step = (xs[n - 1] - xs[0]) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(xs[k] - (xs[0] + static_cast<double>(k) * step)) >
        1e-9 * step) {
      throw GridError("frequency grid is not uniform");
    }
  }
  return step;
}

}  // namespace

ConvolutionOutput std_convolve_detailed(const SampledSignal& f,
                                        const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid());
  const GridSpec& grid = f.grid();
  Windowed w = windowed_convolution(to_vector(f.values()), to_vector(g.values()),
                                    grid.t_min(), grid.spacing(),
                                    grid.spacing() * kInvSqrtTwoPi);
  return {SampledSignal(grid, std::move(w.values)), w.truncated_energy};
}

SampledSignal std_convolve(const SampledSignal& f, const SampledSignal& g) {
  return std_convolve_detailed(f, g).signal;
}

ConvolutionOutput saft_convolve_detailed(const SampledSignal& f,
                                         const SampledSignal& g,
                                         const SaftMatrix& m) {
  require_nonzero_b(m, "saft_convolve");
  require_same_grid(f.grid(), g.grid());
  const GridSpec& grid = f.grid();
  const SampledSignal fu = apply_chirp(f, m, ChirpDirection::kUp);
  const SampledSignal gu = apply_chirp(g, m, ChirpDirection::kUp);
  Windowed w = windowed_convolution(to_vector(fu.values()),
                                    to_vector(gu.values()), grid.t_min(),
                                    grid.spacing(), grid.spacing());
  const Complex kb = kernel_normalization(m.b());
  for (std::size_t k = 0; k < w.values.size(); ++k) {
    w.values[k] *= kb * chirp_mod(m, grid.point(k), ChirpDirection::kDown);
  }
  return {SampledSignal(grid, std::move(w.values)), w.truncated_energy};
}

SampledSignal saft_convolve(const SampledSignal& f, const SampledSignal& g,
                            const SaftMatrix& m) {
  return saft_convolve_detailed(f, g, m).signal;
}

ConvolutionOutput phase_free_convolve_detailed(const SampledSignal& f,
                                               const SampledSignal& g,
                                               const SaftMatrix& m) {
  require_nonzero_b(m, "phase_free_convolve");
  require_same_grid(f.grid(), g.grid());
  const GridSpec& grid = f.grid();
  const std::size_t n = grid.size();
  const double dt = grid.spacing();
  constexpr double kSqrt2 = std::numbers::sqrt2;

  // Support of c on the doubled grid.
  const double c_lo = 2.0 * grid.t_min();
  const double c_hi = 2.0 * grid.t_min() + static_cast<double>(2 * n - 2) * dt;
  const double slack = 1e-12 * (c_hi - c_lo);
  for (double t : {grid.point(0), grid.point(n - 1)}) {
    const double x = kSqrt2 * t;
    if (x < c_lo - slack || x > c_hi + slack) {
      throw RangeError("sqrt(2) t = " + std::to_string(x) +
                       " is outside the convolution support");
    }
  }

  const SampledSignal fu = apply_chirp(f, m, ChirpDirection::kUp);
  const SampledSignal gu = apply_chirp(g, m, ChirpDirection::kUp);
  const Resampler rf(fu);
  const Resampler rg(gu);
  const std::vector<double> ts = grid.points();

  std::vector<Complex> c(n);
  detail::parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double x = kSqrt2 * ts[k];
      Complex resample_g{}, resample_f{};
      for (std::size_t i = 0; i < n; ++i) {
        resample_g += fu[i] * rg.at_or_zero(x - ts[i]);
        resample_f += gu[i] * rf.at_or_zero(x - ts[i]);
      }
      c[k] = 0.5 * dt * (resample_g + resample_f);
    }
  });

  const Complex scale = kSqrt2 * kernel_normalization(m.b());
  std::vector<Complex> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    h[k] = scale * chirp_mod(m, ts[k], ChirpDirection::kDown) * c[k];
  }

  // Energy of the on-grid convolution outside [sqrt(2) t_0, sqrt(2) t_{n-1}].
  const std::vector<Complex> full =
      detail::linear_convolve(to_vector(fu.values()), to_vector(gu.values()));
  const double lo = kSqrt2 * ts.front(), hi = kSqrt2 * ts.back();
  double inside = 0.0, outside = 0.0;
  for (std::size_t s = 0; s < full.size(); ++s) {
    const double pos = c_lo + static_cast<double>(s) * dt;
    (pos >= lo && pos <= hi ? inside : outside) += std::norm(full[s]);
  }
  const double total = inside + outside;
  return {SampledSignal(grid, std::move(h)), total > 0 ? outside / total : 0.0};
}

SampledSignal phase_free_convolve(const SampledSignal& f,
                                  const SampledSignal& g, const SaftMatrix& m) {
  return phase_free_convolve_detailed(f, g, m).signal;
}

SpectralConvolutionOutput spectral_convolve_inv_detailed(const Spectrum& F,
                                                         const Spectrum& G,
                                                         const SaftMatrix& m) {
  require_nonzero_b(m, "spectral_convolve_inv");
  const auto wf = F.omegas();
  const auto wg = G.omegas();
  if (wf.size() != wg.size()) {
    throw GridMismatchError("spectra must share one omega grid");
  }
  const double dw = F.uniform_spacing();
  const double tol = 1e-9 * dw;
  for (std::size_t j = 0; j < wf.size(); ++j) {
    if (std::abs(wf[j] - wg[j]) > tol) {
      throw GridMismatchError("spectra must share one omega grid");
    }
  }
  const SaftMatrix inv = inverse_matrix(m);
  std::vector<Complex> fu(wf.size()), gu(wf.size());
  for (std::size_t j = 0; j < wf.size(); ++j) {
    const Complex up = chirp_mod(inv, wf[j], ChirpDirection::kUp);
    fu[j] = up * F[j];
    gu[j] = up * G[j];
  }
  Windowed w = windowed_convolution(fu, gu, wf.front(), dw, dw);
  const Complex kb_conj = std::conj(kernel_normalization(m.b()));
  for (std::size_t j = 0; j < w.values.size(); ++j) {
    w.values[j] *= kb_conj * chirp_mod(inv, wf[j], ChirpDirection::kDown);
  }
  return {Spectrum({wf.begin(), wf.end()}, std::move(w.values)),
          w.truncated_energy};
}

Spectrum spectral_convolve_inv(const Spectrum& F, const Spectrum& G,
                               const SaftMatrix& m) {
  return spectral_convolve_inv_detailed(F, G, m).spectrum;
}

SampledSignal product_modulated(const SampledSignal& f, const SampledSignal& g,
                                const SaftMatrix& m) {
  require_nonzero_b(m, "product_modulated");
  require_same_grid(f.grid(), g.grid());
  std::vector<Complex> h(f.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    h[k] = phase_factor_prod(m, f.grid().point(k)) * f[k] * g[k];
  }
  return SampledSignal(f.grid(), std::move(h));
}

SampledSignal pointwise_product(const SampledSignal& f,
                                const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid());
  std::vector<Complex> h(f.size());
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = f[k] * g[k];
  return SampledSignal(f.grid(), std::move(h));
}

Spectrum xiang_qin_product_rhs(const SampledSignal& f, const SampledSignal& g,
                               const SaftMatrix& m, const OmegaGrid& omegas) {
  require_nonzero_b(m, "xiang_qin_product_rhs");
  require_same_grid(f.grid(), g.grid());
  const auto ws = omegas.values();
  const std::size_t n = ws.size();
  const double dw = uniform_step(ws);
  const double b = m.b();

  const std::vector<Complex> F = saft_direct_values(f, m, ws);
  std::vector<Complex> weighted(n);
  for (std::size_t j = 0; j < n; ++j) {
    weighted[j] = F[j] * phase_factor_conv(m, ws[j]);
  }

  // Non-unitary Fourier integral of g at (w_k - w_j)/b = r*dw/b.
  std::vector<double> xs(2 * n - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = static_cast<double>(i) - static_cast<double>(n - 1);
    xs[i] = r * dw / b;
  }
  std::vector<Complex> g_ft =
      saft_direct_values(g, make_matrix(0, 1, -1, 0, 0, 0), xs);
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  for (Complex& v : g_ft) v *= sqrt_two_pi;

  // sum_j weighted_j g_ft[(k - j) + n - 1] = full[k + n - 1]
  const std::vector<Complex> full = detail::linear_convolve(weighted, g_ft);
  const Complex kb = kernel_normalization(b);
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = kb * kb * std::conj(phase_factor_conv(m, ws[k])) * dw *
                full[k + n - 1];
  }
  return Spectrum({ws.begin(), ws.end()}, std::move(values));
}

}  // namespace saftkit
