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

#include "saftkit/transform.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "parallel.hpp"
#include "saftkit/errors.hpp"

namespace saftkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Conjugate frequency for signed DFT index kappa in [-n/2, n/2).
double conjugate_xi(const GridSpec& grid, long long kappa) {
  return kTwoPi * static_cast<double>(kappa) /
         (static_cast<double>(grid.size()) * grid.spacing());
}

// DFT indices in the order that makes b * xi increasing.
std::vector<long long> conjugate_indices(const GridSpec& grid, double b) {
  const auto half = static_cast<long long>(grid.size() / 2);
  std::vector<long long> idx;
  idx.reserve(grid.size());
  if (b > 0) {
    for (long long k = -half; k < half; ++k) idx.push_back(k);
  } else {
    for (long long k = half - 1; k >= -half; --k) idx.push_back(k);
  }
  return idx;
}

}  // namespace

OmegaGrid::OmegaGrid(std::vector<double> omegas) : omegas_(std::move(omegas)) {
  for (std::size_t k = 0; k < omegas_.size(); ++k) {
    if (!std::isfinite(omegas_[k])) throw GridError("omegas must be finite");
    if (k > 0 && !(omegas_[k] > omegas_[k - 1])) {
      throw GridError("omegas must be strictly increasing");
    }
  }
}

OmegaGrid conjugate_grid(const GridSpec& grid, const SaftMatrix& m) {
  if (m.b_is_zero()) throw DegenerateBError("conjugate grid requires b != 0");
  std::vector<double> omegas;
  omegas.reserve(grid.size());
  for (long long k : conjugate_indices(grid, m.b())) {
    omegas.push_back(m.b() * conjugate_xi(grid, k));
  }
  return OmegaGrid(std::move(omegas));
}

std::vector<Complex> saft_direct_values(const SampledSignal& f,
                                        const SaftMatrix& m,
                                        std::span<const double> omegas) {
  if (m.b_is_zero()) {
    throw DegenerateBError("saft_direct requires b != 0; use saft_b0");
  }
  const GridSpec& grid = f.grid();
  const Complex scale = kernel_normalization(m.b()) * grid.spacing();
  const std::vector<double> ts = grid.points();
  std::vector<Complex> out(omegas.size());
  detail::parallel_for(omegas.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < ts.size(); ++k) {
        // f * conj(kappa) = f * K_b * exp(-j * phase)
        acc += f[k] * std::polar(1.0, -kernel_phase(m, ts[k], omegas[j]));
      }
      out[j] = acc * scale;
    }
  });
  return out;
}

Spectrum saft_direct(const SampledSignal& f, const SaftMatrix& m,
                     const OmegaGrid& omegas) {
  auto values = saft_direct_values(f, m, omegas.values());
  return Spectrum({omegas.values().begin(), omegas.values().end()},
                  std::move(values));
}

Spectrum saft_fast(const SampledSignal& f, const SaftMatrix& m) {
  if (m.b_is_zero()) {
    throw DegenerateBError("saft_fast requires b != 0; use saft_b0");
  }
  const GridSpec& grid = f.grid();
  const std::size_t n = grid.size();
  const double a = m.a(), b = m.b(), d = m.d(), p = m.p(), q = m.q();

  // (1) pre-chirp and offset modulation
  std::vector<Complex> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid.point(k);
    x[k] = f[k] * std::polar(1.0, (a * t * t + 2.0 * t * p) / (2.0 * b));
  }
  // (2) DFT: X[kappa mod n] = sum_k x_k exp(-2 pi j k kappa / n)
  detail::fft(x, detail::FftSign::kForward);

  // (3) w = b * xi, (4) post-chirp, normalization and grid-origin phase
  const Complex scale = kernel_normalization(b) * grid.spacing();
  const auto indices = conjugate_indices(grid, b);
  std::vector<double> omegas;
  std::vector<Complex> values;
  omegas.reserve(n);
  values.reserve(n);
  const auto nn = static_cast<long long>(n);
  for (long long kappa : indices) {
    const double xi = conjugate_xi(grid, kappa);
    const double w = b * xi;
    const double post = d * w * w / (2.0 * b) - w * (d * p - b * q) / b -
                        grid.t_min() * xi;
    const Complex dft = x[static_cast<std::size_t>(((kappa % nn) + nn) % nn)];
    omegas.push_back(w);
    values.push_back(scale * std::polar(1.0, post) * dft);
  }
  return Spectrum(std::move(omegas), std::move(values));
}

SampledSignal saft_inverse(const Spectrum& spectrum, const SaftMatrix& m,
                           const GridSpec& times) {
  if (m.b_is_zero()) {
    throw DegenerateBError("saft_inverse requires b != 0");
  }
  const double dw = spectrum.uniform_spacing();
  const SaftMatrix inv = inverse_matrix(m);
  // conj(kappa_inv) = K_{-b} * exp(-j * phase_inv)
  const Complex scale =
      inversion_constant(m) * kernel_normalization(inv.b()) * dw;
  const auto omegas = spectrum.omegas();
  const auto F = spectrum.values();
  std::vector<Complex> out(times.size());
  detail::parallel_for(times.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double t = times.point(k);
      Complex acc{};
      for (std::size_t j = 0; j < omegas.size(); ++j) {
        acc += F[j] * std::polar(1.0, -kernel_phase(inv, omegas[j], t));
      }
      out[k] = acc * scale;
    }
  });
  return SampledSignal(times, std::move(out));
}

Spectrum saft_b0(const SampledSignal& f, const SaftMatrix& m,
                 const OmegaGrid& omegas) {
  if (!m.b_is_zero()) {
    throw DegenerateBranchError("saft_b0 requires b == 0 exactly");
  }
  if (!(m.d() > 0)) {
    throw NegativeDError("b = 0 branch requires d > 0 for a real sqrt(d)");
  }
  const Resampler resampler(f);
  const double c = m.c(), d = m.d(), p = m.p(), q = m.q();
  const double root_d = std::sqrt(d);
  std::vector<Complex> values;
  values.reserve(omegas.size());
  for (double w : omegas.values()) {
    const double shifted = w - p;
    const double phase = 0.5 * c * d * shifted * shifted + w * q;
    values.push_back(root_d * std::polar(1.0, phase) *
                     resampler.at(d * shifted));
  }
  return Spectrum({omegas.values().begin(), omegas.values().end()},
                  std::move(values));
}

}  // namespace saftkit
