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

// Sampled signals and spectra. Every continuous integral in the toolkit is
// approximated by the left-endpoint Riemann sum over these grids.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "saftkit/saft_matrix.hpp"

namespace saftkit {

// Uniform grid t_k = t_min + k*spacing, k = 0..n-1, spacing = (t_max-t_min)/n.
class GridSpec {
 public:
  // n must be a power of two >= 8 and t_max > t_min; throws GridError.
  static GridSpec make(std::size_t n, double t_min, double t_max);

  std::size_t size() const noexcept { return n_; }
  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }
  double spacing() const noexcept { return spacing_; }
  double point(std::size_t k) const noexcept {
    return t_min_ + static_cast<double>(k) * spacing_;
  }
  std::vector<double> points() const;

  // Same size, endpoints equal within 1e-9 of the span.
  bool matches(const GridSpec& other) const noexcept;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  GridSpec(std::size_t n, double t_min, double t_max)
      : n_(n), t_min_(t_min), t_max_(t_max), spacing_((t_max - t_min) / n) {}

  std::size_t n_;
  double t_min_, t_max_, spacing_;
};

GridSpec make_grid(std::size_t n, double t_min, double t_max);

class SampledSignal {
 public:
  // Throws GridError on length mismatch, NonFiniteError on NaN/inf.
  SampledSignal(GridSpec grid, std::vector<Complex> values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Complex operator[](std::size_t k) const noexcept { return values_[k]; }

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
};

class Spectrum {
 public:
  // omegas strictly increasing, equal lengths, all finite.
  Spectrum(std::vector<double> omegas, std::vector<Complex> values);

  std::span<const double> omegas() const noexcept { return omegas_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Complex operator[](std::size_t k) const noexcept { return values_[k]; }

  // Spacing of a uniform grid; throws GridError if nonuniform beyond 1e-9
  // relative or fewer than two points.
  double uniform_spacing() const;

 private:
  std::vector<double> omegas_;
  std::vector<Complex> values_;
};

enum class SignalKind { kGaussian, kChirp, kRect };

struct GeneratorSpec {
  SignalKind kind = SignalKind::kGaussian;
  double sigma = 1.0;  // gaussian, chirp
  double t0 = 0.0;     // gaussian center
  double rate = 0.0;   // chirp: exp(j*rate*t^2/2)
  double width = 1.0;  // rect: 1 on |t| <= width/2
};

// gaussian: exp(-(t-t0)^2/(2 sigma^2)); chirp: exp(-t^2/(2 sigma^2)) *
// exp(j rate t^2/2); rect: indicator of |t| <= width/2. Throws ParamError.
SampledSignal generate(const GeneratorSpec& spec, const GridSpec& grid);

// values[k] * chirp_mod(m, t_k, direction). Throws DegenerateBError.
SampledSignal apply_chirp(const SampledSignal& f, const SaftMatrix& m,
                          ChirpDirection direction);

// sqrt(sum |f_k|^2 * dt)
double l2_norm(const SampledSignal& f);
// sqrt(sum |F_k|^2 * dw) over a uniform omega grid.
double l2_norm(const Spectrum& s);

// Band-limited resampling: the DFT of the samples is zero-padded 8x and the
// resulting fine grid is linearly interpolated. The signal is treated as one
// period on [t_min, t_max).
class Resampler {
 public:
  static constexpr std::size_t kOversample = 8;

  explicit Resampler(const SampledSignal& f);

  // Throws RangeError outside [t_min, t_max].
  Complex at(double t) const;
  // Zero outside [t_min, t_max].
  Complex at_or_zero(double t) const noexcept;

 private:
  Complex interpolate(double t) const noexcept;

  GridSpec grid_;
  std::vector<Complex> fine_;
};

std::vector<Complex> resample_at(const SampledSignal& f,
                                 std::span<const double> points);

// CSV with header "t,re,im" / "omega,re,im", 17 significant digits, LF.
SampledSignal read_signal(const std::filesystem::path& path);
void write_signal(const SampledSignal& f, const std::filesystem::path& path);
Spectrum read_spectrum(const std::filesystem::path& path);
void write_spectrum(const Spectrum& s, const std::filesystem::path& path);

}  // namespace saftkit
