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

#include "saftkit/signal_grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "fft.hpp"
#include "saftkit/errors.hpp"
#include "text_util.hpp"

namespace saftkit {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

GridSpec GridSpec::make(std::size_t n, double t_min, double t_max) {
  if (n < 8 || !is_power_of_two(n)) {
    throw GridError("grid size must be a power of two >= 8, got " +
                    std::to_string(n));
  }
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_max > t_min)) {
    throw GridError("grid requires finite t_max > t_min");
  }
  return GridSpec(n, t_min, t_max);
}

GridSpec make_grid(std::size_t n, double t_min, double t_max) {
  return GridSpec::make(n, t_min, t_max);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = point(k);
  return out;
}

bool GridSpec::matches(const GridSpec& other) const noexcept {
  const double tol = 1e-9 * (t_max_ - t_min_);
  return n_ == other.n_ && std::abs(t_min_ - other.t_min_) <= tol &&
         std::abs(t_max_ - other.t_max_) <= tol;
}

SampledSignal::SampledSignal(GridSpec grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridError("signal length " + std::to_string(values_.size()) +
                    " does not match grid size " +
                    std::to_string(grid_.size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NonFiniteError("signal values must be finite");
    }
  }
}

Spectrum::Spectrum(std::vector<double> omegas, std::vector<Complex> values)
    : omegas_(std::move(omegas)), values_(std::move(values)) {
  if (omegas_.size() != values_.size()) {
    throw GridError("spectrum needs as many omegas as values");
  }
  for (std::size_t k = 0; k < omegas_.size(); ++k) {
    if (!std::isfinite(omegas_[k]) || !std::isfinite(values_[k].real()) ||
        !std::isfinite(values_[k].imag())) {
      throw NonFiniteError("spectrum entries must be finite");
    }
    if (k > 0 && !(omegas_[k] > omegas_[k - 1])) {
      throw GridError("spectrum omegas must be strictly increasing");
    }
  }
}

double Spectrum::uniform_spacing() const {
  const std::size_t n = omegas_.size();
  if (n < 2) throw GridError("spectrum needs at least two points");
  const double step = (omegas_[n - 1] - omegas_[0]) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double expected = omegas_[0] + static_cast<double>(k) * step;
    if (std::abs(omegas_[k] - expected) > 1e-9 * step) {
      throw GridError("spectrum omega grid is not uniform");
    }
  }
  return step;
}

SampledSignal generate(const GeneratorSpec& spec, const GridSpec& grid) {
  for (double v : {spec.sigma, spec.t0, spec.rate, spec.width}) {
    if (!std::isfinite(v)) throw ParamError("generator parameters must be finite");
  }
  std::vector<Complex> values(grid.size());
  switch (spec.kind) {
    case SignalKind::kGaussian:
      if (spec.sigma <= 0) throw ParamError("gaussian requires sigma > 0");
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double u = (grid.point(k) - spec.t0) / spec.sigma;
        values[k] = std::exp(-0.5 * u * u);
      }
      break;
    case SignalKind::kChirp:
      if (spec.sigma <= 0) throw ParamError("chirp requires sigma > 0");
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid.point(k);
        const double u = t / spec.sigma;
        values[k] = std::polar(std::exp(-0.5 * u * u), 0.5 * spec.rate * t * t);
      }
      break;
    case SignalKind::kRect:
      if (spec.width <= 0) throw ParamError("rect requires width > 0");
      for (std::size_t k = 0; k < grid.size(); ++k) {
        values[k] = std::abs(grid.point(k)) <= 0.5 * spec.width ? 1.0 : 0.0;
      }
      break;
  }
  return SampledSignal(grid, std::move(values));
}

SampledSignal apply_chirp(const SampledSignal& f, const SaftMatrix& m,
                          ChirpDirection direction) {
  if (m.b_is_zero()) throw DegenerateBError("chirp modulation requires b != 0");
  std::vector<Complex> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k] = f[k] * chirp_mod(m, f.grid().point(k), direction);
  }
  return SampledSignal(f.grid(), std::move(out));
}

double l2_norm(const SampledSignal& f) {
  double acc = 0.0;
  for (const Complex& v : f.values()) acc += std::norm(v);
  return std::sqrt(acc * f.grid().spacing());
}

double l2_norm(const Spectrum& s) {
  const double dw = s.uniform_spacing();
  double acc = 0.0;
  for (const Complex& v : s.values()) acc += std::norm(v);
  return std::sqrt(acc * dw);
}

Resampler::Resampler(const SampledSignal& f) : grid_(f.grid()) {
  const std::size_t n = f.size();
  const std::size_t fine_n = n * kOversample;
  std::vector<Complex> spec(f.values().begin(), f.values().end());
  detail::fft(spec, detail::FftSign::kForward);

  fine_.assign(fine_n, Complex{});
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) fine_[k] = spec[k];
  for (std::size_t k = half + 1; k < n; ++k) fine_[fine_n - n + k] = spec[k];
  // Nyquist bin is split so real input stays real.
  fine_[half] = 0.5 * spec[half];
  fine_[fine_n - half] = 0.5 * spec[half];

  detail::fft(fine_, detail::FftSign::kBackward);
  const double scale = 1.0 / static_cast<double>(n);
  for (Complex& v : fine_) v *= scale;
}

Complex Resampler::interpolate(double t) const noexcept {
  const std::size_t fine_n = fine_.size();
  const double u = (t - grid_.t_min()) / grid_.spacing() *
                   static_cast<double>(kOversample);
  const double base = std::floor(u);
  const double frac = u - base;
  auto wrap = [fine_n](double idx) {
    const auto m = static_cast<long long>(fine_n);
    long long i = static_cast<long long>(idx) % m;
    if (i < 0) i += m;
    return static_cast<std::size_t>(i);
  };
  const std::size_t i0 = wrap(base);
  const std::size_t i1 = (i0 + 1) % fine_n;
  if (frac == 0.0) return fine_[i0];
  return fine_[i0] + frac * (fine_[i1] - fine_[i0]);
}

Complex Resampler::at(double t) const {
  const double slack = 1e-12 * (grid_.t_max() - grid_.t_min());
  if (!(t >= grid_.t_min() - slack && t <= grid_.t_max() + slack)) {
    throw RangeError("resample point " + detail::format_real(t) +
                     " outside [" + detail::format_real(grid_.t_min()) + ", " +
                     detail::format_real(grid_.t_max()) + "]");
  }
  return interpolate(t);
}

Complex Resampler::at_or_zero(double t) const noexcept {
  if (t < grid_.t_min() || t > grid_.t_max()) return {};
  return interpolate(t);
}

std::vector<Complex> resample_at(const SampledSignal& f,
                                 std::span<const double> points) {
  const Resampler r(f);
  std::vector<Complex> out;
  out.reserve(points.size());
  for (double t : points) out.push_back(r.at(t));
  return out;
}

namespace {

struct CsvRows {
  std::vector<double> axis;
  std::vector<Complex> values;
};

CsvRows read_csv(const std::filesystem::path& path, std::string_view header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  CsvRows rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (line_no == 1) {
      if (text != header) {
        throw FormatError(path.string() + ":1: expected header '" +
                          std::string(header) + "'");
      }
      continue;
    }
    if (text.empty()) continue;
    double fields[3];
    std::string_view rest = text;
    for (int i = 0; i < 3; ++i) {
      const auto comma = rest.find(',');
      if ((i < 2) == (comma == std::string_view::npos)) {
        throw FormatError(path.string() + ":" + std::to_string(line_no) +
                          ": expected 3 comma-separated fields");
      }
      const auto value = detail::parse_real(rest.substr(0, comma));
      if (!value || !std::isfinite(*value)) {
        throw FormatError(path.string() + ":" + std::to_string(line_no) +
                          ": malformed number");
      }
      fields[i] = *value;
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    rows.axis.push_back(fields[0]);
    rows.values.emplace_back(fields[1], fields[2]);
  }
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  if (line_no == 0) throw FormatError(path.string() + ": empty file");
  return rows;
}

void write_csv(const std::filesystem::path& path, std::string_view header,
               std::span<const double> axis, std::span<const Complex> values) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  std::string buf;
  buf.reserve(64 * axis.size() + 32);
  buf.append(header).push_back('\n');
  for (std::size_t k = 0; k < axis.size(); ++k) {
    buf += detail::format_real(axis[k]);
    buf.push_back(',');
    buf += detail::format_real(values[k].real());
    buf.push_back(',');
    buf += detail::format_real(values[k].imag());
    buf.push_back('\n');
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace

SampledSignal read_signal(const std::filesystem::path& path) {
  CsvRows rows = read_csv(path, "t,re,im");
  const std::size_t n = rows.axis.size();
  if (n < 8 || !is_power_of_two(n)) {
    throw FormatError(path.string() + ": row count " + std::to_string(n) +
                      " is not a power of two >= 8");
  }
  const double t0 = rows.axis.front();
  const double dt = (rows.axis.back() - t0) / static_cast<double>(n - 1);
  if (!(dt > 0)) throw FormatError(path.string() + ": t must increase");
  for (std::size_t k = 0; k < n; ++k) {
    const double expected = t0 + static_cast<double>(k) * dt;
    if (std::abs(rows.axis[k] - expected) > 1e-9 * dt) {
      throw FormatError(path.string() + ":" + std::to_string(k + 2) +
                        ": nonuniform time spacing");
    }
  }
  const GridSpec grid =
      GridSpec::make(n, t0, t0 + static_cast<double>(n) * dt);
  return SampledSignal(grid, std::move(rows.values));
}

void write_signal(const SampledSignal& f, const std::filesystem::path& path) {
  write_csv(path, "t,re,im", f.grid().points(), f.values());
}

Spectrum read_spectrum(const std::filesystem::path& path) {
  CsvRows rows = read_csv(path, "omega,re,im");
  for (std::size_t k = 1; k < rows.axis.size(); ++k) {
    if (!(rows.axis[k] > rows.axis[k - 1])) {
      throw FormatError(path.string() + ":" + std::to_string(k + 2) +
                        ": omega must be strictly increasing");
    }
  }
  return Spectrum(std::move(rows.axis), std::move(rows.values));
}

void write_spectrum(const Spectrum& s, const std::filesystem::path& path) {
  write_csv(path, "omega,re,im", s.omegas(), s.values());
}

}  // namespace saftkit
