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

#include "saftkit/saft_matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "saftkit/errors.hpp"
#include "text_util.hpp"

namespace saftkit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDeterminant: return "DeterminantError";
    case ErrorCode::kNonFinite: return "NonFiniteError";
    case ErrorCode::kUnknownPreset: return "UnknownPresetError";
    case ErrorCode::kDegenerateB: return "DegenerateBError";
    case ErrorCode::kDegenerateBranch: return "DegenerateBranchError";
    case ErrorCode::kNegativeD: return "NegativeDError";
    case ErrorCode::kGrid: return "GridError";
    case ErrorCode::kParam: return "ParamError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kGridMismatch: return "GridMismatchError";
    case ErrorCode::kOffset: return "OffsetError";
  }
  return "Error";
}

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero_b(const SaftMatrix& m, const char* what) {
  if (m.b_is_zero()) {
    throw DegenerateBError(std::string(what) +
                           " requires b != 0 (use the b = 0 branch)");
  }
}

void require_count(std::string_view name, std::span<const double> params,
                   std::size_t count) {
  if (params.size() != count) {
    throw ParamError("preset '" + std::string(name) + "' takes " +
                     std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

SaftMatrix SaftMatrix::make(double a, double b, double c, double d, double p,
                            double q) {
  for (double v : {a, b, c, d, p, q}) {
    if (!std::isfinite(v)) throw NonFiniteError("matrix entries must be finite");
  }
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > kUnimodularTolerance) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "ad - bc = %.17g, expected 1", det);
    throw DeterminantError(buf);
  }
  return SaftMatrix(a, b, c, d, p, q);
}

SaftMatrix make_matrix(double a, double b, double c, double d, double p,
                       double q) {
  return SaftMatrix::make(a, b, c, d, p, q);
}

std::vector<std::string> preset_names() {
  return {"fourier",   "offset-fourier", "frft",       "offset-frft",
          "lct",       "fresnel",        "time-scale", "time-shift",
          "freq-shift", "lens",          "free-space", "magnify",
          "hyperbolic"};
}

SaftMatrix preset(std::string_view name, std::span<const double> params) {
  const auto& x = params;
  if (name == "fourier") {
    require_count(name, x, 0);
    return make_matrix(0, 1, -1, 0, 0, 0);
  }
  if (name == "offset-fourier") {
    require_count(name, x, 2);
    return make_matrix(0, 1, -1, 0, x[0], x[1]);
  }
  if (name == "frft" || name == "offset-frft") {
    require_count(name, x, name == "frft" ? 1 : 3);
    const double cs = std::cos(x[0]);
    const double sn = std::sin(x[0]);
    const double p = name == "frft" ? 0.0 : x[1];
    const double q = name == "frft" ? 0.0 : x[2];
    return make_matrix(cs, sn, -sn, cs, p, q);
  }
  if (name == "lct") {
    require_count(name, x, 4);
    return make_matrix(x[0], x[1], x[2], x[3], 0, 0);
  }
  if (name == "fresnel" || name == "free-space") {
    require_count(name, x, 1);
    return make_matrix(1, x[0], 0, 1, 0, 0);
  }
  if (name == "time-scale") {
    require_count(name, x, 1);
    if (x[0] == 0.0) throw ParamError("time-scale requires alpha != 0");
    return make_matrix(1.0 / x[0], 0, 0, x[0], 0, 0);
  }
  if (name == "time-shift") {
    require_count(name, x, 1);
    return make_matrix(1, 0, 0, 1, x[0], 0);
  }
  if (name == "freq-shift") {
    require_count(name, x, 1);
    return make_matrix(1, 0, 0, 1, 0, x[0]);
  }
  if (name == "lens") {
    require_count(name, x, 1);
    return make_matrix(1, 0, x[0], 1, 0, 0);
  }
  if (name == "magnify") {
    require_count(name, x, 1);
    return make_matrix(std::exp(x[0]), 0, 0, std::exp(-x[0]), 0, 0);
  }
  if (name == "hyperbolic") {
    require_count(name, x, 1);
    return make_matrix(std::cosh(x[0]), std::sinh(x[0]), std::sinh(x[0]),
                       std::cosh(x[0]), 0, 0);
  }
  throw UnknownPresetError("unknown preset '" + std::string(name) + "'");
}

SaftMatrix inverse_matrix(const SaftMatrix& m) {
  const double p0 = m.b() * m.q() - m.d() * m.p();
  const double q0 = m.c() * m.p() - m.a() * m.q();
  return make_matrix(m.d(), -m.b(), -m.c(), m.a(), p0, q0);
}

SaftMatrix half_offset_matrix(const SaftMatrix& m) {
  return make_matrix(m.a(), m.b(), m.c(), m.d(), m.p() / std::numbers::sqrt2,
                     m.q() / std::numbers::sqrt2);
}

Complex kernel_normalization(double b) {
  if (b == 0.0) throw DegenerateBError("K_b is undefined for b = 0");
  return 1.0 / std::sqrt(Complex(2.0 * kPi * b, 0.0));
}

PhaseScalar phase_constant_C(const SaftMatrix& m) {
  const double p = m.p();
  const double q = m.q();
  const double arg = 0.5 * (m.c() * m.d() * p * p + m.a() * m.b() * q * q -
                            2.0 * m.a() * m.d() * p * q);
  return std::polar(1.0, arg);
}

PhaseScalar inversion_constant(const SaftMatrix& m) {
  require_nonzero_b(m, "inversion_constant");
  const Complex pair =
      kernel_normalization(m.b()) * kernel_normalization(-m.b());
  return 1.0 / (2.0 * kPi * std::abs(m.b()) * pair);
}

PhaseScalar phase_factor_conv(const SaftMatrix& m, double omega) {
  require_nonzero_b(m, "phase_factor_conv");
  const double b = m.b();
  const double arg = omega * (m.d() * m.p() - b * m.q()) / b -
                     m.d() * omega * omega / (2.0 * b);
  return std::polar(1.0, arg);
}

PhaseScalar phase_factor_prod(const SaftMatrix& m, double t) {
  require_nonzero_b(m, "phase_factor_prod");
  const SaftMatrix inv = inverse_matrix(m);
  const double b = m.b();
  const double arg = m.a() * t * t / (2.0 * b) -
                     (t / b) * (m.a() * inv.p() + b * inv.q());
  return std::polar(1.0, arg);
}

PhaseScalar chirp_mod(const SaftMatrix& m, double t, ChirpDirection direction) {
  require_nonzero_b(m, "chirp_mod");
  const double arg = m.a() / (2.0 * m.b()) * t * t;
  return std::polar(1.0, direction == ChirpDirection::kUp ? arg : -arg);
}

double kernel_phase(const SaftMatrix& m, double t, double omega) {
  require_nonzero_b(m, "kernel_phase");
  const double b = m.b();
  const double quad = m.a() * t * t + m.d() * omega * omega +
                      2.0 * t * (m.p() - omega) -
                      2.0 * omega * (m.d() * m.p() - b * m.q());
  return -quad / (2.0 * b);
}

KernelValue kernel_eval(const SaftMatrix& m, double t, double omega) {
  return std::conj(kernel_normalization(m.b())) *
         std::polar(1.0, kernel_phase(m, t, omega));
}

SaftMatrix parse_matrix(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParamError("empty matrix specification");
  const bool looks_numeric =
      std::isdigit(static_cast<unsigned char>(text.front())) ||
      text.front() == '-' || text.front() == '+' || text.front() == '.';
  if (looks_numeric) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw ParamError("matrix must have the form a,b,c,d;p,q");
    }
    const auto block = detail::parse_reals(text.substr(0, semi));
    const auto offset = detail::parse_reals(text.substr(semi + 1));
    if (block.size() != 4 || offset.size() != 2) {
      throw ParamError("matrix must have the form a,b,c,d;p,q");
    }
    return make_matrix(block[0], block[1], block[2], block[3], offset[0],
                       offset[1]);
  }
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    params = detail::parse_reals(text.substr(colon + 1));
  }
  return preset(name, params);
}

std::string format_matrix(const SaftMatrix& m) {
  return detail::format_real(m.a()) + "," + detail::format_real(m.b()) + "," +
         detail::format_real(m.c()) + "," + detail::format_real(m.d()) + ";" +
         detail::format_real(m.p()) + "," + detail::format_real(m.q());
}

}  // namespace saftkit
