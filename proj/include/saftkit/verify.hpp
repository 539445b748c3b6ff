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

// Numerical certification of the convolution and product identities. Every
// checker evaluates both sides of one identity through separate pipelines and
// reports the relative L2 residual ||LHS - RHS|| / ||RHS|| over the
// conjugate frequency grid (absolute ||LHS|| when RHS vanishes).

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saftkit/saft_matrix.hpp"
#include "saftkit/signal_grid.hpp"

namespace saftkit {

namespace identity {
inline constexpr std::string_view kOracleEquivalence = "oracle-equivalence";
inline constexpr std::string_view kInverseRoundtrip = "inverse-roundtrip";
inline constexpr std::string_view kUnitarity = "unitarity";
inline constexpr std::string_view kConvolutionTheorem = "convolution-theorem";
inline constexpr std::string_view kProductTheorem = "product-theorem";
inline constexpr std::string_view kPhaseFreeTheorem = "phase-free-theorem";
inline constexpr std::string_view kLctSpecialCase = "lct-special-case";
inline constexpr std::string_view kXiangQin = "xiang-qin";
}  // namespace identity

// Suite order.
std::vector<std::string> identity_names();

struct VerificationReport {
  std::string identity;
  std::string subject;  // corpus signal(s) the identity was checked on
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  SaftMatrix matrix;
  GridSpec grid;
  std::vector<std::string> notes;
};

// 1e-10 oracle equivalence; 1e-6 round trip and unitarity; 1e-4 two-sided
// theorems (1e-6 for the classical convolution theorem under the Fourier
// matrix); 1e-3 Xiang-Qin (1e-4 under the Fourier matrix).
double default_tolerance(std::string_view identity, const SaftMatrix& m);

double relative_residual(std::span<const Complex> lhs,
                         std::span<const Complex> rhs);

using Tolerance = std::optional<double>;

VerificationReport check_oracle_equivalence(const SampledSignal& f,
                                            const SaftMatrix& m,
                                            Tolerance tol = std::nullopt);
VerificationReport check_inverse_roundtrip(const SampledSignal& f,
                                           const SaftMatrix& m,
                                           Tolerance tol = std::nullopt);
// Skipped (passed, residual 0, noted) for b < 0.
VerificationReport check_unitarity(const SampledSignal& f, const SaftMatrix& m,
                                   Tolerance tol = std::nullopt);
VerificationReport check_convolution_theorem(const SampledSignal& f,
                                             const SampledSignal& g,
                                             const SaftMatrix& m,
                                             Tolerance tol = std::nullopt);
VerificationReport check_product_theorem(const SampledSignal& f,
                                         const SampledSignal& g,
                                         const SaftMatrix& m,
                                         Tolerance tol = std::nullopt);
// SAFT_m(f * g)(w) against SAFT_m1(f)(w/sqrt2) SAFT_m1(g)(w/sqrt2),
// m1 = half_offset_matrix(m).
VerificationReport check_phase_free_theorem(const SampledSignal& f,
                                            const SampledSignal& g,
                                            const SaftMatrix& m,
                                            Tolerance tol = std::nullopt);
// Zero-offset form of the above; throws OffsetError if p or q != 0.
VerificationReport check_lct_special_case(const SampledSignal& f,
                                          const SampledSignal& g,
                                          const SaftMatrix& m,
                                          Tolerance tol = std::nullopt);
VerificationReport check_xiang_qin(const SampledSignal& f,
                                   const SampledSignal& g, const SaftMatrix& m,
                                   Tolerance tol = std::nullopt);

struct SuiteConfig {
  GridSpec grid = make_grid(1024, -20.0, 20.0);
  // Used by the single-signal identities.
  std::vector<GeneratorSpec> signals;
  // Used by the two-signal identities.
  std::vector<std::pair<GeneratorSpec, GeneratorSpec>> pairs;
  std::vector<SaftMatrix> matrices;
  // Empty selects every identity; then lct-special-case is skipped for
  // matrices with offsets instead of failing.
  std::vector<std::string> identities;
  Tolerance tolerance;
};

// Fourier, frft(pi/4), fresnel(2), (1,2,0.5,2;0.3,-0.4), (1,2,0.5,2;0,0).
std::vector<SaftMatrix> default_matrices();
// Gaussian sigma 1 and 1.5 plus a Gaussian-windowed chirp; one Gaussian pair.
SuiteConfig default_suite();

std::string describe(const GeneratorSpec& spec);

// Matrix-major, then identity order, then corpus order. A checker that
// throws yields a failed report (residual +inf, message in notes).
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

// identity,matrix,residual,tolerance,passed
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
void write_reports_csv(const std::vector<VerificationReport>& reports,
                       const std::filesystem::path& path);
void write_reports_json(const std::vector<VerificationReport>& reports,
                        const std::filesystem::path& path);

}  // namespace saftkit
