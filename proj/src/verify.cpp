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

#include "saftkit/verify.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "saftkit/convolution.hpp"
#include "saftkit/errors.hpp"
#include "saftkit/transform.hpp"
#include "text_util.hpp"

namespace saftkit {

namespace {

bool is_fourier(const SaftMatrix& m) {
  return m == make_matrix(0, 1, -1, 0, 0, 0);
}

VerificationReport make_report(std::string_view name, const SaftMatrix& m,
                               const GridSpec& grid, double residual,
                               Tolerance tol, std::string subject = {}) {
  VerificationReport r{std::string(name), std::move(subject), residual,
                       tol.value_or(default_tolerance(name, m)),
                       false, m, grid, {}};
  r.passed = r.residual <= r.tolerance;
  return r;
}

void note_support(VerificationReport& r, double truncated,
                  std::string_view what) {
  if (truncated > kSupportWarningThreshold) {
    r.notes.push_back("SupportWarning: " + std::string(what) + " loses " +
                      detail::format_real(truncated) +
                      " of its energy outside the grid window");
  }
}

std::vector<Complex> elementwise(std::span<const Complex> a,
                                 std::span<const Complex> b) {
  std::vector<Complex> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

std::vector<double> scaled(std::span<const double> xs, double factor) {
  std::vector<double> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = xs[k] * factor;
  return out;
}

// Phase-free identity at w/sqrt2 under the given evaluation matrix.
VerificationReport phase_free_report(std::string_view name,
                                     const SampledSignal& f,
                                     const SampledSignal& g,
                                     const SaftMatrix& m,
                                     const SaftMatrix& evaluation,
                                     Tolerance tol) {
  const OmegaGrid ws = conjugate_grid(f.grid(), m);
  const ConvolutionOutput h = phase_free_convolve_detailed(f, g, m);
  const auto lhs = saft_direct_values(h.signal, m, ws.values());
  const auto half = scaled(ws.values(), 1.0 / std::numbers::sqrt2);
  const auto rhs = elementwise(saft_direct_values(f, evaluation, half),
                               saft_direct_values(g, evaluation, half));
  auto r = make_report(name, m, f.grid(), relative_residual(lhs, rhs), tol);
  note_support(r, h.truncated_energy, "phase-free convolution");
  return r;
}

}  // namespace

std::vector<std::string> identity_names() {
  return {std::string(identity::kOracleEquivalence),
          std::string(identity::kInverseRoundtrip),
          std::string(identity::kUnitarity),
          std::string(identity::kConvolutionTheorem),
          std::string(identity::kProductTheorem),
          std::string(identity::kPhaseFreeTheorem),
          std::string(identity::kLctSpecialCase),
          std::string(identity::kXiangQin)};
}

double default_tolerance(std::string_view name, const SaftMatrix& m) {
  if (name == identity::kOracleEquivalence) return 1e-10;
  if (name == identity::kInverseRoundtrip || name == identity::kUnitarity) {
    return 1e-6;
  }
  if (name == identity::kConvolutionTheorem) {
    return is_fourier(m) ? 1e-6 : 1e-4;
  }
  if (name == identity::kXiangQin) return is_fourier(m) ? 1e-4 : 1e-3;
  return 1e-4;
}

double relative_residual(std::span<const Complex> lhs,
                         std::span<const Complex> rhs) {
  if (lhs.size() != rhs.size()) {
    throw GridMismatchError("residual operands differ in length");
  }
  double diff = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    diff += std::norm(lhs[k] - rhs[k]);
    ref += std::norm(rhs[k]);
  }
  return ref > 0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

VerificationReport check_oracle_equivalence(const SampledSignal& f,
                                            const SaftMatrix& m,
                                            Tolerance tol) {
  const Spectrum fast = saft_fast(f, m);
  const auto direct = saft_direct_values(f, m, fast.omegas());
  return make_report(identity::kOracleEquivalence, m, f.grid(),
                     relative_residual(fast.values(), direct), tol);
}

VerificationReport check_inverse_roundtrip(const SampledSignal& f,
                                           const SaftMatrix& m,
                                           Tolerance tol) {
  const SampledSignal back = saft_inverse(saft_fast(f, m), m, f.grid());
  return make_report(identity::kInverseRoundtrip, m, f.grid(),
                     relative_residual(back.values(), f.values()), tol);
}

VerificationReport check_unitarity(const SampledSignal& f, const SaftMatrix& m,
                                   Tolerance tol) {
  if (m.b_is_zero()) throw DegenerateBError("unitarity check requires b != 0");
  if (m.b() < 0) {
    auto r = make_report(identity::kUnitarity, m, f.grid(), 0.0, tol);
    r.notes.push_back("skipped: unitarity is only certified for b > 0");
    return r;
  }
  const double before = l2_norm(f);
  const double after = l2_norm(saft_fast(f, m));
  const double diff = std::abs(after - before);
  return make_report(identity::kUnitarity, m, f.grid(),
                     before > 0 ? diff / before : diff, tol);
}

VerificationReport check_convolution_theorem(const SampledSignal& f,
                                             const SampledSignal& g,
                                             const SaftMatrix& m,
                                             Tolerance tol) {
  const OmegaGrid ws = conjugate_grid(f.grid(), m);
  const ConvolutionOutput h = saft_convolve_detailed(f, g, m);
  const auto lhs = saft_direct_values(h.signal, m, ws.values());
  const auto F = saft_direct_values(f, m, ws.values());
  const auto G = saft_direct_values(g, m, ws.values());
  std::vector<Complex> rhs(F.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    rhs[k] = phase_factor_conv(m, ws.values()[k]) * F[k] * G[k];
  }
  auto r = make_report(identity::kConvolutionTheorem, m, f.grid(),
                       relative_residual(lhs, rhs), tol);
  note_support(r, h.truncated_energy, "SAFT convolution");
  return r;
}

VerificationReport check_product_theorem(const SampledSignal& f,
                                         const SampledSignal& g,
                                         const SaftMatrix& m, Tolerance tol) {
  const OmegaGrid ws = conjugate_grid(f.grid(), m);
  const auto lhs =
      saft_direct_values(product_modulated(f, g, m), m, ws.values());
  const Spectrum F = saft_direct(f, m, ws);
  const Spectrum G = saft_direct(g, m, ws);
  const SpectralConvolutionOutput rhs = spectral_convolve_inv_detailed(F, G, m);
  auto r = make_report(identity::kProductTheorem, m, f.grid(),
                       relative_residual(lhs, rhs.spectrum.values()), tol);
  note_support(r, rhs.truncated_energy, "spectral convolution");
  return r;
}

VerificationReport check_phase_free_theorem(const SampledSignal& f,
                                            const SampledSignal& g,
                                            const SaftMatrix& m,
                                            Tolerance tol) {
  return phase_free_report(identity::kPhaseFreeTheorem, f, g, m,
                           half_offset_matrix(m), tol);
}

VerificationReport check_lct_special_case(const SampledSignal& f,
                                          const SampledSignal& g,
                                          const SaftMatrix& m,
                                          Tolerance tol) {
  if (m.has_offset()) {
    throw OffsetError("the LCT special case requires p = q = 0");
  }
  return phase_free_report(identity::kLctSpecialCase, f, g, m, m, tol);
}

VerificationReport check_xiang_qin(const SampledSignal& f,
                                   const SampledSignal& g, const SaftMatrix& m,
                                   Tolerance tol) {
  const OmegaGrid ws = conjugate_grid(f.grid(), m);
  const auto lhs =
      saft_direct_values(pointwise_product(f, g), m, ws.values());
  const Spectrum rhs = xiang_qin_product_rhs(f, g, m, ws);
  return make_report(identity::kXiangQin, m, f.grid(),
                     relative_residual(lhs, rhs.values()), tol);
}

std::vector<SaftMatrix> default_matrices() {
  return {make_matrix(0, 1, -1, 0, 0, 0),
          preset("frft", std::vector<double>{std::numbers::pi / 4}),
          preset("fresnel", std::vector<double>{2.0}),
          make_matrix(1, 2, 0.5, 2, 0.3, -0.4),
          make_matrix(1, 2, 0.5, 2, 0, 0)};
}

SuiteConfig default_suite() {
  SuiteConfig config;
  const GeneratorSpec g1{SignalKind::kGaussian, 1.0};
  const GeneratorSpec g2{SignalKind::kGaussian, 1.5};
  GeneratorSpec chirp{SignalKind::kChirp, 1.2};
  chirp.rate = 0.5;
  config.signals = {g1, g2, chirp};
  config.pairs = {{g1, g2}};
  config.matrices = default_matrices();
  return config;
}

std::string describe(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case SignalKind::kGaussian:
      return "gaussian(sigma=" + detail::format_real(spec.sigma) +
             ",t0=" + detail::format_real(spec.t0) + ")";
    case SignalKind::kChirp:
      return "chirp(rate=" + detail::format_real(spec.rate) +
             ",sigma=" + detail::format_real(spec.sigma) + ")";
    case SignalKind::kRect:
      return "rect(width=" + detail::format_real(spec.width) + ")";
  }
  return "signal";
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  const bool run_all = config.identities.empty();
  const std::vector<std::string> names =
      run_all ? identity_names() : config.identities;
  for (const auto& name : names) {
    bool known = false;
    for (const auto& candidate : identity_names()) known |= candidate == name;
    if (!known) throw ParamError("unknown identity '" + name + "'");
  }

  std::vector<VerificationReport> reports;
  auto guarded = [&](std::string_view name, const SaftMatrix& m,
                     std::string subject, auto&& body) {
    try {
      VerificationReport r = body();
      r.subject = std::move(subject);
      reports.push_back(std::move(r));
    } catch (const std::exception& e) {
      auto r = make_report(name, m, config.grid,
                           std::numeric_limits<double>::infinity(),
                           config.tolerance, std::move(subject));
      r.notes.push_back(std::string("error: ") + e.what());
      reports.push_back(std::move(r));
    }
  };

  for (const SaftMatrix& m : config.matrices) {
    for (const std::string& name : names) {
      const bool single = name == identity::kOracleEquivalence ||
                          name == identity::kInverseRoundtrip ||
                          name == identity::kUnitarity;
      if (name == identity::kLctSpecialCase && run_all && m.has_offset()) {
        continue;
      }
      if (single) {
        for (const GeneratorSpec& spec : config.signals) {
          guarded(name, m, describe(spec), [&] {
            const SampledSignal f = generate(spec, config.grid);
            if (name == identity::kOracleEquivalence) {
              return check_oracle_equivalence(f, m, config.tolerance);
            }
            if (name == identity::kInverseRoundtrip) {
              return check_inverse_roundtrip(f, m, config.tolerance);
            }
            return check_unitarity(f, m, config.tolerance);
          });
        }
        continue;
      }
      for (const auto& [fs, gs] : config.pairs) {
        guarded(name, m, describe(fs) + "|" + describe(gs), [&] {
          const SampledSignal f = generate(fs, config.grid);
          const SampledSignal g = generate(gs, config.grid);
          if (name == identity::kConvolutionTheorem) {
            return check_convolution_theorem(f, g, m, config.tolerance);
          }
          if (name == identity::kProductTheorem) {
            return check_product_theorem(f, g, m, config.tolerance);
          }
          if (name == identity::kPhaseFreeTheorem) {
            return check_phase_free_theorem(f, g, m, config.tolerance);
          }
          if (name == identity::kLctSpecialCase) {
            return check_lct_special_case(f, g, m, config.tolerance);
          }
          return check_xiang_qin(f, g, m, config.tolerance);
        });
      }
    }
  }
  return reports;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "identity,matrix,residual,tolerance,passed\n";
  for (const auto& r : reports) {
    out += r.identity + ",\"" + format_matrix(r.matrix) + "\"," +
           detail::format_real(r.residual) + "," +
           detail::format_real(r.tolerance) + "," +
           (r.passed ? "true" : "false") + "\n";
  }
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json item;
    item["identity"] = r.identity;
    item["subject"] = r.subject;
    item["matrix"] = {{"a", r.matrix.a()}, {"b", r.matrix.b()},
                      {"c", r.matrix.c()}, {"d", r.matrix.d()},
                      {"p", r.matrix.p()}, {"q", r.matrix.q()},
                      {"text", format_matrix(r.matrix)}};
    if (std::isfinite(r.residual)) {
      item["residual"] = r.residual;
    } else {
      item["residual"] = nullptr;
    }
    item["tolerance"] = r.tolerance;
    item["passed"] = r.passed;
    item["grid"] = {{"n", r.grid.size()},
                    {"t_min", r.grid.t_min()},
                    {"t_max", r.grid.t_max()}};
    item["notes"] = r.notes;
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

namespace {

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace

void write_reports_csv(const std::vector<VerificationReport>& reports,
                       const std::filesystem::path& path) {
  write_text(reports_to_csv(reports), path);
}

void write_reports_json(const std::vector<VerificationReport>& reports,
                        const std::filesystem::path& path) {
  write_text(reports_to_json(reports), path);
}

}  // namespace saftkit
