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


#include "saftkit/saftkit.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "saftkit/convolution.hpp"
#include "saftkit/errors.hpp"
#include "saftkit/saft_matrix.hpp"
#include "saftkit/signal_grid.hpp"
#include "saftkit/transform.hpp"
#include "saftkit/verify.hpp"

struct saft_matrix {
  saftkit::SaftMatrix value;
};

struct saft_signal {
  saftkit::SampledSignal value;
};

struct saft_spectrum {
  saftkit::Spectrum value;
};

struct saft_report_list {
  std::vector<saftkit::VerificationReport> reports;
};

namespace {

using saftkit::Complex;

thread_local std::string g_last_error;

saft_status fail(saft_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
saft_status guard(Body&& body) noexcept {
  try {
    body();
    return SAFT_OK;
  } catch (const saftkit::Error& e) {
    return fail(static_cast<saft_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SAFT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SAFT_ERR_INTERNAL, e.what());
  }
}

#define SAFT_REQUIRE(cond)                                            \
  do {                                                                \
    if (!(cond)) return fail(SAFT_ERR_INVALID_ARGUMENT, #cond " failed"); \
  } while (0)

void put_complex(Complex z, double out[2]) {
  out[0] = z.real();
  out[1] = z.imag();
}

void copy_complex(std::span<const Complex> values, double* out) {
  for (std::size_t k = 0; k < values.size(); ++k) put_complex(values[k], out + 2 * k);
}

std::vector<Complex> read_complex(const double* values, std::size_t n) {
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = {values[2 * k], values[2 * k + 1]};
  return out;
}

template <typename T, typename... Args>
T* make_handle(Args&&... args) {
  return new T{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* saft_version(void) { return "0.1.0"; }

const char* saft_status_string(saft_status status) {
  switch (status) {
    case SAFT_OK: return "ok";
    case SAFT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SAFT_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  if (status >= SAFT_ERR_DETERMINANT && status <= SAFT_ERR_OFFSET) {
    return saftkit::error_code_name(static_cast<saftkit::ErrorCode>(status));
  }
  return "unknown status";
}

const char* saft_last_error(void) { return g_last_error.c_str(); }

saft_status saft_matrix_create(double a, double b, double c, double d,
                               double p, double q, saft_matrix** out) {
  SAFT_REQUIRE(out);
  return guard([&] {
    *out = make_handle<saft_matrix>(saftkit::make_matrix(a, b, c, d, p, q));
  });
}

saft_status saft_matrix_parse(const char* text, saft_matrix** out) {
  SAFT_REQUIRE(text && out);
  return guard([&] {
    *out = make_handle<saft_matrix>(saftkit::parse_matrix(text));
  });
}

saft_status saft_matrix_preset(const char* name, const double* params,
                               size_t count, saft_matrix** out) {
  SAFT_REQUIRE(name && out && (params || count == 0));
  return guard([&] {
    *out = make_handle<saft_matrix>(
        saftkit::preset(name, std::span<const double>(params, count)));
  });
}

saft_status saft_matrix_get(const saft_matrix* m, double out[6]) {
  SAFT_REQUIRE(m && out);
  const auto& v = m->value;
  const double entries[6] = {v.a(), v.b(), v.c(), v.d(), v.p(), v.q()};
  std::memcpy(out, entries, sizeof entries);
  return SAFT_OK;
}

saft_status saft_matrix_format(const saft_matrix* m, char* buf, size_t size,
                               size_t* needed) {
  SAFT_REQUIRE(m);
  const std::string text = saftkit::format_matrix(m->value);
  if (needed) *needed = text.size() + 1;
  if (!buf || size < text.size() + 1) {
    return fail(SAFT_ERR_INVALID_ARGUMENT, "buffer too small for matrix text");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return SAFT_OK;
}

saft_status saft_matrix_inverse(const saft_matrix* m, saft_matrix** out) {
  SAFT_REQUIRE(m && out);
  return guard([&] {
    *out = make_handle<saft_matrix>(saftkit::inverse_matrix(m->value));
  });
}

saft_status saft_matrix_half_offset(const saft_matrix* m, saft_matrix** out) {
  SAFT_REQUIRE(m && out);
  return guard([&] {
    *out = make_handle<saft_matrix>(saftkit::half_offset_matrix(m->value));
  });
}

void saft_matrix_destroy(saft_matrix* m) { delete m; }

saft_status saft_kernel_normalization(double b, double out[2]) {
  SAFT_REQUIRE(out);
  return guard([&] { put_complex(saftkit::kernel_normalization(b), out); });
}

saft_status saft_kernel_eval(const saft_matrix* m, double t, double omega,
                             double out[2]) {
  SAFT_REQUIRE(m && out);
  return guard([&] { put_complex(saftkit::kernel_eval(m->value, t, omega), out); });
}

saft_status saft_phase_constant(const saft_matrix* m, double out[2]) {
  SAFT_REQUIRE(m && out);
  return guard([&] { put_complex(saftkit::phase_constant_C(m->value), out); });
}

saft_status saft_phase_factor_conv(const saft_matrix* m, double omega,
                                   double out[2]) {
  SAFT_REQUIRE(m && out);
  return guard(
      [&] { put_complex(saftkit::phase_factor_conv(m->value, omega), out); });
}

saft_status saft_phase_factor_prod(const saft_matrix* m, double t,
                                   double out[2]) {
  SAFT_REQUIRE(m && out);
  return guard(
      [&] { put_complex(saftkit::phase_factor_prod(m->value, t), out); });
}

void saft_generator_init(saft_generator* spec) {
  if (!spec) return;
  *spec = saft_generator{SAFT_SIGNAL_GAUSSIAN, 1.0, 0.0, 0.0, 1.0};
}

saft_status saft_signal_generate(const saft_generator* spec, size_t n,
                                 double t_min, double t_max,
                                 saft_signal** out) {
  SAFT_REQUIRE(spec && out);
  saftkit::GeneratorSpec g;
  switch (spec->kind) {
    case SAFT_SIGNAL_GAUSSIAN: g.kind = saftkit::SignalKind::kGaussian; break;
    case SAFT_SIGNAL_CHIRP: g.kind = saftkit::SignalKind::kChirp; break;
    case SAFT_SIGNAL_RECT: g.kind = saftkit::SignalKind::kRect; break;
    default: return fail(SAFT_ERR_PARAM, "unknown signal kind");
  }
  g.sigma = spec->sigma;
  g.t0 = spec->t0;
  g.rate = spec->rate;
  g.width = spec->width;
  return guard([&] {
    *out = make_handle<saft_signal>(
        saftkit::generate(g, saftkit::make_grid(n, t_min, t_max)));
  });
}

saft_status saft_signal_create(size_t n, double t_min, double t_max,
                               const double* values, saft_signal** out) {
  SAFT_REQUIRE(values && out);
  return guard([&] {
    *out = make_handle<saft_signal>(saftkit::SampledSignal(
        saftkit::make_grid(n, t_min, t_max), read_complex(values, n)));
  });
}

saft_status saft_signal_read(const char* path, saft_signal** out) {
  SAFT_REQUIRE(path && out);
  return guard([&] { *out = make_handle<saft_signal>(saftkit::read_signal(path)); });
}

saft_status saft_signal_write(const saft_signal* f, const char* path) {
  SAFT_REQUIRE(f && path);
  return guard([&] { saftkit::write_signal(f->value, path); });
}

size_t saft_signal_size(const saft_signal* f) { return f ? f->value.size() : 0; }

saft_status saft_signal_grid(const saft_signal* f, double* t_min,
                             double* t_max) {
  SAFT_REQUIRE(f && t_min && t_max);
  *t_min = f->value.grid().t_min();
  *t_max = f->value.grid().t_max();
  return SAFT_OK;
}

saft_status saft_signal_values(const saft_signal* f, double* out,
                               size_t capacity) {
  SAFT_REQUIRE(f && out && capacity >= f->value.size());
  copy_complex(f->value.values(), out);
  return SAFT_OK;
}

saft_status saft_signal_l2_norm(const saft_signal* f, double* out) {
  SAFT_REQUIRE(f && out);
  *out = saftkit::l2_norm(f->value);
  return SAFT_OK;
}

void saft_signal_destroy(saft_signal* f) { delete f; }

saft_status saft_spectrum_read(const char* path, saft_spectrum** out) {
  SAFT_REQUIRE(path && out);
  return guard(
      [&] { *out = make_handle<saft_spectrum>(saftkit::read_spectrum(path)); });
}

saft_status saft_spectrum_write(const saft_spectrum* s, const char* path) {
  SAFT_REQUIRE(s && path);
  return guard([&] { saftkit::write_spectrum(s->value, path); });
}

size_t saft_spectrum_size(const saft_spectrum* s) {
  return s ? s->value.size() : 0;
}

saft_status saft_spectrum_omegas(const saft_spectrum* s, double* out,
                                 size_t capacity) {
  SAFT_REQUIRE(s && out && capacity >= s->value.size());
  const auto omegas = s->value.omegas();
  std::copy(omegas.begin(), omegas.end(), out);
  return SAFT_OK;
}

saft_status saft_spectrum_values(const saft_spectrum* s, double* out,
                                 size_t capacity) {
  SAFT_REQUIRE(s && out && capacity >= s->value.size());
  copy_complex(s->value.values(), out);
  return SAFT_OK;
}

saft_status saft_spectrum_l2_norm(const saft_spectrum* s, double* out) {
  SAFT_REQUIRE(s && out);
  return guard([&] { *out = saftkit::l2_norm(s->value); });
}

void saft_spectrum_destroy(saft_spectrum* s) { delete s; }

saft_status saft_conjugate_grid(size_t n, double t_min, double t_max,
                                const saft_matrix* m, double* out,
                                size_t capacity) {
  SAFT_REQUIRE(m && out && capacity >= n);
  return guard([&] {
    const auto grid = saftkit::conjugate_grid(
        saftkit::make_grid(n, t_min, t_max), m->value);
    std::copy(grid.values().begin(), grid.values().end(), out);
  });
}

saft_status saft_transform_fast(const saft_signal* f, const saft_matrix* m,
                                saft_spectrum** out) {
  SAFT_REQUIRE(f && m && out);
  return guard([&] {
    *out = make_handle<saft_spectrum>(saftkit::saft_fast(f->value, m->value));
  });
}

saft_status saft_transform_direct(const saft_signal* f, const saft_matrix* m,
                                  const double* omegas, size_t count,
                                  saft_spectrum** out) {
  SAFT_REQUIRE(f && m && out);
  return guard([&] {
    const saftkit::OmegaGrid grid =
        omegas ? saftkit::OmegaGrid(std::vector<double>(omegas, omegas + count))
               : saftkit::conjugate_grid(f->value.grid(), m->value);
    *out = make_handle<saft_spectrum>(
        saftkit::saft_direct(f->value, m->value, grid));
  });
}

saft_status saft_transform_inverse(const saft_spectrum* s,
                                   const saft_matrix* m, size_t n,
                                   double t_min, double t_max,
                                   saft_signal** out) {
  SAFT_REQUIRE(s && m && out);
  return guard([&] {
    *out = make_handle<saft_signal>(saftkit::saft_inverse(
        s->value, m->value, saftkit::make_grid(n, t_min, t_max)));
  });
}

saft_status saft_transform_b0(const saft_signal* f, const saft_matrix* m,
                              const double* omegas, size_t count,
                              saft_spectrum** out) {
  SAFT_REQUIRE(f && m && out);
  return guard([&] {
    const saftkit::OmegaGrid grid(
        omegas ? std::vector<double>(omegas, omegas + count)
               : f->value.grid().points());
    *out = make_handle<saft_spectrum>(saftkit::saft_b0(f->value, m->value, grid));
  });
}

saft_status saft_convolve(const saft_signal* f, const saft_signal* g,
                          const saft_matrix* m, saft_conv_operator op,
                          saft_signal** out) {
  SAFT_REQUIRE(f && g && out && (m || op == SAFT_CONV_STD));
  return guard([&] {
    switch (op) {
      case SAFT_CONV_STD:
        *out = make_handle<saft_signal>(saftkit::std_convolve(f->value, g->value));
        return;
      case SAFT_CONV_SAFT:
        *out = make_handle<saft_signal>(
            saftkit::saft_convolve(f->value, g->value, m->value));
        return;
      case SAFT_CONV_PHASE_FREE:
        *out = make_handle<saft_signal>(
            saftkit::phase_free_convolve(f->value, g->value, m->value));
        return;
    }
    throw saftkit::ParamError("unknown convolution operator");
  });
}

void saft_verify_options_init(saft_verify_options* options) {
  if (!options) return;
  *options = saft_verify_options{1024, -20.0, 20.0, nullptr, 0, nullptr, 0, 0, 0.0};
}

saft_status saft_verify_run(const saft_verify_options* options,
                            saft_report_list** out) {
  SAFT_REQUIRE(options && out);
  SAFT_REQUIRE(options->identities || options->identity_count == 0);
  SAFT_REQUIRE(options->matrices || options->matrix_count == 0);
  return guard([&] {
    saftkit::SuiteConfig config = saftkit::default_suite();
    config.grid = saftkit::make_grid(options->n, options->t_min, options->t_max);
    for (size_t k = 0; k < options->identity_count; ++k) {
      if (!options->identities[k]) throw saftkit::ParamError("null identity name");
      config.identities.emplace_back(options->identities[k]);
    }
    if (options->matrix_count > 0) {
      config.matrices.clear();
      for (size_t k = 0; k < options->matrix_count; ++k) {
        if (!options->matrices[k]) throw saftkit::ParamError("null matrix");
        config.matrices.push_back(options->matrices[k]->value);
      }
    }
    if (options->has_tolerance) config.tolerance = options->tolerance;
    *out = make_handle<saft_report_list>(saftkit::run_suite(config));
  });
}

size_t saft_report_count(const saft_report_list* list) {
  return list ? list->reports.size() : 0;
}

saft_status saft_report_get(const saft_report_list* list, size_t index,
                            saft_report_view* out) {
  SAFT_REQUIRE(list && out && index < list->reports.size());
  const auto& r = list->reports[index];
  out->identity = r.identity.c_str();
  out->subject = r.subject.c_str();
  out->residual = r.residual;
  out->tolerance = r.tolerance;
  out->passed = r.passed ? 1 : 0;
  const double entries[6] = {r.matrix.a(), r.matrix.b(), r.matrix.c(),
                             r.matrix.d(), r.matrix.p(), r.matrix.q()};
  std::memcpy(out->matrix, entries, sizeof entries);
  out->note_count = r.notes.size();
  return SAFT_OK;
}

const char* saft_report_note(const saft_report_list* list, size_t index,
                             size_t note) {
  if (!list || index >= list->reports.size()) return nullptr;
  const auto& notes = list->reports[index].notes;
  return note < notes.size() ? notes[note].c_str() : nullptr;
}

int saft_report_all_passed(const saft_report_list* list) {
  if (!list) return 0;
  for (const auto& r : list->reports) {
    if (!r.passed) return 0;
  }
  return 1;
}

saft_status saft_report_write_csv(const saft_report_list* list,
                                  const char* path) {
  SAFT_REQUIRE(list && path);
  return guard([&] { saftkit::write_reports_csv(list->reports, path); });
}

saft_status saft_report_write_json(const saft_report_list* list,
                                   const char* path) {
  SAFT_REQUIRE(list && path);
  return guard([&] { saftkit::write_reports_json(list->reports, path); });
}

void saft_report_list_destroy(saft_report_list* list) { delete list; }

}  // extern "C"
