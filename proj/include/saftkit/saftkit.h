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


/* C interface to saftkit. Objects are opaque handles owned by the caller and
 * released with the matching *_destroy function. Every fallible call returns a
 * saft_status; on failure saft_last_error() holds a message for the calling
 * thread until its next failing call. Complex arrays are interleaved
 * (re, im) doubles. */

#ifndef SAFTKIT_SAFTKIT_H_
#define SAFTKIT_SAFTKIT_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum saft_status {
  SAFT_OK = 0,
  SAFT_ERR_DETERMINANT = 1,
  SAFT_ERR_NON_FINITE = 2,
  SAFT_ERR_UNKNOWN_PRESET = 3,
  SAFT_ERR_DEGENERATE_B = 4,
  SAFT_ERR_DEGENERATE_BRANCH = 5,
  SAFT_ERR_NEGATIVE_D = 6,
  SAFT_ERR_GRID = 7,
  SAFT_ERR_PARAM = 8,
  SAFT_ERR_IO = 9,
  SAFT_ERR_FORMAT = 10,
  SAFT_ERR_RANGE = 11,
  SAFT_ERR_GRID_MISMATCH = 12,
  SAFT_ERR_OFFSET = 13,
  SAFT_ERR_INVALID_ARGUMENT = 14, /* null pointer or short buffer */
  SAFT_ERR_INTERNAL = 15
} saft_status;

typedef struct saft_matrix saft_matrix;
typedef struct saft_signal saft_signal;
typedef struct saft_spectrum saft_spectrum;
typedef struct saft_report_list saft_report_list;

const char* saft_version(void);
const char* saft_status_string(saft_status status);
const char* saft_last_error(void);

/* ---- matrices ---- */

saft_status saft_matrix_create(double a, double b, double c, double d,
                               double p, double q, saft_matrix** out);
/* "a,b,c,d;p,q" or "preset[:params]". */
saft_status saft_matrix_parse(const char* text, saft_matrix** out);
saft_status saft_matrix_preset(const char* name, const double* params,
                               size_t count, saft_matrix** out);
/* out[6] = a, b, c, d, p, q. */
saft_status saft_matrix_get(const saft_matrix* m, double out[6]);
/* Writes the text form into buf (NUL-terminated) when it fits; *needed gets
 * the length including the terminator. */
saft_status saft_matrix_format(const saft_matrix* m, char* buf, size_t size,
                               size_t* needed);
saft_status saft_matrix_inverse(const saft_matrix* m, saft_matrix** out);
saft_status saft_matrix_half_offset(const saft_matrix* m, saft_matrix** out);
void saft_matrix_destroy(saft_matrix* m);

/* Scalar kernel pieces; each writes one complex value to out[2]. */
saft_status saft_kernel_normalization(double b, double out[2]);
saft_status saft_kernel_eval(const saft_matrix* m, double t, double omega,
                             double out[2]);
saft_status saft_phase_constant(const saft_matrix* m, double out[2]);
saft_status saft_phase_factor_conv(const saft_matrix* m, double omega,
                                   double out[2]);
saft_status saft_phase_factor_prod(const saft_matrix* m, double t,
                                   double out[2]);

/* ---- signals ---- */

typedef enum saft_signal_kind {
  SAFT_SIGNAL_GAUSSIAN = 0,
  SAFT_SIGNAL_CHIRP = 1,
  SAFT_SIGNAL_RECT = 2
} saft_signal_kind;

typedef struct saft_generator {
  saft_signal_kind kind;
  double sigma;
  double t0;
  double rate;
  double width;
} saft_generator;

/* sigma 1, t0 0, rate 0, width 1, Gaussian. */
void saft_generator_init(saft_generator* spec);

saft_status saft_signal_generate(const saft_generator* spec, size_t n,
                                 double t_min, double t_max,
                                 saft_signal** out);
saft_status saft_signal_create(size_t n, double t_min, double t_max,
                               const double* values, saft_signal** out);
saft_status saft_signal_read(const char* path, saft_signal** out);
saft_status saft_signal_write(const saft_signal* f, const char* path);
size_t saft_signal_size(const saft_signal* f);
saft_status saft_signal_grid(const saft_signal* f, double* t_min,
                             double* t_max);
/* Copies size() complex samples; capacity counts complex entries. */
saft_status saft_signal_values(const saft_signal* f, double* out,
                               size_t capacity);
saft_status saft_signal_l2_norm(const saft_signal* f, double* out);
void saft_signal_destroy(saft_signal* f);

/* ---- spectra ---- */

saft_status saft_spectrum_read(const char* path, saft_spectrum** out);
saft_status saft_spectrum_write(const saft_spectrum* s, const char* path);
size_t saft_spectrum_size(const saft_spectrum* s);
saft_status saft_spectrum_omegas(const saft_spectrum* s, double* out,
                                 size_t capacity);
saft_status saft_spectrum_values(const saft_spectrum* s, double* out,
                                 size_t capacity);
saft_status saft_spectrum_l2_norm(const saft_spectrum* s, double* out);
void saft_spectrum_destroy(saft_spectrum* s);

/* ---- transforms ---- */

/* Conjugate frequency grid of an n-point grid on [t_min, t_max). */
saft_status saft_conjugate_grid(size_t n, double t_min, double t_max,
                                const saft_matrix* m, double* out,
                                size_t capacity);
saft_status saft_transform_fast(const saft_signal* f, const saft_matrix* m,
                                saft_spectrum** out);
/* omegas == NULL selects the conjugate grid. */
saft_status saft_transform_direct(const saft_signal* f, const saft_matrix* m,
                                  const double* omegas, size_t count,
                                  saft_spectrum** out);
saft_status saft_transform_inverse(const saft_spectrum* s,
                                   const saft_matrix* m, size_t n,
                                   double t_min, double t_max,
                                   saft_signal** out);
/* b = 0 branch; omegas == NULL evaluates on the signal's own grid. */
saft_status saft_transform_b0(const saft_signal* f, const saft_matrix* m,
                              const double* omegas, size_t count,
                              saft_spectrum** out);

/* ---- convolution ---- */

typedef enum saft_conv_operator {
  SAFT_CONV_STD = 0,
  SAFT_CONV_SAFT = 1,
  SAFT_CONV_PHASE_FREE = 2
} saft_conv_operator;

/* m may be NULL for SAFT_CONV_STD and is ignored there. */
saft_status saft_convolve(const saft_signal* f, const saft_signal* g,
                          const saft_matrix* m, saft_conv_operator op,
                          saft_signal** out);

/* ---- verification ---- */

typedef struct saft_verify_options {
  size_t n;
  double t_min;
  double t_max;
  /* NULL / 0 selects every identity. */
  const char* const* identities;
  size_t identity_count;
  /* NULL / 0 selects the default matrices. */
  const saft_matrix* const* matrices;
  size_t matrix_count;
  int has_tolerance;
  double tolerance;
} saft_verify_options;

typedef struct saft_report_view {
  const char* identity;
  const char* subject;
  double residual;
  double tolerance;
  int passed;
  double matrix[6];
  size_t note_count;
} saft_report_view;

/* Default corpus on 1024 points over [-20, 20). */
void saft_verify_options_init(saft_verify_options* options);
saft_status saft_verify_run(const saft_verify_options* options,
                            saft_report_list** out);
size_t saft_report_count(const saft_report_list* list);
/* Pointers in the view stay valid until the list is destroyed. */
saft_status saft_report_get(const saft_report_list* list, size_t index,
                            saft_report_view* out);
const char* saft_report_note(const saft_report_list* list, size_t index,
                             size_t note);
int saft_report_all_passed(const saft_report_list* list);
saft_status saft_report_write_csv(const saft_report_list* list,
                                  const char* path);
saft_status saft_report_write_json(const saft_report_list* list,
                                   const char* path);
void saft_report_list_destroy(saft_report_list* list);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SAFTKIT_SAFTKIT_H_ */
