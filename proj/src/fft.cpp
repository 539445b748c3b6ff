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

#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <new>

namespace saftkit::detail {

namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void fft(std::vector<std::complex<double>>& data, FftSign sign) {
  if (data.empty()) return;
  // FFTW picks codelets by buffer alignment; an fftw_malloc buffer keeps that
  // choice, and so the rounding, identical from run to run.
  const std::size_t n = data.size();
  auto* buf = fftw_alloc_complex(n);
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, data.data(), n * sizeof(fftw_complex));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                            sign == FftSign::kForward ? FFTW_FORWARD
                                                      : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::memcpy(static_cast<void*>(data.data()), buf, n * sizeof(fftw_complex));
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
  fftw_free(buf);
}

std::vector<std::complex<double>> linear_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fft(fa, FftSign::kForward);
  fft(fb, FftSign::kForward);
  for (std::size_t k = 0; k < n; ++k) fa[k] *= fb[k];
  fft(fa, FftSign::kBackward);

  const double scale = 1.0 / static_cast<double>(n);
  std::vector<std::complex<double>> out(out_len);
  for (std::size_t s = 0; s < out_len; ++s) out[s] = fa[s] * scale;
  return out;
}

}  // namespace saftkit::detail
