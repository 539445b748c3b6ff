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

#pragma once

#include <complex>
#include <vector>

namespace saftkit::detail {

enum class FftSign { kForward, kBackward };

// Unnormalized DFT in place: X_k = sum_n x_n exp(-+2 pi j n k / N).
void fft(std::vector<std::complex<double>>& data, FftSign sign);

// Full linear convolution sum_i a_i b_{s-i}, s = 0..|a|+|b|-2, via a
// zero-padded FFT. Commutative bit-for-bit.
std::vector<std::complex<double>> linear_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b);

}  // namespace saftkit::detail
