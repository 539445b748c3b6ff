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

#include <stdexcept>
#include <string>

namespace saftkit {

// Numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  kDeterminant = 1,
  kNonFinite = 2,
  kUnknownPreset = 3,
  kDegenerateB = 4,
  kDegenerateBranch = 5,
  kNegativeD = 6,
  kGrid = 7,
  kParam = 8,
  kIo = 9,
  kFormat = 10,
  kRange = 11,
  kGridMismatch = 12,
  kOffset = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class CodedError : public Error {
 public:
  explicit CodedError(const std::string& what) : Error(C, what) {}
};

using DeterminantError = CodedError<ErrorCode::kDeterminant>;
using NonFiniteError = CodedError<ErrorCode::kNonFinite>;
using UnknownPresetError = CodedError<ErrorCode::kUnknownPreset>;
// b = 0 passed to a formula that divides by b.
using DegenerateBError = CodedError<ErrorCode::kDegenerateB>;
// b != 0 passed to the b = 0 branch.
using DegenerateBranchError = CodedError<ErrorCode::kDegenerateBranch>;
using NegativeDError = CodedError<ErrorCode::kNegativeD>;
using GridError = CodedError<ErrorCode::kGrid>;
using ParamError = CodedError<ErrorCode::kParam>;
using IoError = CodedError<ErrorCode::kIo>;
using FormatError = CodedError<ErrorCode::kFormat>;
using RangeError = CodedError<ErrorCode::kRange>;
using GridMismatchError = CodedError<ErrorCode::kGridMismatch>;
using OffsetError = CodedError<ErrorCode::kOffset>;

}  // namespace saftkit
