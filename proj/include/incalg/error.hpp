// Copyright 2026 The incalg Authors
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
#include <string_view>

namespace incalg {

/// Every failure the core can report. The C API mirrors these one-to-one.
enum class ErrorCode {
  kParse = 1,
  kCycleDetected,
  kEmptyPoset,
  kDuplicateElementDeclaration,
  kUnknownElementInRelation,
  kParameterOutOfRange,
  kTooLarge,
  kNonPrimeModulus,
  kEvenCharacteristic,
  kDivisionByZero,
  kNegativeExponent,
  kOutOfRange,
  kParityViolation,
  kSizeMismatch,
  kKeyMismatch,
  kResidualConstraintViolation,
  kBudgetExceeded,
  kNoClosedForm,
  kInternal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace incalg
