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

#include "incalg/error.hpp"

namespace incalg {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kEmptyPoset: return "EmptyPoset";
    case ErrorCode::kDuplicateElementDeclaration: return "DuplicateElementDeclaration";
    case ErrorCode::kUnknownElementInRelation: return "UnknownElementInRelation";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNegativeExponent: return "NegativeExponent";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kResidualConstraintViolation: return "ResidualConstraintViolation";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNoClosedForm: return "NoClosedForm";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace incalg
