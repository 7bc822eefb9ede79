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

#include <bit>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "incalg/poset.hpp"

namespace incalg {

/// A +-1 value per poset element, stored as the mask of -1 positions.
class SignDiagonal {
 public:
  SignDiagonal() = default;

  /// Bits of `minus_mask` at or above `size` are ignored.
  static SignDiagonal from_mask(std::size_t size, ElementMask minus_mask);
  /// Every value must be +1 or -1 (Error(kParameterOutOfRange) otherwise).
  static SignDiagonal from_signs(std::span<const int> signs);
  static SignDiagonal constant(std::size_t size, int sign);
  /// Comma-separated signs, each `+`, `-`, `1`, `+1` or `-1`, optionally in
  /// parentheses: "(+,-,-,+)" or "1,-1". Throws Error(kParse).
  static SignDiagonal parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  ElementMask minus_mask() const noexcept { return minus_; }
  bool is_minus(std::size_t i) const noexcept { return (minus_ >> i) & 1U; }
  int sign(std::size_t i) const noexcept { return is_minus(i) ? -1 : 1; }

  std::size_t minus_count() const noexcept {
    return static_cast<std::size_t>(std::popcount(minus_));
  }
  /// |sum of signs|
  std::size_t excess() const noexcept {
    const std::size_t k = minus_count();
    return size_ >= 2 * k ? size_ - 2 * k : 2 * k - size_;
  }

  SignDiagonal negated() const noexcept { return from_mask(size_, ~minus_); }
  std::vector<int> signs() const;
  /// e.g. "(+,-,-,+)"
  std::string to_string() const;

  friend bool operator==(const SignDiagonal&, const SignDiagonal&) = default;

 private:
  std::size_t size_ = 0;
  ElementMask minus_ = 0;
};

}  // namespace incalg
