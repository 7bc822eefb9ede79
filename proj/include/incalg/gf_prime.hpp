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

#include <cstdint>
#include <ostream>

namespace incalg {

__extension__ typedef unsigned __int128 uint128_t;
__extension__ typedef __int128 int128_t;

/// Residue in [0, p). Carries no modulus; arithmetic goes through PrimeField.
struct FieldElem {
  std::uint64_t value = 0;

  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem e) { return os << e.value; }

/// GF(p) for an odd prime p <= 2^61.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

  /// Throws Error(kEvenCharacteristic) for p = 2 and Error(kNonPrimeModulus)
  /// for composite p, p < 2, or p above kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem minus_one() const noexcept { return {p_ - 1}; }
  /// Reduces any signed integer into the field.
  FieldElem from_int(std::int64_t v) const noexcept;

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    const std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<std::uint64_t>(static_cast<uint128_t>(a.value) * b.value % p_)};
  }
  /// Throws Error(kDivisionByZero) for a = 0.
  FieldElem inv(FieldElem a) const;
  /// 2^{-1} = (p + 1) / 2.
  FieldElem inv_two() const noexcept { return {(p_ + 1) / 2}; }

  bool contains(FieldElem a) const noexcept { return a.value < p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace incalg
