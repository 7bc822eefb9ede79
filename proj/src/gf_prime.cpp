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

#include "incalg/gf_prime.hpp"

#include <string>

#include "incalg/error.hpp"

namespace incalg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2) {
    throw Error(ErrorCode::kEvenCharacteristic,
                "characteristic 2 is not supported; the field size must be odd");
  }
  if (p > kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::kNonPrimeModulus, std::to_string(p) + " is not an odd prime");
  }
}

FieldElem PrimeField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.value % p_ == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  // Extended Euclid on signed 128-bit to stay clear of overflow near 2^61.
  int128_t r0 = p_, r1 = a.value, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const int128_t quot = r0 / r1;
    int128_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return {static_cast<std::uint64_t>(t0)};
}

}  // namespace incalg
