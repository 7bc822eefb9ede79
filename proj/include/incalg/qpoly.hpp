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
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace incalg {

using BigInt = boost::multiprecision::cpp_int;
/// Exact nonnegative count.
using BigCount = BigInt;

/// Exact polynomial in q with integer coefficients, stored sparsely.
/// No zero coefficient is ever stored.
class QPoly {
 public:
  using Exponent = std::uint32_t;
  using Terms = std::map<Exponent, BigInt>;

  QPoly() = default;

  /// c * q^e. Throws Error(kNegativeExponent) for e < 0.
  static QPoly monomial(const BigInt& c, std::int64_t e);
  static QPoly constant(const BigInt& c) { return monomial(c, 0); }
  /// sum_e counts[e] * q^e
  static QPoly from_histogram(std::span<const std::uint64_t> counts);

  /// Human form, e.g. "2q^4 + 8q^3 + 4q^2 + 2". Terms may come in any
  /// order; like terms are combined.
  static QPoly parse(std::string_view text);
  /// {"poly": {"<exponent>": "<decimal coefficient>", ...}}
  static QPoly from_json(const nlohmann::json& j);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  BigInt coefficient(Exponent e) const;

  BigInt eval(const BigInt& q) const;
  BigInt eval(std::uint64_t q) const { return eval(BigInt(q)); }

  /// Descending-exponent human form; "0" for the zero polynomial.
  std::string to_string() const;
  nlohmann::json to_json() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    r *= b;
    return r;
  }
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  friend QPoly operator*(const BigInt& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void add_term(Exponent e, const BigInt& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Binomial coefficient C(n, k). Throws Error(kOutOfRange) unless 0 <= k <= n.
BigInt binom(std::int64_t n, std::int64_t k);

}  // namespace incalg
