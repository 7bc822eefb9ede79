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

#include "incalg/qpoly.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "incalg/error.hpp"

namespace incalg {

namespace {

QPoly::Exponent checked_exponent(std::int64_t e) {
  if (e < 0) {
    throw Error(ErrorCode::kNegativeExponent, "negative exponent " + std::to_string(e));
  }
  if (e > std::numeric_limits<QPoly::Exponent>::max()) {
    throw Error(ErrorCode::kOutOfRange, "exponent " + std::to_string(e) + " too large");
  }
  return static_cast<QPoly::Exponent>(e);
}

[[noreturn]] void bad_poly(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParse,
              "cannot parse polynomial '" + std::string(text) + "': " + std::string(why));
}

}  // namespace

QPoly QPoly::monomial(const BigInt& c, std::int64_t e) {
  QPoly p;
  p.add_term(checked_exponent(e), c);
  return p;
}

QPoly QPoly::from_histogram(std::span<const std::uint64_t> counts) {
  QPoly p;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 0) p.add_term(static_cast<Exponent>(e), BigInt(counts[e]));
  }
  return p;
}

void QPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t QPoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.rbegin()->first);
}

BigInt QPoly::coefficient(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPoly::eval(const BigInt& q) const {
  // Horner over the sparse exponents, highest first.
  BigInt acc = 0;
  std::int64_t prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0) acc *= boost::multiprecision::pow(q, static_cast<unsigned>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= boost::multiprecision::pow(q, static_cast<unsigned>(prev));
  return acc;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = c.str();
  return nlohmann::json{{"poly", coeffs}};
}

QPoly QPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("poly") || !j.at("poly").is_object()) {
    throw Error(ErrorCode::kParse, "polynomial JSON must look like {\"poly\": {...}}");
  }
  QPoly p;
  for (const auto& [key, value] : j.at("poly").items()) {
    if (!value.is_string()) throw Error(ErrorCode::kParse, "coefficients must be decimal strings");
    std::int64_t e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
      p.add_term(checked_exponent(e), BigInt(value.get<std::string>()));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad polynomial term '" + key + "'");
    }
  }
  return p;
}

QPoly QPoly::parse(std::string_view text) {
  QPoly p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(start, i - start);
  };

  skip_ws();
  if (i == text.size()) bad_poly(text, "empty");
  bool first = true;
  while (true) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      bad_poly(text, "expected '+' or '-'");
    }
    first = false;

    const auto coeff_digits = digits();
    BigInt coeff = coeff_digits.empty() ? BigInt(1) : BigInt(std::string(coeff_digits));
    std::int64_t e = 0;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < text.size() && text[i] == 'q') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const bool braced = i < text.size() && text[i] == '{';
        if (braced) ++i;
        const auto exp_digits = digits();
        if (exp_digits.empty()) bad_poly(text, "missing exponent");
        e = std::stoll(std::string(exp_digits));
        if (braced) {
          if (i >= text.size() || text[i] != '}') bad_poly(text, "unclosed '{'");
          ++i;
        }
      }
    } else if (coeff_digits.empty()) {
      bad_poly(text, "expected a term");
    }
    p.add_term(checked_exponent(e), sign * coeff);
    skip_ws();
    if (i == text.size()) break;
  }
  return p;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  QPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(checked_exponent(std::int64_t{ea} + eb), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

QPoly& QPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    throw Error(ErrorCode::kOutOfRange,
                "binom(" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace incalg
