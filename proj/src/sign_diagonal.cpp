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

#include "incalg/sign_diagonal.hpp"

#include "incalg/error.hpp"

namespace incalg {

SignDiagonal SignDiagonal::from_mask(std::size_t size, ElementMask minus_mask) {
  if (size > Poset::kMaxSize) {
    throw Error(ErrorCode::kTooLarge, "diagonal longer than " + std::to_string(Poset::kMaxSize));
  }
  SignDiagonal d;
  d.size_ = size;
  d.minus_ = minus_mask & low_bits(size);
  return d;
}

SignDiagonal SignDiagonal::from_signs(std::span<const int> signs) {
  if (signs.size() > Poset::kMaxSize) return from_mask(signs.size(), 0);  // throws
  ElementMask mask = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == -1) {
      mask |= ElementMask{1} << i;
    } else if (signs[i] != 1) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "diagonal entries must be +1 or -1, got " + std::to_string(signs[i]));
    }
  }
  return from_mask(signs.size(), mask);
}

SignDiagonal SignDiagonal::constant(std::size_t size, int sign) {
  return from_mask(size, sign < 0 ? ~ElementMask{0} : 0);
}

SignDiagonal SignDiagonal::parse(std::string_view text) {
  std::vector<int> signs;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  const bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  while (true) {
    skip();
    std::string_view rest = text.substr(pos);
    if (rest.starts_with("+1") || rest.starts_with("-1")) {
      signs.push_back(rest[0] == '-' ? -1 : 1);
      pos += 2;
    } else if (rest.starts_with("1")) {
      signs.push_back(1);
      pos += 1;
    } else if (rest.starts_with("+") || rest.starts_with("-")) {
      signs.push_back(rest[0] == '-' ? -1 : 1);
      pos += 1;
    } else {
      throw Error(ErrorCode::kParse, "bad diagonal '" + std::string(text) +
                                         "': expected +, -, 1 or -1 at offset " +
                                         std::to_string(pos));
    }
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') {
      throw Error(ErrorCode::kParse, "bad diagonal '" + std::string(text) + "': missing ')'");
    }
    ++pos;
  }
  skip();
  if (pos != text.size()) {
    throw Error(ErrorCode::kParse, "bad diagonal '" + std::string(text) + "': trailing text");
  }
  return from_signs(signs);
}

std::vector<int> SignDiagonal::signs() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = sign(i);
  return out;
}

std::string SignDiagonal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i > 0) s += ',';
    s += is_minus(i) ? '-' : '+';
  }
  return s + ")";
}

}  // namespace incalg
