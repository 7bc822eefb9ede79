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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "incalg/qpoly.hpp"

// Regeneration of the published count tables, compared row by row against
// the printed values shipped in data/.
namespace incalg::tables {

enum class RowStatus { kMatch, kMismatch, kMismatchErratum };

const char* status_name(RowStatus s) noexcept;

/// Oracle evaluation of a disputed row at a small prime.
struct Adjudication {
  std::uint64_t p = 0;
  BigInt oracle;
  BigInt computed;
  BigInt printed;
};

struct Row {
  std::vector<std::size_t> params;
  QPoly printed;
  QPoly computed;
  bool flagged = false;  // fixture marks the printed value as an erratum
  std::string note;
  RowStatus status = RowStatus::kMatch;
  /// Value at q = 1 of each polynomial; must equal 2^{#elements}.
  BigInt expected_sum;
  BigInt printed_sum;
  BigInt computed_sum;
  std::optional<Adjudication> adjudication;

  std::string label() const;  // "(1,1)"
};

struct Report {
  int which = 0;
  std::string title;
  std::vector<Row> rows;

  /// False on an unflagged MISMATCH, a computed polynomial with the wrong
  /// coefficient sum, or an oracle value disagreeing with the computed one.
  bool ok() const;
  std::size_t count(RowStatus s) const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct Options {
  std::uint64_t oracle_prime = 3;
  /// Only disputed rows whose computed value at oracle_prime is at most this
  /// are sent to the oracle.
  std::uint64_t oracle_limit = 10'000'000;
};

/// `which` is 2, 3 or 4 (Error(kParameterOutOfRange) otherwise).
Report reproduce(int which, const Options& options = {});

}  // namespace incalg::tables
