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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "incalg/poset.hpp"

// Cross-checks every counting route against every other on a small corpus.
namespace incalg::verify {

struct Options {
  std::size_t max_elems = 5;
  std::vector<std::uint64_t> primes{3, 5};
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::uint64_t oracle_budget = 100'000'000;
  /// Posets up to this size also compare the oracle's solution set with
  /// the constructor's, at the smallest prime.
  std::size_t solution_set_max = 4;
};

struct CorpusEntry {
  std::string name;
  Poset poset;
};

/// Random poset on 1..max_elems elements: a random permutation, each forward
/// pair related with probability 1/2, then transitive closure.
Poset random_poset(std::size_t max_elems, std::mt19937_64& rng);

/// Every named-family instance with at most max_elems elements, then
/// `samples` random posets drawn from mt19937_64(seed).
std::vector<CorpusEntry> corpus(const Options& options);

struct Check {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const noexcept { return failed == 0; }
};

struct Report {
  Options options;
  std::size_t named = 0;
  std::size_t random = 0;
  std::vector<Check> checks;

  bool ok() const noexcept;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Throws Error(kEvenCharacteristic) / Error(kNonPrimeModulus) for a bad prime
/// and Error(kParameterOutOfRange) for an empty prime list or max_elems = 0.
Report run(const Options& options = {});

}  // namespace incalg::verify
