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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace incalg {

using ElementMask = std::uint64_t;

/// Mask with the low `n` bits set (n <= 64).
constexpr ElementMask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~ElementMask{0} : (ElementMask{1} << n) - 1;
}

/// Index pair (i, j) with x_i < x_j.
using Pair = std::pair<std::size_t, std::size_t>;

/// A finite poset stored as strict, transitively closed up-sets.
///
/// Element indices always form a linear extension: if x_i < x_j then i < j.
/// Instances are immutable once constructed.
class Poset {
 public:
  static constexpr std::size_t kMaxSize = 64;

  /// Builds the poset generated by `relations` (pairs of indices into
  /// `labels` meaning labels[a] < labels[b]). The relations need not be
  /// covers or closed. Elements are reindexed by a stable topological sort
  /// that breaks ties by position in `labels`.
  ///
  /// Throws Error(kEmptyPoset), Error(kTooLarge) or Error(kCycleDetected).
  Poset(std::vector<std::string> labels, std::span<const Pair> relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// { j : x_i < x_j }
  ElementMask above(std::size_t i) const { return above_.at(i); }
  /// { j : x_j < x_i }
  ElementMask below(std::size_t i) const { return below_.at(i); }

  bool less(std::size_t i, std::size_t j) const { return (above_.at(i) >> j) & 1U; }
  bool comparable(std::size_t i, std::size_t j) const {
    return i == j || less(i, j) || less(j, i);
  }

  /// Elements strictly between i and j.
  ElementMask open_interval(std::size_t i, std::size_t j) const {
    return above_.at(i) & below_.at(j);
  }

  ElementMask all() const noexcept { return low_bits(size()); }

  std::size_t comparable_pair_count() const noexcept;
  /// All (i, j) with x_i < x_j in lexicographic order.
  std::vector<Pair> comparable_pairs() const;

  /// Cover relations (Hasse diagram edges) in lexicographic order.
  std::vector<Pair> covers() const;

  /// Text form accepted by parse_poset: an `elements:` line followed by
  /// one `a < b` line per cover relation.
  std::string render() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementMask> above_;
  std::vector<ElementMask> below_;
};

/// Parses the line-oriented text format, or the JSON form when the first
/// non-blank character is `{`.
Poset parse_poset(std::string_view text);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// One minimum x0 with pairwise incomparable chains of the given lengths above it.
Poset star_of_chains(std::span<const std::size_t> lengths);
/// Main chain x0 < x1 < ... < x_{n+1} plus a side chain y1 < ... < ym with
/// x0 < y1 and ym < x_{n+1}.
Poset rhombus(std::size_t n, std::size_t m);
/// Stem r1 < ... < rn below two incomparable chains s1..sm and t1..tl.
Poset y_poset(std::size_t n, std::size_t m, std::size_t l);

/// Family spec grammar: `chain:N`, `antichain:N`, `star:M1,M2,...`,
/// `rhombus:N,M`, `y:N,M,L`.
Poset family_poset(std::string_view spec);

enum class FamilyKind { kChain, kStarOfChains, kRhombus, kY, kGeneral };

struct FamilyShape {
  FamilyKind kind = FamilyKind::kGeneral;
  /// Chain: {n}; StarOfChains: branch lengths; Rhombus: {n, m}; Y: {n, m, l}.
  std::vector<std::size_t> params;

  std::string to_string() const;
  friend bool operator==(const FamilyShape&, const FamilyShape&) = default;
};

/// Every named family `poset` is isomorphic to, in the order Chain,
/// StarOfChains, Rhombus, Y; `{General}` when none applies. Branch order in
/// the parameters follows the smallest element index of each branch.
std::vector<FamilyShape> recognize_family(const Poset& poset);

}  // namespace incalg
