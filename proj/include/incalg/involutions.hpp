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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "incalg/gf_prime.hpp"
#include "incalg/poset.hpp"
#include "incalg/sign_diagonal.hpp"

namespace incalg {

/// An element of I(X, GF(p)) stored densely as an n x n upper triangular
/// array; cells outside the order relation are zero.
class InvolutionMatrix {
 public:
  InvolutionMatrix() = default;
  explicit InvolutionMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  FieldElem at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }
  void set(std::size_t i, std::size_t j, FieldElem v) { cells_.at(i * n_ + j) = v; }

  InvolutionMatrix negated(const PrimeField& field) const;

  /// {"diag": [...], "entries": {"i,j": value, ...}} over the comparable
  /// pairs of `poset` in lexicographic order, values as residues in [0, p).
  nlohmann::ordered_json to_json(const Poset& poset) const;

  friend bool operator==(const InvolutionMatrix&, const InvolutionMatrix&) = default;
  friend auto operator<=>(const InvolutionMatrix&, const InvolutionMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<FieldElem> cells_;
};

/// Values for the free (opposite-sign) positions of one diagonal.
using FreeAssignment = std::map<Pair, FieldElem>;

/// Comparable pairs (i, j) with d_i != d_j, lexicographic.
/// Throws Error(kSizeMismatch).
std::vector<Pair> free_positions(const Poset& poset, const SignDiagonal& d);

/// True iff g^2 = e, where (g^2)(x, y) = sum over x <= t <= y of g(x, t) g(t, y).
/// A nonzero entry off the order relation also yields false.
bool is_involution(const Poset& poset, const PrimeField& field, const InvolutionMatrix& g);

/// Builds involutions for one (poset, diagonal, field) triple. Free entries
/// are copied verbatim; each same-sign entry is solved from
/// (d_i + d_j) g_ij + sum_{i<t<j} g_it g_tj = 0, i.e.
/// g_ij = -(2 d_i)^{-1} sum g_it g_tj, in order of increasing longest chain
/// between the endpoints. Every result is checked against g^2 = e.
class InvolutionBuilder {
 public:
  InvolutionBuilder(const Poset& poset, const SignDiagonal& d, const PrimeField& field);

  const std::vector<Pair>& free() const noexcept { return free_; }

  /// `values[k]` goes to free()[k]. Throws Error(kKeyMismatch) on a length
  /// mismatch and Error(kResidualConstraintViolation) if the square check fails.
  InvolutionMatrix build(std::span<const FieldElem> values) const;

 private:
  Poset poset_;
  SignDiagonal diag_;
  PrimeField field_;
  std::vector<Pair> free_;
  std::vector<Pair> dependent_;  // in fill order
};

/// Throws Error(kKeyMismatch) unless the keys of `free` are exactly
/// free_positions(poset, d).
InvolutionMatrix build_involution(const Poset& poset, const SignDiagonal& d,
                                  const PrimeField& field, const FreeAssignment& free);

struct EnumerateOptions {
  /// Upper bound on p^{#free positions} for any single diagonal.
  std::uint64_t budget_per_diagonal = 1'000'000;
};

/// Called once per involution; return false to stop early.
using InvolutionVisitor = std::function<bool(const SignDiagonal&, const InvolutionMatrix&)>;

/// Visits every involution with diagonal `d` (or with every diagonal in
/// increasing mask order), free assignments in lexicographic order with the
/// first free position varying slowest. The budget is checked for all
/// requested diagonals before the first visit. Returns the number visited.
std::uint64_t enumerate_involutions(const Poset& poset, const PrimeField& field,
                                    const std::optional<SignDiagonal>& d,
                                    const InvolutionVisitor& visit,
                                    const EnumerateOptions& options = {});

}  // namespace incalg
