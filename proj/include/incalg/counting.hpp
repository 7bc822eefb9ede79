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

// Involution counts g^2 = e in I(X, F_q), as polynomials in q.
//
// Every engine rests on one principle: for a fixed +-1 diagonal d, the
// entry at a comparable pair (i, j) is free when d_i != d_j and determined
// by shorter intervals when d_i == d_j. The number of involutions with
// diagonal d is therefore q^{#opposite-sign comparable pairs}. The generic
// engine sums that over all 2^n diagonals; the closed forms group the sum by
// the excess of each chain in the named families.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "incalg/poset.hpp"
#include "incalg/qpoly.hpp"
#include "incalg/sign_diagonal.hpp"

namespace incalg {

/// Free entries of an n-chain involution with diagonal excess p:
/// (n^2 - p^2) / 4 = k (n - k) with k = (n - p) / 2.
/// Throws Error(kParityViolation) unless p <= n and p = n (mod 2).
std::uint64_t chain_delta(std::size_t n, std::size_t excess);

/// #{(i, j) : x_i < x_j, d_i != d_j}. Throws Error(kSizeMismatch).
std::size_t opposite_pair_count(const Poset& poset, const SignDiagonal& d);

struct GenericOptions {
  /// Largest poset the 2^n enumeration accepts.
  std::size_t max_size = 30;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Sum over all 2^n sign diagonals of q^{opposite_pair_count}.
/// Throws Error(kTooLarge) when the poset exceeds options.max_size.
QPoly generic_count(const Poset& poset, const GenericOptions& options = {});

/// Involutions of the n x n upper triangular group.
QPoly slowik_count(std::size_t n);
/// Cofactor P(m) contributed by one extra branch of length m on a star.
QPoly star_cofactor(std::size_t m);
/// Star with a first chain of n elements above x0 and one branch of length m.
QPoly star_count(std::size_t n, std::size_t m);
/// slowik_count(m_1 + 1) * P(m_2) * ... * P(m_s).
QPoly multi_star_count(std::span<const std::size_t> lengths);
QPoly rhombus_count(std::size_t n, std::size_t m);
QPoly y_count(std::size_t n, std::size_t m, std::size_t l);

enum class Engine { kGeneric, kSlowik, kStar, kRhombus, kY };

std::string_view engine_name(Engine engine) noexcept;

/// Closed form for a recognized family. Throws Error(kNoClosedForm) for General.
std::pair<QPoly, Engine> closed_form(const FamilyShape& shape);

/// Closed form of the first recognized family, else the generic engine.
std::pair<QPoly, Engine> count_auto(const Poset& poset, const GenericOptions& options = {});

}  // namespace incalg
