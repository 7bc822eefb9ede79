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
#include <functional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "incalg/gf_prime.hpp"
#include "incalg/poset.hpp"
#include "incalg/sign_diagonal.hpp"

// Exhaustive solver for g^2 = e in I(X, GF(p)). Deliberately independent of
// the counting and construction code so it can serve as ground truth.
namespace incalg::oracle {

using Count = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Off-diagonal values of one solution, indexed like Poset::comparable_pairs().
using SolutionVisitor = std::function<void(std::span<const FieldElem>)>;

/// Number of g with g^2 = e. Every diagonal in {+1,-1}^n is scanned and
/// every off-diagonal value in GF(p) is tried; a partial filling is discarded
/// as soon as one square entry is decided nonzero. `budget` bounds the number
/// of search nodes over the whole call (Error(kBudgetExceeded)).
Count brute_force_count(const Poset& poset, const PrimeField& field,
                        std::uint64_t budget = kDefaultBudget);

/// Same scan restricted to one diagonal.
Count brute_force_count_diagonal(const Poset& poset, const SignDiagonal& d,
                                 const PrimeField& field, std::uint64_t budget = kDefaultBudget);

/// Calls `visit` for every solution with diagonal `d`, in the scan's order.
/// Returns the number of solutions.
std::uint64_t brute_force_solutions(const Poset& poset, const SignDiagonal& d,
                                    const PrimeField& field, const SolutionVisitor& visit,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace incalg::oracle
