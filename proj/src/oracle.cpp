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


#include "incalg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "incalg/error.hpp"

namespace incalg::oracle {

namespace {

struct Entry {
  std::size_t i;
  std::size_t j;
  std::size_t slot;  // index into comparable_pairs()
  // (slot of g(i,t), slot of g(t,j)) for each i < t < j
  std::vector<std::pair<std::size_t, std::size_t>> products;
};

class Scanner {
 public:
  Scanner(const Poset& poset, const PrimeField& field, std::uint64_t budget)
      : field_(field), budget_(budget) {
    const auto pairs = poset.comparable_pairs();
    const std::size_t n = poset.size();
    std::vector<std::size_t> slot_of(n * n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      slot_of[pairs[k].first * n + pairs[k].second] = k;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      Entry e{i, j, k, {}};
      for (ElementMask t = poset.open_interval(i, j); t != 0; t &= t - 1) {
        const auto m = static_cast<std::size_t>(std::countr_zero(t));
        e.products.emplace_back(slot_of[i * n + m], slot_of[m * n + j]);
      }
      entries_.push_back(std::move(e));
    }
    // Shorter intervals first: each square entry then only involves values
    // already assigned, so it can be tested the moment (i,j) is set.
    std::stable_sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.products.size() < b.products.size();
    });
    values_.assign(pairs.size(), field.zero());
  }

  std::uint64_t scan(const SignDiagonal& d, const SolutionVisitor* visit) {
    diag_ = &d;
    visit_ = visit;
    solutions_ = 0;
    descend(0);
    return solutions_;
  }

 private:
  void charge() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle search exceeded the budget of " + std::to_string(budget_) + " nodes");
    }
  }

  FieldElem sign(std::size_t i) const {
    return diag_->is_minus(i) ? field_.minus_one() : field_.one();
  }

  void descend(std::size_t level) {
    charge();
    if (level == entries_.size()) {
      ++solutions_;
      if (visit_ != nullptr) (*visit_)(values_);
      return;
    }
    const Entry& e = entries_[level];
    const FieldElem di = sign(e.i);
    const FieldElem dj = sign(e.j);
    for (std::uint64_t v = 0; v < field_.modulus(); ++v) {
      const FieldElem x{v};
      // (g^2)(i,j) = d_i x + x d_j + sum g(i,t) g(t,j)
      FieldElem sq = field_.add(field_.mul(di, x), field_.mul(x, dj));
      for (const auto& [a, b] : e.products) {
        sq = field_.add(sq, field_.mul(values_[a], values_[b]));
      }
      if (sq != field_.zero()) {
        charge();
        continue;
      }
      values_[e.slot] = x;
      descend(level + 1);
    }
    values_[e.slot] = field_.zero();
  }

  const PrimeField& field_;
  std::uint64_t budget_;
  std::vector<Entry> entries_;
  std::vector<FieldElem> values_;
  const SignDiagonal* diag_ = nullptr;
  const SolutionVisitor* visit_ = nullptr;
  std::uint64_t solutions_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_diagonal(const Poset& poset, const SignDiagonal& d) {
  if (d.size() != poset.size()) {
    throw Error(ErrorCode::kSizeMismatch, "diagonal has " + std::to_string(d.size()) +
                                              " entries, poset has " +
                                              std::to_string(poset.size()));
  }
}

}  // namespace

Count brute_force_count(const Poset& poset, const PrimeField& field, std::uint64_t budget) {
  const std::size_t n = poset.size();
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "2^" + std::to_string(n) +
                                                " diagonals exceed the oracle budget of " +
                                                std::to_string(budget));
  }
  Scanner scanner(poset, field, budget);
  Count total = 0;
  for (ElementMask mask = 0; mask < (ElementMask{1} << n); ++mask) {
    total += scanner.scan(SignDiagonal::from_mask(n, mask), nullptr);
  }
  return total;
}

Count brute_force_count_diagonal(const Poset& poset, const SignDiagonal& d,
                                 const PrimeField& field, std::uint64_t budget) {
  check_diagonal(poset, d);
  Scanner scanner(poset, field, budget);
  return scanner.scan(d, nullptr);
}

std::uint64_t brute_force_solutions(const Poset& poset, const SignDiagonal& d,
                                    const PrimeField& field, const SolutionVisitor& visit,
                                    std::uint64_t budget) {
  check_diagonal(poset, d);
  Scanner scanner(poset, field, budget);
  return scanner.scan(d, &visit);
}

}  // namespace incalg::oracle
