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

#include "incalg/involutions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "incalg/error.hpp"

namespace incalg {

namespace {

std::size_t bit_index(ElementMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

void check_sizes(const Poset& poset, const SignDiagonal& d) {
  if (d.size() != poset.size()) {
    throw Error(ErrorCode::kSizeMismatch, "diagonal has " + std::to_string(d.size()) +
                                              " entries, poset has " +
                                              std::to_string(poset.size()));
  }
}

std::string pair_name(const Poset& poset, const Pair& p) {
  return "(" + poset.label(p.first) + ", " + poset.label(p.second) + ")";
}

// Number of steps in the longest chain from i to j, for every comparable pair.
std::vector<std::size_t> chain_lengths(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> len(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (ElementMask s = poset.below(j); s != 0; s &= s - 1) {
      const std::size_t i = bit_index(s);
      std::size_t best = 0;
      for (ElementMask t = poset.open_interval(i, j); t != 0; t &= t - 1) {
        best = std::max(best, len[i * n + bit_index(t)]);
      }
      len[i * n + j] = best + 1;
    }
  }
  return len;
}

// sum_{i<t<j} g(i,t) g(t,j)
FieldElem inner_sum(const Poset& poset, const PrimeField& field, const InvolutionMatrix& g,
                    std::size_t i, std::size_t j) {
  FieldElem sum = field.zero();
  for (ElementMask t = poset.open_interval(i, j); t != 0; t &= t - 1) {
    const std::size_t k = bit_index(t);
    sum = field.add(sum, field.mul(g.at(i, k), g.at(k, j)));
  }
  return sum;
}

}  // namespace

InvolutionMatrix InvolutionMatrix::negated(const PrimeField& field) const {
  InvolutionMatrix out = *this;
  for (auto& c : out.cells_) c = field.neg(c);
  return out;
}

nlohmann::ordered_json InvolutionMatrix::to_json(const Poset& poset) const {
  nlohmann::ordered_json diag = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n_; ++i) diag.push_back(at(i, i).value);
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [i, j] : poset.comparable_pairs()) {
    entries[std::to_string(i) + "," + std::to_string(j)] = at(i, j).value;
  }
  return nlohmann::ordered_json{{"diag", diag}, {"entries", entries}};
}

std::vector<Pair> free_positions(const Poset& poset, const SignDiagonal& d) {
  check_sizes(poset, d);
  std::vector<Pair> out;
  for (const auto& [i, j] : poset.comparable_pairs()) {
    if (d.is_minus(i) != d.is_minus(j)) out.emplace_back(i, j);
  }
  return out;
}

bool is_involution(const Poset& poset, const PrimeField& field, const InvolutionMatrix& g) {
  const std::size_t n = poset.size();
  if (g.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.contains(g.at(i, i)) || field.mul(g.at(i, i), g.at(i, i)) != field.one()) {
      return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const FieldElem v = g.at(i, j);
      if (!field.contains(v)) return false;
      if (!poset.less(i, j)) {
        if (v != field.zero()) return false;
        continue;
      }
      FieldElem sq = field.add(field.mul(g.at(i, i), v), field.mul(v, g.at(j, j)));
      sq = field.add(sq, inner_sum(poset, field, g, i, j));
      if (sq != field.zero()) return false;
    }
  }
  return true;
}

InvolutionBuilder::InvolutionBuilder(const Poset& poset, const SignDiagonal& d,
                                     const PrimeField& field)
    : poset_(poset), diag_(d), field_(field), free_(free_positions(poset, d)) {
  const std::size_t n = poset.size();
  const auto len = chain_lengths(poset);
  for (const auto& [i, j] : poset.comparable_pairs()) {
    if (d.is_minus(i) == d.is_minus(j)) dependent_.emplace_back(i, j);
  }
  std::stable_sort(dependent_.begin(), dependent_.end(), [&](const Pair& a, const Pair& b) {
    return len[a.first * n + a.second] < len[b.first * n + b.second];
  });
}

InvolutionMatrix InvolutionBuilder::build(std::span<const FieldElem> values) const {
  if (values.size() != free_.size()) {
    throw Error(ErrorCode::kKeyMismatch, "expected " + std::to_string(free_.size()) +
                                             " free values, got " +
                                             std::to_string(values.size()));
  }
  const std::size_t n = poset_.size();
  InvolutionMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) g.set(i, i, diag_.is_minus(i) ? field_.minus_one() : field_.one());
  for (std::size_t k = 0; k < free_.size(); ++k) {
    if (!field_.contains(values[k])) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "free value " + std::to_string(values[k].value) + " is not reduced mod " +
                      std::to_string(field_.modulus()));
    }
    g.set(free_[k].first, free_[k].second, values[k]);
  }
  // -(2 g_ii)^{-1} = -(g_ii / 2) since g_ii = +-1.
  const FieldElem half = field_.inv_two();
  for (const auto& [i, j] : dependent_) {
    const FieldElem scale = diag_.is_minus(i) ? half : field_.neg(half);
    g.set(i, j, field_.mul(scale, inner_sum(poset_, field_, g, i, j)));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (ElementMask s = poset_.above(i); s != 0; s &= s - 1) {
      const std::size_t j = bit_index(s);
      FieldElem sq = field_.add(field_.mul(g.at(i, i), g.at(i, j)), field_.mul(g.at(i, j), g.at(j, j)));
      sq = field_.add(sq, inner_sum(poset_, field_, g, i, j));
      if (sq != field_.zero()) {
        throw Error(ErrorCode::kResidualConstraintViolation,
                    "g^2 != e at " + pair_name(poset_, {i, j}) + " for diagonal " +
                        diag_.to_string());
      }
    }
  }
  return g;
}

InvolutionMatrix build_involution(const Poset& poset, const SignDiagonal& d,
                                  const PrimeField& field, const FreeAssignment& free) {
  InvolutionBuilder builder(poset, d, field);
  std::vector<FieldElem> values;
  values.reserve(builder.free().size());
  for (const auto& pos : builder.free()) {
    const auto it = free.find(pos);
    if (it == free.end()) {
      throw Error(ErrorCode::kKeyMismatch, "no value for free position " + pair_name(poset, pos));
    }
    values.push_back(it->second);
  }
  if (free.size() != values.size()) {
    for (const auto& [pos, v] : free) {
      if (!std::binary_search(builder.free().begin(), builder.free().end(), pos)) {
        throw Error(ErrorCode::kKeyMismatch,
                    "(" + std::to_string(pos.first) + ", " + std::to_string(pos.second) +
                        ") is not a free position for diagonal " + d.to_string());
      }
    }
  }
  return builder.build(values);
}

std::uint64_t enumerate_involutions(const Poset& poset, const PrimeField& field,
                                    const std::optional<SignDiagonal>& d,
                                    const InvolutionVisitor& visit,
                                    const EnumerateOptions& options) {
  std::vector<SignDiagonal> diagonals;
  if (d) {
    check_sizes(poset, *d);
    diagonals.push_back(*d);
  } else {
    if (poset.size() > 30) {
      throw Error(ErrorCode::kBudgetExceeded, "too many diagonals to enumerate");
    }
    for (ElementMask mask = 0; mask < (ElementMask{1} << poset.size()); ++mask) {
      diagonals.push_back(SignDiagonal::from_mask(poset.size(), mask));
    }
  }

  // p^k <= budget, checked without overflow.
  auto within_budget = [&](std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < k; ++e) {
      if (total > options.budget_per_diagonal / field.modulus()) return false;
      total *= field.modulus();
    }
    return total <= options.budget_per_diagonal;
  };
  for (const auto& diag : diagonals) {
    const std::size_t k = free_positions(poset, diag).size();
    if (!within_budget(k)) {
      throw Error(ErrorCode::kBudgetExceeded,
                  std::to_string(field.modulus()) + "^" + std::to_string(k) +
                      " involutions for diagonal " + diag.to_string() + " exceed the budget of " +
                      std::to_string(options.budget_per_diagonal));
    }
  }

  std::uint64_t visited = 0;
  for (const auto& diag : diagonals) {
    InvolutionBuilder builder(poset, diag, field);
    std::vector<FieldElem> values(builder.free().size(), field.zero());
    bool more = true;
    while (more) {
      ++visited;
      if (!visit(diag, builder.build(values))) return visited;
      // Odometer with the last position varying fastest.
      more = false;
      for (std::size_t pos = values.size(); pos-- > 0;) {
        if (values[pos].value + 1 < field.modulus()) {
          ++values[pos].value;
          more = true;
          break;
        }
        values[pos] = field.zero();
      }
    }
  }
  return visited;
}

}  // namespace incalg
