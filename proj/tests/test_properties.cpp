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

// Randomized invariants. Every generator is seeded so failures reproduce.
#include <doctest.h>

#include <numeric>
#include <random>

#include "incalg/counting.hpp"
#include "incalg/gf_prime.hpp"
#include "incalg/oracle.hpp"
#include "incalg/verify.hpp"

using namespace incalg;

namespace {

constexpr int kTrials = 200;

std::vector<Pair> relations_of(const Poset& p) { return p.comparable_pairs(); }

Poset dual(const Poset& p) {
  std::vector<Pair> rel;
  for (const auto& [i, j] : relations_of(p)) rel.emplace_back(j, i);
  return Poset(p.labels(), rel);
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a." + l);
  for (const auto& l : b.labels()) labels.push_back("b." + l);
  std::vector<Pair> rel = relations_of(a);
  for (const auto& [i, j] : relations_of(b)) rel.emplace_back(i + a.size(), j + a.size());
  return Poset(std::move(labels), rel);
}

Poset shuffled(const Poset& p, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) labels[perm[i]] = p.label(i);
  std::vector<Pair> rel;
  for (const auto& [i, j] : relations_of(p)) rel.emplace_back(perm[i], perm[j]);
  return Poset(std::move(labels), rel);
}

std::size_t comparability_components(const Poset& p) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : relations_of(p)) parent[find(i)] = find(j);
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += find(i) == i ? 1 : 0;
  return c;
}

bool well_formed(const Poset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.less(i, i)) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      if (j <= i || (p.above(j) & ~p.above(i)) != 0 || !((p.below(j) >> i) & 1U)) return false;
    }
  }
  return true;
}

QPoly random_poly(std::mt19937_64& rng) {
  QPoly r;
  const int terms = static_cast<int>(rng() % 5);
  for (int k = 0; k < terms; ++k) {
    const auto c = static_cast<std::int64_t>(rng() % 2001) - 1000;
    r += QPoly::monomial(c, static_cast<std::int64_t>(rng() % 12));
  }
  return r;
}

}  // namespace

TEST_CASE("random posets are closed linear extensions and render round trips") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < kTrials; ++t) {
    const Poset p = verify::random_poset(12, rng);
    CHECK(well_formed(p));
    CHECK(parse_poset(p.render()) == p);
    CHECK(well_formed(shuffled(p, rng)));
  }
}

TEST_CASE("generic count: value at 1, parity, constant term, sign") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < kTrials; ++t) {
    const Poset p = verify::random_poset(10, rng);
    const QPoly g = generic_count(p);
    CHECK(g.eval(1) == BigInt(1) << p.size());
    CHECK(g.coefficient(0) == BigInt(1) << comparability_components(p));
    for (const auto& [e, c] : g.terms()) {
      CHECK(c > 0);
      CHECK(c % 2 == 0);
    }
  }
}

TEST_CASE("generic count is invariant under duality and relabeling") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < kTrials; ++t) {
    const Poset p = verify::random_poset(9, rng);
    const QPoly g = generic_count(p);
    CHECK(generic_count(dual(p)) == g);
    CHECK(generic_count(shuffled(p, rng)) == g);
  }
}

TEST_CASE("generic count is multiplicative over disjoint unions") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Poset a = verify::random_poset(7, rng);
    const Poset b = verify::random_poset(7, rng);
    CHECK(generic_count(disjoint_union(a, b)) == generic_count(a) * generic_count(b));
  }
}

TEST_CASE("opposite pairs are symmetric under global negation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < kTrials; ++t) {
    const Poset p = verify::random_poset(16, rng);
    const auto d = SignDiagonal::from_mask(p.size(), rng());
    CHECK(opposite_pair_count(p, d) == opposite_pair_count(p, d.negated()));
    CHECK(d.excess() % 2 == p.size() % 2);
  }
}

TEST_CASE("oracle agrees with the generic count at p = 3 on random posets") {
  std::mt19937_64 rng(6);
  const PrimeField f(3);
  for (int t = 0; t < 40; ++t) {
    const Poset p = verify::random_poset(5, rng);
    CHECK(oracle::brute_force_count(p, f) == generic_count(p).eval(3));
  }
}

TEST_CASE("closed forms: nonnegative coefficients and generic degree") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const QPoly r = rhombus_count(n, m);
      CHECK(r.degree() == generic_count(rhombus(n, m)).degree());
      for (const auto& [e, c] : r.terms()) CHECK(c > 0);
      for (std::size_t l = 1; l <= 3; ++l) {
        const QPoly y = y_count(n, m, l);
        CHECK(y.degree() == generic_count(y_poset(n, m, l)).degree());
        for (const auto& [e, c] : y.terms()) CHECK(c > 0);
      }
    }
  }
}

TEST_CASE("polynomial ring axioms and evaluation homomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < kTrials; ++t) {
    const QPoly a = random_poly(rng);
    const QPoly b = random_poly(rng);
    const QPoly c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QPoly());
    const auto q = static_cast<std::uint64_t>(rng() % 50) + 2;
    CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
    CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
    CHECK(QPoly::parse(a.to_string()) == a);
    CHECK(QPoly::from_json(a.to_json()) == a);
    const QPoly ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {3ULL, 5ULL, 1000003ULL, 4294967311ULL}) {
    const PrimeField f(p);
    for (int t = 0; t < kTrials; ++t) {
      const FieldElem a{rng() % p};
      const FieldElem b{rng() % p};
      const FieldElem c{rng() % p};
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}
