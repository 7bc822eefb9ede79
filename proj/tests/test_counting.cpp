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

#include <doctest.h>

#include "incalg/counting.hpp"
#include "incalg/error.hpp"

using namespace incalg;

namespace {

QPoly P(const char* s) { return QPoly::parse(s); }

// sum_k C(n,k) q^{k(n-k)}: choose which k entries of the diagonal are -1.
QPoly chain_by_subsets(std::size_t n) {
  QPoly r;
  for (std::size_t k = 0; k <= n; ++k) r += QPoly::monomial(binom(n, k), k * (n - k));
  return r;
}

std::vector<std::size_t> L(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("delta") {
  CHECK(chain_delta(4, 2) == 3);
  CHECK(chain_delta(7, 7) == 0);
  CHECK(chain_delta(5, 1) == 6);
  CHECK_THROWS_AS(chain_delta(4, 1), Error);
  CHECK_THROWS_AS(chain_delta(3, 5), Error);
}

TEST_CASE("opposite pairs") {
  const Poset s = star_of_chains(L({2, 1}));
  const int d[] = {1, 1, -1, -1};
  CHECK(opposite_pair_count(s, SignDiagonal::from_signs(d)) == 3);
  CHECK(opposite_pair_count(chain(6), SignDiagonal::constant(6, -1)) == 0);
  const int dd[] = {1, -1, -1, 1};
  CHECK(opposite_pair_count(rhombus(1, 1), SignDiagonal::from_signs(dd)) == 4);
  CHECK_THROWS_AS(opposite_pair_count(chain(3), SignDiagonal::constant(2, 1)), Error);
}

TEST_CASE("generic count") {
  CHECK(generic_count(antichain(3)) == QPoly::constant(8));
  CHECK(generic_count(chain(2)) == P("2q + 2"));
  CHECK(generic_count(rhombus(1, 1)) == P("2q^4 + 8q^3 + 4q^2 + 2"));
  CHECK(generic_count(parse_poset("a < c\nb < c\na < d\nb < d")) == P("2q^4 + 12q^2 + 2"));
  GenericOptions small;
  small.max_size = 4;
  CHECK_THROWS_AS(generic_count(chain(5), small), Error);
}

TEST_CASE("generic count is thread-count independent") {
  GenericOptions one;
  one.threads = 1;
  GenericOptions four;
  four.threads = 4;
  const Poset p = y_poset(6, 5, 6);
  CHECK(generic_count(p, one) == generic_count(p, four));
}

TEST_CASE("slowik") {
  CHECK(slowik_count(1) == P("2"));
  CHECK(slowik_count(2) == P("2q + 2"));
  CHECK(slowik_count(3) == P("6q^2 + 2"));
  CHECK(slowik_count(5) == P("20q^6 + 10q^4 + 2"));
  for (std::size_t n = 1; n <= 20; ++n) CHECK(slowik_count(n) == chain_by_subsets(n));
}

TEST_CASE("star cofactor") {
  CHECK(star_cofactor(1) == P("q + 1"));
  CHECK(star_cofactor(3) == P("3q^4 + 4q^3 + 1"));
  CHECK(star_cofactor(14) ==
        P("6435q^56 + 5005q^54 + 3003q^50 + 1365q^44 + 455q^36 + 105q^26 + 15q^14 + 1"));
  // value at q = 1 is 2^m
  for (std::size_t m = 1; m <= 14; ++m) CHECK(star_cofactor(m).eval(1) == BigInt(1) << m);
}

TEST_CASE("stars") {
  CHECK(star_count(1, 1) == P("2q^2 + 4q + 2"));
  CHECK(star_count(0, 4) == star_cofactor(4) * BigInt(2));
  CHECK(star_count(2, 2) == P("6q^2 + 2") * P("3q^2 + 1"));
  CHECK(star_count(2, 2) == generic_count(star_of_chains(L({2, 2}))));
  CHECK(multi_star_count(L({1, 1, 1})) == P("2q^3 + 6q^2 + 6q + 2"));
  CHECK(multi_star_count(L({1, 1, 1})) == generic_count(star_of_chains(L({1, 1, 1}))));
  CHECK(multi_star_count(L({2})) == slowik_count(3));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) CHECK(multi_star_count(L({n, m})) == star_count(n, m));
  }
}

TEST_CASE("rhombus") {
  CHECK(rhombus_count(1, 2) == P("2q^6 + 12q^5 + 10q^4 + 4q^3 + 2q^2 + 2"));
  CHECK(rhombus_count(2, 2) == P("2q^8 + 16q^7 + 24q^6 + 8q^5 + 4q^4 + 8q^3 + 2"));
  CHECK(rhombus_count(1, 1) == P("2q^4 + 8q^3 + 4q^2 + 2"));
  CHECK(rhombus_count(3, 2) == rhombus_count(2, 3));
  CHECK_THROWS_AS(rhombus_count(0, 1), Error);
}

TEST_CASE("y poset") {
  CHECK(y_count(1, 1, 1) == P("2q^2 + 4q + 2"));
  CHECK(y_count(1, 2, 2) == P("18q^4 + 12q^2 + 2"));
  CHECK(y_count(3, 3, 3) == P("2q^18 + 12q^17 + 72q^16 + 144q^15 + 108q^14 + 36q^13 + 36q^12 + "
                              "48q^11 + 18q^10 + 4q^9 + 18q^8 + 12q^5 + 2"));
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t l = 1; l <= 5; ++l) {
      CHECK(y_count(1, m, l) == slowik_count(m + 1) * star_cofactor(l));
    }
  }
  CHECK_THROWS_AS(y_count(1, 0, 1), Error);
}

TEST_CASE("dispatch") {
  CHECK(count_auto(chain(5)) == std::pair{slowik_count(5), Engine::kSlowik});
  CHECK(count_auto(rhombus(2, 3)) == std::pair{rhombus_count(2, 3), Engine::kRhombus});
  CHECK(count_auto(y_poset(2, 1, 3)) == std::pair{y_count(2, 1, 3), Engine::kY});
  CHECK(count_auto(star_of_chains(L({3, 2, 2}))).second == Engine::kStar);
  CHECK(count_auto(antichain(3)).second == Engine::kGeneric);
  CHECK_THROWS_AS(closed_form(FamilyShape{}), Error);
  CHECK(engine_name(Engine::kRhombus) == "rhombus");
}

TEST_CASE("auto dispatch has no cap for closed forms") {
  GenericOptions tiny;
  tiny.max_size = 2;
  CHECK_NOTHROW(count_auto(chain(40), tiny));
  CHECK_THROWS_AS(count_auto(antichain(3), tiny), Error);
}
