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

#include "incalg/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

namespace {

using i64 = std::int64_t;

// Excesses p in 1..n with n - p even; p = 0 is handled by the alpha terms.
std::vector<i64> odd_excesses(std::size_t n) {
  std::vector<i64> out;
  for (std::size_t p = (n % 2 == 0) ? 2 : 1; p <= n; p += 2) out.push_back(static_cast<i64>(p));
  return out;
}

// C(n, (n - p) / 2)
BigInt sign_choices(i64 n, i64 p) { return binom(n, (n - p) / 2); }

// acc += coeff * q^{quarter / 4}. Exponents arrive as quarter-units so that
// terms like (n^2 - p^2)/4 + (nm - ab)/2 are summed exactly before division.
void add_quarter_term(QPoly& acc, const BigInt& coeff, i64 quarter) {
  if (quarter % 4 != 0) {
    throw Error(ErrorCode::kInternal,
                "non-integral exponent " + std::to_string(quarter) + "/4 in closed form");
  }
  acc += QPoly::monomial(coeff, quarter / 4);
}

void require_positive(std::size_t v, const char* what) {
  if (v < 1) throw Error(ErrorCode::kParameterOutOfRange, std::string(what) + " must be >= 1");
}

void count_range(const std::vector<ElementMask>& above, std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& hist) {
  const std::size_t n = above.size();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // Opposite of d_i: the -1 set when d_i = +1, the +1 set otherwise.
      const ElementMask flip = ElementMask{0} - ((mask >> i) & 1U);
      e += static_cast<std::size_t>(std::popcount(above[i] & (mask ^ flip)));
    }
    ++hist[e];
  }
}

}  // namespace

std::uint64_t chain_delta(std::size_t n, std::size_t excess) {
  if (excess > n || (n - excess) % 2 != 0) {
    throw Error(ErrorCode::kParityViolation, "excess " + std::to_string(excess) +
                                                 " incompatible with chain length " +
                                                 std::to_string(n));
  }
  const std::uint64_t nn = n, pp = excess;
  return (nn * nn - pp * pp) / 4;
}

std::size_t opposite_pair_count(const Poset& poset, const SignDiagonal& d) {
  if (d.size() != poset.size()) {
    throw Error(ErrorCode::kSizeMismatch, "diagonal has " + std::to_string(d.size()) +
                                              " entries, poset has " +
                                              std::to_string(poset.size()));
  }
  const ElementMask minus = d.minus_mask();
  const ElementMask plus = poset.all() & ~minus;
  std::size_t total = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    total += static_cast<std::size_t>(
        std::popcount(poset.above(i) & (d.is_minus(i) ? plus : minus)));
  }
  return total;
}

QPoly generic_count(const Poset& poset, const GenericOptions& options) {
  const std::size_t n = poset.size();
  if (n > options.max_size || n >= 63) {
    throw Error(ErrorCode::kTooLarge, "generic count enumerates 2^" + std::to_string(n) +
                                          " diagonals; the cap is " +
                                          std::to_string(options.max_size) + " elements");
  }
  std::vector<ElementMask> above(n);
  for (std::size_t i = 0; i < n; ++i) above[i] = poset.above(i);
  const std::size_t max_exponent = poset.comparable_pair_count();

  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(total, 64))));
  // Small posets are not worth a thread.
  if (n < 16) workers = 1;

  std::vector<std::vector<std::uint64_t>> hists(workers,
                                                std::vector<std::uint64_t>(max_exponent + 1, 0));
  if (workers == 1) {
    count_range(above, 0, total, hists[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = w + 1 == workers ? total : begin + chunk;
      pool.emplace_back([&, w, begin, end] { count_range(above, begin, end, hists[w]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> merged(max_exponent + 1, 0);
  for (const auto& h : hists) {
    for (std::size_t e = 0; e <= max_exponent; ++e) merged[e] += h[e];
  }
  return QPoly::from_histogram(merged);
}

QPoly slowik_count(std::size_t n) {
  require_positive(n, "chain length");
  const auto nn = static_cast<i64>(n);
  QPoly result;
  if (n % 2 == 0) add_quarter_term(result, binom(nn, nn / 2), nn * nn);
  for (i64 p : odd_excesses(n)) {
    add_quarter_term(result, 2 * sign_choices(nn, p), nn * nn - p * p);
  }
  return result;
}

QPoly star_cofactor(std::size_t m) {
  require_positive(m, "branch length");
  const auto mm = static_cast<i64>(m);
  QPoly result;
  for (i64 p : odd_excesses(m)) {
    const BigInt c = sign_choices(mm, p);
    const i64 base = mm * mm - p * p;
    add_quarter_term(result, c, base + 2 * (mm + p));
    add_quarter_term(result, c, base + 2 * (mm - p));
  }
  if (m % 2 == 0) add_quarter_term(result, binom(mm, mm / 2), mm * mm + 2 * mm);
  return result;
}

QPoly star_count(std::size_t n, std::size_t m) {
  return slowik_count(n + 1) * star_cofactor(m);
}

QPoly multi_star_count(std::span<const std::size_t> lengths) {
  if (lengths.empty()) {
    throw Error(ErrorCode::kParameterOutOfRange, "star needs at least one branch");
  }
  for (std::size_t m : lengths) require_positive(m, "branch length");
  QPoly result = slowik_count(lengths[0] + 1);
  for (std::size_t k = 1; k < lengths.size(); ++k) result *= star_cofactor(lengths[k]);
  return result;
}

QPoly rhombus_count(std::size_t n_in, std::size_t m_in) {
  require_positive(n_in, "rhombus main chain length");
  require_positive(m_in, "rhombus side chain length");
  const auto n = static_cast<i64>(n_in);
  const auto m = static_cast<i64>(m_in);
  QPoly result;

  // a is the excess on x1..xn, b the excess on y1..ym.
  for (i64 a : odd_excesses(n_in)) {
    for (i64 b : odd_excesses(m_in)) {
      const BigInt c = 2 * sign_choices(n, a) * sign_choices(m, b);
      const i64 base = n * n + m * m - a * a - b * b;
      for (i64 side : {m + b, m - b}) {
        for (i64 main : {n + a, n - a}) add_quarter_term(result, c, base + 4 * (side + main));
      }
      add_quarter_term(result, 4 * c, base + 4 * (n + m + 1));
    }
  }

  // Corrections for excess 0 on an even chain.
  const bool n_even = n % 2 == 0;
  const bool m_even = m % 2 == 0;
  if (n_even) {
    for (i64 b : odd_excesses(m_in)) {
      const BigInt c = 2 * binom(n, n / 2) * sign_choices(m, b);
      const i64 base = n * n + m * m - b * b + 4 * (n + m);
      add_quarter_term(result, c, base + 4 * b);
      add_quarter_term(result, c, base - 4 * b);
      add_quarter_term(result, 2 * c, base + 4);
    }
  }
  if (m_even) {
    for (i64 a : odd_excesses(n_in)) {
      const BigInt c = 2 * sign_choices(n, a) * binom(m, m / 2);
      const i64 base = n * n + m * m - a * a + 4 * (n + m);
      add_quarter_term(result, c, base + 4 * a);
      add_quarter_term(result, c, base - 4 * a);
      add_quarter_term(result, 2 * c, base + 4);
    }
  }
  if (n_even && m_even) {
    const BigInt c = 2 * binom(n, n / 2) * binom(m, m / 2);
    const i64 base = n * n + m * m + 4 * (n + m);
    add_quarter_term(result, c, base + 4);
    add_quarter_term(result, c, base);
  }
  return result;
}

namespace {

// Which of the seven Y corrections apply, indexed [n even][m even][l even].
struct YCorrections {
  std::array<bool, 8> alpha{};  // alpha[1..7]
};

YCorrections y_corrections(bool n_even, bool m_even, bool l_even) {
  YCorrections y;
  auto& al = y.alpha;
  if (n_even && m_even && l_even) {
    al = {false, true, true, true, true, true, true, true};
  } else if (n_even && m_even) {
    al[1] = al[2] = al[4] = true;
  } else if (n_even && l_even) {
    al[1] = al[3] = al[5] = true;
  } else if (m_even && l_even) {
    al[2] = al[3] = al[6] = true;
  } else if (n_even) {
    al[1] = true;
  } else if (m_even) {
    al[2] = true;
  } else if (l_even) {
    al[3] = true;
  }
  return y;
}

}  // namespace

QPoly y_count(std::size_t n_in, std::size_t m_in, std::size_t l_in) {
  require_positive(n_in, "Y stem length");
  require_positive(m_in, "Y branch length");
  require_positive(l_in, "Y branch length");
  const auto n = static_cast<i64>(n_in);
  const auto m = static_cast<i64>(m_in);
  const auto l = static_cast<i64>(l_in);
  const i64 squares = n * n + m * m + l * l;
  const i64 stem_branch = 2 * n * (m + l);  // n(m + l)/2 in quarter units
  QPoly result;

  // a, b, c: excesses on the stem and the two branches.
  for (i64 a : odd_excesses(n_in)) {
    for (i64 b : odd_excesses(m_in)) {
      for (i64 c : odd_excesses(l_in)) {
        const BigInt k = 2 * sign_choices(n, a) * sign_choices(m, b) * sign_choices(l, c);
        const i64 base = squares - a * a - b * b - c * c + stem_branch;
        for (i64 cross : {a * (b + c), a * (b - c), -a * (b + c), -a * (b - c)}) {
          add_quarter_term(result, k, base + 2 * cross);
        }
      }
    }
  }

  const auto al = y_corrections(n % 2 == 0, m % 2 == 0, l % 2 == 0).alpha;
  if (al[1]) {
    for (i64 b : odd_excesses(m_in)) {
      for (i64 c : odd_excesses(l_in)) {
        const BigInt k = 4 * binom(n, n / 2) * sign_choices(m, b) * sign_choices(l, c);
        add_quarter_term(result, k, squares - b * b - c * c + stem_branch);
      }
    }
  }
  if (al[2]) {
    for (i64 a : odd_excesses(n_in)) {
      for (i64 c : odd_excesses(l_in)) {
        const BigInt k = 2 * sign_choices(n, a) * binom(m, m / 2) * sign_choices(l, c);
        const i64 base = squares - a * a - c * c + 2 * n * m;
        add_quarter_term(result, k, base + 2 * (n * l - a * c));
        add_quarter_term(result, k, base + 2 * (n * l + a * c));
      }
    }
  }
  if (al[3]) {
    for (i64 a : odd_excesses(n_in)) {
      for (i64 b : odd_excesses(m_in)) {
        const BigInt k = 2 * sign_choices(n, a) * sign_choices(m, b) * binom(l, l / 2);
        const i64 base = squares - a * a - b * b + 2 * l * n;
        add_quarter_term(result, k, base + 2 * (n * m - a * b));
        add_quarter_term(result, k, base + 2 * (n * m + a * b));
      }
    }
  }
  if (al[4]) {
    for (i64 c : odd_excesses(l_in)) {
      const BigInt k = 2 * binom(n, n / 2) * binom(m, m / 2) * sign_choices(l, c);
      add_quarter_term(result, k, squares - c * c + stem_branch);
    }
  }
  if (al[5]) {
    for (i64 b : odd_excesses(m_in)) {
      const BigInt k = 2 * binom(n, n / 2) * sign_choices(m, b) * binom(l, l / 2);
      add_quarter_term(result, k, squares - b * b + stem_branch);
    }
  }
  if (al[6]) {
    for (i64 a : odd_excesses(n_in)) {
      const BigInt k = 2 * sign_choices(n, a) * binom(m, m / 2) * binom(l, l / 2);
      add_quarter_term(result, k, squares - a * a + stem_branch);
    }
  }
  if (al[7]) {
    const BigInt k = binom(n, n / 2) * binom(m, m / 2) * binom(l, l / 2);
    add_quarter_term(result, k, squares + stem_branch);
  }
  return result;
}

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::kGeneric: return "generic";
    case Engine::kSlowik: return "slowik";
    case Engine::kStar: return "star";
    case Engine::kRhombus: return "rhombus";
    case Engine::kY: return "y";
  }
  return "generic";
}

std::pair<QPoly, Engine> closed_form(const FamilyShape& shape) {
  const auto& p = shape.params;
  switch (shape.kind) {
    case FamilyKind::kChain: return {slowik_count(p.at(0)), Engine::kSlowik};
    case FamilyKind::kStarOfChains: return {multi_star_count(p), Engine::kStar};
    case FamilyKind::kRhombus: return {rhombus_count(p.at(0), p.at(1)), Engine::kRhombus};
    case FamilyKind::kY: return {y_count(p.at(0), p.at(1), p.at(2)), Engine::kY};
    case FamilyKind::kGeneral: break;
  }
  throw Error(ErrorCode::kNoClosedForm, "no closed form for a general poset");
}

std::pair<QPoly, Engine> count_auto(const Poset& poset, const GenericOptions& options) {
  const auto families = recognize_family(poset);
  if (families.front().kind != FamilyKind::kGeneral) return closed_form(families.front());
  return {generic_count(poset, options), Engine::kGeneric};
}

}  // namespace incalg
