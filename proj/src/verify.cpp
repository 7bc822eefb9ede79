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


#include "incalg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "incalg/counting.hpp"
#include "incalg/error.hpp"
#include "incalg/gf_prime.hpp"
#include "incalg/involutions.hpp"
#include "incalg/oracle.hpp"

namespace incalg::verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

void record(Check& c, bool pass, const std::string& what) {
  if (pass) {
    ++c.passed;
    return;
  }
  ++c.failed;
  if (c.failures.size() < kMaxRecordedFailures) c.failures.push_back(what);
}

// Nonincreasing branch lengths with at least two branches and sum <= budget.
void star_partitions(std::size_t budget, std::size_t largest, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2) out.push_back(cur);
  for (std::size_t k = std::min(budget, largest); k >= 1; --k) {
    cur.push_back(k);
    star_partitions(budget - k, k, cur, out);
    cur.pop_back();
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::vector<FieldElem> pair_values(const Poset& poset, const InvolutionMatrix& g) {
  std::vector<FieldElem> out;
  for (const auto& [i, j] : poset.comparable_pairs()) out.push_back(g.at(i, j));
  return out;
}

Check named_check(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

BigInt power(std::uint64_t p, std::size_t e) {
  BigInt r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= p;
  return r;
}

}  // namespace

Poset random_poset(std::size_t max_elems, std::mt19937_64& rng) {
  // Plain modulo on the raw engine output keeps the corpus identical across
  // standard libraries, unlike std::uniform_int_distribution.
  const std::size_t n = static_cast<std::size_t>(rng() % max_elems) + 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng() % i)]);
  }
  std::vector<Pair> rel;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng() & 1U) rel.emplace_back(perm[a], perm[b]);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Poset(std::move(labels), rel);
}

std::vector<CorpusEntry> corpus(const Options& options) {
  const std::size_t n = options.max_elems;
  std::vector<CorpusEntry> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back({"chain:" + std::to_string(k), chain(k)});
  for (std::size_t k = 2; k <= n; ++k) {
    out.push_back({"antichain:" + std::to_string(k), antichain(k)});
  }
  if (n >= 3) {
    std::vector<std::vector<std::size_t>> stars;
    std::vector<std::size_t> cur;
    star_partitions(n - 1, n - 1, cur, stars);
    for (const auto& s : stars) out.push_back({"star:" + join(s), star_of_chains(s)});
  }
  for (std::size_t a = 1; a + 3 <= n; ++a) {
    for (std::size_t b = 1; a + b + 2 <= n; ++b) {
      out.push_back({"rhombus:" + join({a, b}), rhombus(a, b)});
    }
  }
  for (std::size_t a = 1; a + 2 <= n; ++a) {
    for (std::size_t b = 1; a + b + 1 <= n; ++b) {
      for (std::size_t c = 1; a + b + c <= n; ++c) {
        out.push_back({"y:" + join({a, b, c}), y_poset(a, b, c)});
      }
    }
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    out.push_back({"random#" + std::to_string(k), random_poset(n, rng)});
  }
  return out;
}

bool Report::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "corpus: " << named + random << " posets (" << named << " named, " << random
      << " random), max " << options.max_elems << " elements, primes ";
  for (std::size_t k = 0; k < options.primes.size(); ++k) {
    out << (k ? "," : "") << options.primes[k];
  }
  out << ", seed " << options.seed << "\n";
  for (const auto& c : checks) {
    out << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.passed << "/"
        << c.passed + c.failed << ")\n";
    for (const auto& f : c.failures) out << "  " << f << "\n";
  }
  out << (ok() ? "verify: all checks passed\n" : "verify: FAILED\n");
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["max_elems"] = options.max_elems;
  j["primes"] = options.primes;
  j["samples"] = options.samples;
  j["seed"] = options.seed;
  j["corpus"] = {{"named", named}, {"random", random}};
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"ok", c.ok()},
                   {"passed", c.passed},
                   {"failed", c.failed},
                   {"failures", c.failures}});
  }
  j["ok"] = ok();
  return j;
}

Report run(const Options& options) {
  if (options.max_elems == 0) {
    throw Error(ErrorCode::kParameterOutOfRange, "max-elems must be at least 1");
  }
  if (options.primes.empty()) {
    throw Error(ErrorCode::kParameterOutOfRange, "at least one prime is required");
  }
  std::vector<PrimeField> fields;
  for (auto p : options.primes) fields.emplace_back(p);
  const PrimeField& small = *std::min_element(
      fields.begin(), fields.end(),
      [](const PrimeField& a, const PrimeField& b) { return a.modulus() < b.modulus(); });

  Report report;
  report.options = options;
  const auto entries = corpus(options);
  report.random = options.samples;
  report.named = entries.size() - options.samples;

  Check closed = named_check("closed form = generic count");
  Check total = named_check("oracle count = generic count at p");
  Check summed = named_check("oracle count = sum of per-diagonal oracle counts");
  Check lower = named_check("oracle count >= 2");
  Check diagonal = named_check("per-diagonal oracle count = p^(opposite pairs)");
  Check built = named_check("constructor yields p^(opposite pairs) distinct involutions");
  Check negation = named_check("negated involution is an involution");
  Check agree = named_check("constructor solution set = oracle solution set");

  for (const auto& [name, poset] : entries) {
    const QPoly generic = generic_count(poset);
    for (const auto& shape : recognize_family(poset)) {
      if (shape.kind == FamilyKind::kGeneral) continue;
      const auto [formula, engine] = closed_form(shape);
      record(closed, formula == generic,
             name + " " + shape.to_string() + ": " + std::string(engine_name(engine)) +
                 " gives " + formula.to_string() + ", generic gives " + generic.to_string());
    }

    const std::size_t n = poset.size();
    for (const auto& field : fields) {
      const std::uint64_t p = field.modulus();
      const std::string at = name + " p=" + std::to_string(p);
      const oracle::Count whole = oracle::brute_force_count(poset, field, options.oracle_budget);
      const BigInt expected = generic.eval(p);
      record(total, whole == expected,
             at + ": oracle " + whole.str() + ", generic " + expected.str());
      record(lower, whole >= 2, at + ": oracle " + whole.str());

      oracle::Count sum = 0;
      for (ElementMask mask = 0; mask < (ElementMask{1} << n); ++mask) {
        const auto d = SignDiagonal::from_mask(n, mask);
        const oracle::Count c =
            oracle::brute_force_count_diagonal(poset, d, field, options.oracle_budget);
        sum += c;
        const BigInt want = power(p, opposite_pair_count(poset, d));
        record(diagonal, c == want,
               at + " d=" + d.to_string() + ": oracle " + c.str() + ", expected " + want.str());
      }
      record(summed, sum == whole, at + ": sum " + sum.str() + ", total " + whole.str());
    }

    for (const auto& field : fields) {
      const std::uint64_t p = field.modulus();
      const bool set_check = n <= options.solution_set_max && &field == &small;
      for (ElementMask mask = 0; mask < (ElementMask{1} << n); ++mask) {
        const auto d = SignDiagonal::from_mask(n, mask);
        const std::string at = name + " p=" + std::to_string(p) + " d=" + d.to_string();
        std::set<InvolutionMatrix> seen;
        bool sound = true;
        bool closed_under_neg = true;
        std::string problem;
        try {
          const auto visit = [&](const SignDiagonal&, const InvolutionMatrix& g) {
            if (!is_involution(poset, field, g)) sound = false;
            if (!is_involution(poset, field, g.negated(field))) closed_under_neg = false;
            seen.insert(g);
            return true;
          };
          enumerate_involutions(poset, field, d, visit);
        } catch (const Error& e) {
          sound = false;
          problem = " (" + std::string(error_code_name(e.code())) + ": " + e.what() + ")";
        }
        const BigInt want = power(p, opposite_pair_count(poset, d));
        record(built, sound && BigInt(seen.size()) == want,
               at + ": " + std::to_string(seen.size()) + " distinct, expected " + want.str() +
                   (sound ? "" : ", not all valid") + problem);
        record(negation, closed_under_neg, at);

        if (set_check && sound) {
          std::vector<std::vector<FieldElem>> mine;
          for (const auto& g : seen) mine.push_back(pair_values(poset, g));
          std::vector<std::vector<FieldElem>> theirs;
          oracle::brute_force_solutions(
              poset, d, field,
              [&](std::span<const FieldElem> v) { theirs.emplace_back(v.begin(), v.end()); },
              options.oracle_budget);
          std::sort(mine.begin(), mine.end());
          std::sort(theirs.begin(), theirs.end());
          record(agree, mine == theirs,
                 at + ": constructor " + std::to_string(mine.size()) + ", oracle " +
                     std::to_string(theirs.size()));
        }
      }
    }
  }
  report.checks = {closed, total, summed, lower, diagonal, built, negation, agree};
  return report;
}

}  // namespace incalg::verify
