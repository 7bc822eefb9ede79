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

#include "incalg/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "incalg/error.hpp"

namespace incalg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Walks remaining predecessors until a vertex repeats; every vertex left
// over by Kahn's algorithm has one, so this always closes a cycle.
std::string describe_cycle(const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::size_t>>& preds,
                           const std::vector<bool>& removed) {
  std::size_t v = 0;
  while (removed[v]) ++v;
  std::vector<std::size_t> path;
  std::vector<int> seen_at(labels.size(), -1);
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(path.size());
    path.push_back(v);
    for (std::size_t u : preds[v]) {
      if (!removed[u]) {
        v = u;
        break;
      }
    }
  }
  // path[seen_at[v]..] walked backwards along predecessors; reverse it so
  // the message reads in `<` direction.
  std::vector<std::size_t> cycle(path.begin() + seen_at[v], path.end());
  std::reverse(cycle.begin(), cycle.end());
  std::string msg = "cycle: ";
  for (std::size_t k : cycle) msg += labels[k] + " < ";
  msg += labels[cycle.front()];
  return msg;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::size_t> parse_count_list(std::string_view s, std::string_view what) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_count(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void require_positive(std::size_t v, const char* what) {
  if (v < 1) {
    throw Error(ErrorCode::kParameterOutOfRange, std::string(what) + " must be >= 1");
  }
}

// Collects names in first-appearance order and relations as index pairs.
class PosetBuilder {
 public:
  void declare(std::string_view name) {
    std::string key(name);
    if (declared_.count(key) != 0) {
      throw Error(ErrorCode::kDuplicateElementDeclaration, "element '" + key + "' declared twice");
    }
    declared_.insert(key);
    intern(key);
  }

  void relate(std::string_view a, std::string_view b) {
    const std::size_t ia = intern(std::string(a));
    const std::size_t ib = intern(std::string(b));
    relations_.emplace_back(ia, ib);
  }

  Poset build() {
    if (!declared_.empty()) {
      for (const auto& name : labels_) {
        if (declared_.count(name) == 0) {
          throw Error(ErrorCode::kUnknownElementInRelation,
                      "relation uses undeclared element '" + name + "'");
        }
      }
    }
    return Poset(std::move(labels_), relations_);
  }

 private:
  std::size_t intern(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, labels_.size());
    if (inserted) labels_.push_back(name);
    return it->second;
  }

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> declared_;
  std::vector<Pair> relations_;
};

Poset parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "poset JSON must be an object");
  PosetBuilder builder;
  try {
    if (doc.contains("elements")) {
      for (const auto& e : doc.at("elements")) builder.declare(e.get<std::string>());
    }
    if (doc.contains("relations")) {
      for (const auto& r : doc.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          throw Error(ErrorCode::kParse, "each relation must be a pair [\"a\", \"b\"]");
        }
        builder.relate(r[0].get<std::string>(), r[1].get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid poset JSON: ") + e.what());
  }
  return builder.build();
}

Poset parse_text(std::string_view text) {
  PosetBuilder builder;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("elements:")) {
      for (auto name : split_ws(line.substr(9))) builder.declare(name);
      continue;
    }
    const auto lt = line.find('<');
    const auto lhs = split_ws(line.substr(0, lt));
    const auto rhs = lt == std::string_view::npos ? std::vector<std::string_view>{}
                                                  : split_ws(line.substr(lt + 1));
    if (lt == std::string_view::npos || lhs.size() != 1 || rhs.size() != 1 ||
        rhs[0].find('<') != std::string_view::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected 'NAME < NAME', got '" + std::string(line) +
                                         "'");
    }
    builder.relate(lhs[0], rhs[0]);
  }
  return builder.build();
}

Poset from_covers(std::vector<std::string> labels, std::vector<Pair> covers) {
  return Poset(std::move(labels), covers);
}

void add_chain(std::vector<std::string>& labels, std::vector<Pair>& rel, const std::string& prefix,
               std::size_t count, std::size_t first_suffix) {
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) rel.emplace_back(labels.size() - 1, labels.size());
    labels.push_back(prefix + std::to_string(first_suffix + k));
  }
}

// Connected components of `subset` in the comparability graph, ordered by
// smallest member.
std::vector<ElementMask> components(const Poset& p, ElementMask subset) {
  std::vector<ElementMask> out;
  ElementMask rest = subset;
  while (rest != 0) {
    ElementMask comp = rest & (~rest + 1);
    ElementMask frontier = comp;
    while (frontier != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const ElementMask next = (p.above(i) | p.below(i)) & subset & ~comp;
      comp |= next;
      frontier |= next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

bool is_chain(const Poset& p, ElementMask set) {
  for (ElementMask s = set; s != 0; s &= s - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(s));
    const ElementMask reach = p.above(i) | p.below(i) | (ElementMask{1} << i);
    if ((set & ~reach) != 0) return false;
  }
  return true;
}

bool all_chains(const Poset& p, const std::vector<ElementMask>& comps) {
  return std::all_of(comps.begin(), comps.end(),
                     [&](ElementMask c) { return is_chain(p, c); });
}

std::size_t count_of(ElementMask m) { return static_cast<std::size_t>(std::popcount(m)); }

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::span<const Pair> relations) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::kEmptyPoset, "poset has no elements");
  if (n > kMaxSize) {
    throw Error(ErrorCode::kTooLarge, "poset has " + std::to_string(n) + " elements; at most " +
                                          std::to_string(kMaxSize) + " are supported");
  }

  std::vector<std::vector<std::size_t>> succs(n), preds(n);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw Error(ErrorCode::kInternal, "relation index out of range");
    if (a == b) throw Error(ErrorCode::kCycleDetected, "cycle: " + labels[a] + " < " + labels[a]);
    succs[a].push_back(b);
    preds[b].push_back(a);
  }

  // Kahn's algorithm, always taking the earliest-declared ready element.
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = preds[v].size();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == n) throw Error(ErrorCode::kCycleDetected, describe_cycle(labels, preds, removed));
    removed[pick] = true;
    order.push_back(pick);
    for (std::size_t w : succs[pick]) --indegree[w];
  }

  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  labels_.resize(n);
  for (std::size_t k = 0; k < n; ++k) labels_[k] = std::move(labels[order[k]]);

  above_.assign(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    ElementMask up = 0;
    for (std::size_t w : succs[order[k]]) {
      const std::size_t j = new_index[w];
      up |= (ElementMask{1} << j) | above_[j];
    }
    above_[k] = up;
  }
  below_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementMask s = above_[i]; s != 0; s &= s - 1) {
      below_[static_cast<std::size_t>(std::countr_zero(s))] |= ElementMask{1} << i;
    }
  }
}

std::size_t Poset::comparable_pair_count() const noexcept {
  std::size_t total = 0;
  for (ElementMask up : above_) total += count_of(up);
  return total;
}

std::vector<Pair> Poset::comparable_pairs() const {
  std::vector<Pair> out;
  out.reserve(comparable_pair_count());
  for (std::size_t i = 0; i < size(); ++i) {
    for (ElementMask s = above_[i]; s != 0; s &= s - 1) {
      out.emplace_back(i, static_cast<std::size_t>(std::countr_zero(s)));
    }
  }
  return out;
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  for (const auto& [i, j] : comparable_pairs()) {
    if (open_interval(i, j) == 0) out.emplace_back(i, j);
  }
  return out;
}

std::string Poset::render() const {
  std::ostringstream os;
  os << "elements:";
  for (const auto& l : labels_) os << ' ' << l;
  os << '\n';
  for (const auto& [i, j] : covers()) os << labels_[i] << " < " << labels_[j] << '\n';
  return os.str();
}

Poset parse_poset(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body);
  return parse_text(text);
}

Poset chain(std::size_t n) {
  require_positive(n, "chain length");
  std::vector<std::string> labels;
  std::vector<Pair> rel;
  add_chain(labels, rel, "x", n, 1);
  return from_covers(std::move(labels), std::move(rel));
}

Poset antichain(std::size_t n) {
  require_positive(n, "antichain size");
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back("a" + std::to_string(k));
  return from_covers(std::move(labels), {});
}

Poset star_of_chains(std::span<const std::size_t> lengths) {
  if (lengths.empty()) {
    throw Error(ErrorCode::kParameterOutOfRange, "star needs at least one branch");
  }
  std::vector<std::string> labels{"x0"};
  std::vector<Pair> rel;
  for (std::size_t b = 0; b < lengths.size(); ++b) {
    require_positive(lengths[b], "branch length");
    rel.emplace_back(0, labels.size());
    // x1.. for the first branch, then y1.., z1.., then b4_1.. and so on.
    std::string prefix = b == 0 ? "x" : b == 1 ? "y" : b == 2 ? "z" : "b" + std::to_string(b + 1) + "_";
    add_chain(labels, rel, prefix, lengths[b], 1);
  }
  return from_covers(std::move(labels), std::move(rel));
}

Poset rhombus(std::size_t n, std::size_t m) {
  require_positive(n, "rhombus main chain length");
  require_positive(m, "rhombus side chain length");
  std::vector<std::string> labels;
  std::vector<Pair> rel;
  add_chain(labels, rel, "x", n + 1, 0);  // x0..xn
  const std::size_t y1 = labels.size();
  add_chain(labels, rel, "y", m, 1);
  const std::size_t ym = labels.size() - 1;
  const std::size_t top = labels.size();
  labels.push_back("x" + std::to_string(n + 1));
  rel.emplace_back(n, top);
  rel.emplace_back(0, y1);
  rel.emplace_back(ym, top);
  return from_covers(std::move(labels), std::move(rel));
}

Poset y_poset(std::size_t n, std::size_t m, std::size_t l) {
  require_positive(n, "Y stem length");
  require_positive(m, "Y branch length");
  require_positive(l, "Y branch length");
  std::vector<std::string> labels;
  std::vector<Pair> rel;
  add_chain(labels, rel, "r", n, 1);
  const std::size_t rn = n - 1;
  rel.emplace_back(rn, labels.size());
  add_chain(labels, rel, "s", m, 1);
  rel.emplace_back(rn, labels.size());
  add_chain(labels, rel, "t", l, 1);
  return from_covers(std::move(labels), std::move(rel));
}

Poset family_poset(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "family spec must look like 'name:params', got '" +
                                       std::string(spec) + "'");
  }
  const auto name = trim(spec.substr(0, colon));
  const auto args = parse_count_list(spec.substr(colon + 1), "family parameter");
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::kParse, "family '" + std::string(name) + "' takes " +
                                         std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "chain") {
    expect(1);
    return chain(args[0]);
  }
  if (name == "antichain") {
    expect(1);
    return antichain(args[0]);
  }
  if (name == "star") return star_of_chains(args);
  if (name == "rhombus") {
    expect(2);
    return rhombus(args[0], args[1]);
  }
  if (name == "y") {
    expect(3);
    return y_poset(args[0], args[1], args[2]);
  }
  throw Error(ErrorCode::kParse, "unknown family '" + std::string(name) + "'");
}

std::string FamilyShape::to_string() const {
  auto join = [this] {
    std::string s;
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (k > 0) s += ',';
      s += std::to_string(params[k]);
    }
    return s;
  };
  switch (kind) {
    case FamilyKind::kChain: return "Chain(" + join() + ")";
    case FamilyKind::kStarOfChains: return "StarOfChains([" + join() + "])";
    case FamilyKind::kRhombus: return "Rhombus(" + join() + ")";
    case FamilyKind::kY: return "Y(" + join() + ")";
    case FamilyKind::kGeneral: return "General";
  }
  return "General";
}

std::vector<FamilyShape> recognize_family(const Poset& p) {
  std::vector<FamilyShape> found;
  const std::size_t n = p.size();
  const ElementMask all = p.all();

  if (p.comparable_pair_count() == n * (n - 1) / 2) {
    found.push_back({FamilyKind::kChain, {n}});
  }

  std::vector<std::size_t> minima, maxima;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.below(i) == 0) minima.push_back(i);
    if (p.above(i) == 0) maxima.push_back(i);
  }

  // Star: unique minimum below everything; the rest splits into chains.
  if (n >= 2 && minima.size() == 1) {
    const std::size_t root = minima.front();
    const ElementMask rest = all & ~(ElementMask{1} << root);
    const auto comps = components(p, rest);
    if (p.above(root) == rest && all_chains(p, comps)) {
      FamilyShape s{FamilyKind::kStarOfChains, {}};
      for (ElementMask c : comps) s.params.push_back(count_of(c));
      found.push_back(std::move(s));
    }
  }

  // Rhombus: unique min and max; in between exactly two nonempty chains.
  if (n >= 4 && minima.size() == 1 && maxima.size() == 1) {
    const ElementMask inner =
        all & ~(ElementMask{1} << minima.front()) & ~(ElementMask{1} << maxima.front());
    const auto comps = components(p, inner);
    if (comps.size() == 2 && all_chains(p, comps)) {
      found.push_back({FamilyKind::kRhombus, {count_of(comps[0]), count_of(comps[1])}});
    }
  }

  // Y: the elements comparable to everything form the stem, which must sit
  // below the rest; the rest is two incomparable chains.
  if (n >= 3) {
    ElementMask stem = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((p.above(i) | p.below(i) | (ElementMask{1} << i)) == all) stem |= ElementMask{1} << i;
    }
    const ElementMask rest = all & ~stem;
    bool stem_below_rest = stem != 0;
    for (ElementMask s = stem; s != 0 && stem_below_rest; s &= s - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(s));
      stem_below_rest = (p.above(i) & rest) == rest;
    }
    if (stem_below_rest) {
      const auto comps = components(p, rest);
      if (comps.size() == 2 && all_chains(p, comps)) {
        found.push_back(
            {FamilyKind::kY, {count_of(stem), count_of(comps[0]), count_of(comps[1])}});
      }
    }
  }

  if (found.empty()) found.push_back({FamilyKind::kGeneral, {}});
  return found;
}

}  // namespace incalg
