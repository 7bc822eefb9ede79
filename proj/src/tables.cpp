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


#include "incalg/tables.hpp"

#include <sstream>
#include <string_view>

#include "incalg/counting.hpp"
#include "incalg/error.hpp"
#include "incalg/gf_prime.hpp"
#include "incalg/oracle.hpp"
#include "incalg/poset.hpp"
#include "table_data.hpp"

namespace incalg::tables {

namespace {

struct FixtureRow {
  std::vector<std::size_t> params;
  std::string printed;
  bool flagged = false;
  std::string note;
};

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::vector<FixtureRow> load(std::string_view tsv, std::size_t arity) {
  std::vector<FixtureRow> rows;
  std::istringstream in{std::string(tsv)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_tabs(line);
    if (cols.size() < arity + 2) {
      throw Error(ErrorCode::kInternal, "malformed fixture line: " + line);
    }
    FixtureRow row;
    for (std::size_t k = 0; k < arity; ++k) row.params.push_back(std::stoul(cols[k]));
    row.printed = cols[arity];
    row.flagged = cols[arity + 1] == "erratum";
    if (cols.size() > arity + 2) row.note = cols[arity + 2];
    rows.push_back(std::move(row));
  }
  return rows;
}

struct TableSpec {
  const char* title;
  const char* tsv;
  std::size_t arity;
};

TableSpec spec_for(int which) {
  switch (which) {
    case 2:
      return {"star cofactor P(m)", detail::kTable2Tsv, 1};
    case 3:
      return {"rhombus(n, m)", detail::kTable3Tsv, 2};
    case 4:
      return {"Y(n, m, l)", detail::kTable4Tsv, 3};
    default:
      throw Error(ErrorCode::kParameterOutOfRange,
                  "no table " + std::to_string(which) + " (expected 2, 3 or 4)");
  }
}

QPoly compute(int which, const std::vector<std::size_t>& v) {
  switch (which) {
    case 2:
      return star_cofactor(v[0]);
    case 3:
      return rhombus_count(v[0], v[1]);
    default:
      return y_count(v[0], v[1], v[2]);
  }
}

std::size_t element_count(int which, const std::vector<std::size_t>& v) {
  switch (which) {
    case 2:
      return v[0];  // P(m)(1) = 2^m
    case 3:
      return v[0] + v[1] + 2;
    default:
      return v[0] + v[1] + v[2];
  }
}

std::optional<Poset> poset_for(int which, const std::vector<std::size_t>& v) {
  switch (which) {
    case 3:
      return rhombus(v[0], v[1]);
    case 4:
      return y_poset(v[0], v[1], v[2]);
    default:
      return std::nullopt;  // a cofactor, not the count of a single poset
  }
}

}  // namespace

const char* status_name(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::kMatch:
      return "MATCH";
    case RowStatus::kMismatch:
      return "MISMATCH";
    case RowStatus::kMismatchErratum:
      return "MISMATCH-ERRATUM";
  }
  return "?";
}

std::string Row::label() const {
  std::string s = "(";
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(params[k]);
  }
  return s + ")";
}

bool Report::ok() const {
  for (const auto& r : rows) {
    if (r.status == RowStatus::kMismatch) return false;
    if (r.computed_sum != r.expected_sum) return false;
    if (r.adjudication && r.adjudication->oracle != r.adjudication->computed) return false;
  }
  return true;
}

std::size_t Report::count(RowStatus s) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == s ? 1 : 0;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "Table " << which << ": " << title << "\n";
  for (const auto& r : rows) {
    out << r.label() << " " << status_name(r.status) << " " << r.computed << "\n";
    if (r.status == RowStatus::kMatch) continue;
    out << "  printed:  " << r.printed << "\n";
    out << "  q=1 sums: computed " << r.computed_sum << ", printed " << r.printed_sum
        << ", expected " << r.expected_sum << "\n";
    if (r.adjudication) {
      const auto& a = *r.adjudication;
      out << "  oracle p=" << a.p << ": " << a.oracle << " (computed " << a.computed
          << ", printed " << a.printed << ")\n";
    }
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
  }
  out << rows.size() << " rows: " << count(RowStatus::kMatch) << " MATCH, "
      << count(RowStatus::kMismatch) << " MISMATCH, " << count(RowStatus::kMismatchErratum)
      << " MISMATCH-ERRATUM\n";
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["table"] = which;
  j["title"] = title;
  j["ok"] = ok();
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["params"] = r.params;
    row["status"] = status_name(r.status);
    row["computed"] = r.computed.to_string();
    row["printed"] = r.printed.to_string();
    row["erratum_flag"] = r.flagged;
    row["expected_sum"] = r.expected_sum.str();
    row["computed_sum"] = r.computed_sum.str();
    row["printed_sum"] = r.printed_sum.str();
    if (r.adjudication) {
      row["oracle"] = {{"p", r.adjudication->p},
                       {"oracle", r.adjudication->oracle.str()},
                       {"computed", r.adjudication->computed.str()},
                       {"printed", r.adjudication->printed.str()}};
    }
    if (!r.note.empty()) row["note"] = r.note;
    arr.push_back(std::move(row));
  }
  return j;
}

Report reproduce(int which, const Options& options) {
  const TableSpec spec = spec_for(which);
  Report report;
  report.which = which;
  report.title = spec.title;
  for (auto& fx : load(spec.tsv, spec.arity)) {
    Row row;
    row.params = fx.params;
    row.printed = QPoly::parse(fx.printed);
    row.computed = compute(which, fx.params);
    row.flagged = fx.flagged;
    row.note = std::move(fx.note);
    row.expected_sum = BigInt(1) << element_count(which, fx.params);
    row.printed_sum = row.printed.eval(1);
    row.computed_sum = row.computed.eval(1);
    if (row.printed == row.computed) {
      row.status = RowStatus::kMatch;
    } else {
      row.status = row.flagged ? RowStatus::kMismatchErratum : RowStatus::kMismatch;
      const auto poset = poset_for(which, fx.params);
      const BigInt at_p = row.computed.eval(options.oracle_prime);
      if (poset && at_p <= options.oracle_limit) {
        const PrimeField field(options.oracle_prime);
        row.adjudication = Adjudication{options.oracle_prime,
                                        oracle::brute_force_count(*poset, field), at_p,
                                        row.printed.eval(options.oracle_prime)};
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace incalg::tables
