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


// incalg: command-line front end to libincalg. Uses only the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "incalg/incalg.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kResourceCap = 3 };

struct Failure {
  incalg_status status;
};

// Maps a status to an exit code after printing the message.
int report(incalg_status s) {
  std::cerr << "error: " << incalg_status_name(s) << ": " << incalg_last_error() << "\n";
  return (s == INCALG_E_TOO_LARGE || s == INCALG_E_BUDGET_EXCEEDED) ? kResourceCap : kInputError;
}

void check(incalg_status s) {
  if (s != INCALG_OK) throw Failure{s};
}

struct StringDeleter {
  void operator()(char* s) const { incalg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

struct PosetDeleter {
  void operator()(incalg_poset* p) const { incalg_poset_free(p); }
};
using PosetPtr = std::unique_ptr<incalg_poset, PosetDeleter>;

struct PolyDeleter {
  void operator()(incalg_poly* p) const { incalg_poly_free(p); }
};
using PolyPtr = std::unique_ptr<incalg_poly, PolyDeleter>;

struct PosetSource {
  std::string file;
  std::string family;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("poset,--poset", file, "Poset file (text or JSON); - reads stdin");
    auto* g = cmd->add_option("--family", family,
                              "Named family: chain:N, antichain:N, star:M1,M2,..., "
                              "rhombus:N,M, y:N,M,L");
    f->excludes(g);
  }

  PosetPtr load() const {
    incalg_poset* p = nullptr;
    if (!family.empty()) {
      check(incalg_poset_family(family.c_str(), &p));
      return PosetPtr(p);
    }
    if (file.empty()) throw CLI::ValidationError("a poset file or --family is required");
    std::string text;
    if (file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(file);
      if (!in) throw CLI::ValidationError("cannot read " + file);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    check(incalg_poset_parse(text.c_str(), &p));
    return PosetPtr(p);
  }
};

std::optional<std::uint64_t> as_uint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

int run_count(const PosetSource& src, const std::string& method, const std::string& q,
              const std::string& format, std::size_t max_size, std::uint64_t budget) {
  const bool json = format == "json";
  const bool symbolic = q == "symbolic";
  if (!symbolic && !as_uint(q)) {
    throw CLI::ValidationError("--q must be 'symbolic' or a nonnegative integer");
  }
  auto poset = src.load();

  if (method == "oracle") {
    if (symbolic) throw CLI::ValidationError("--method oracle needs an integer --q (an odd prime)");
    const std::string value = take([&] {
      char* out = nullptr;
      check(incalg_oracle_count(poset.get(), *as_uint(q), budget, &out));
      return out;
    }());
    std::cerr << "method: oracle\n";
    if (json) {
      std::cout << "{\"engine\":\"oracle\",\"q\":\"" << q << "\",\"value\":\"" << value << "\"}\n";
    } else {
      std::cout << value << "\n";
    }
    return kOk;
  }

  const incalg_method m = method == "generic"   ? INCALG_METHOD_GENERIC
                          : method == "formula" ? INCALG_METHOD_FORMULA
                                                : INCALG_METHOD_AUTO;
  incalg_poly* raw = nullptr;
  const char* engine = "";
  check(incalg_count(poset.get(), m, max_size, &raw, &engine));
  PolyPtr poly(raw);
  std::cerr << "method: " << method << " -> " << engine << "\n";

  char* out = nullptr;
  if (symbolic) {
    if (json) {
      check(incalg_poly_to_json(poly.get(), &out));
      const std::string body = take(out);
      // {"poly":{...}} -> {"engine":"...","poly":{...}}
      std::cout << "{\"engine\":\"" << engine << "\"," << body.substr(1) << "\n";
    } else {
      check(incalg_poly_to_text(poly.get(), &out));
      std::cout << take(out) << "\n";
    }
    return kOk;
  }
  check(incalg_poly_eval(poly.get(), q.c_str(), &out));
  const std::string value = take(out);
  if (json) {
    std::cout << "{\"engine\":\"" << engine << "\",\"q\":\"" << q << "\",\"value\":\"" << value
              << "\"}\n";
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

int run_tables(const std::vector<int>& which, const std::string& format) {
  bool all_ok = true;
  const bool json = format == "json";
  for (std::size_t k = 0; k < which.size(); ++k) {
    char* out = nullptr;
    int ok = 0;
    check(incalg_tables(which[k], json ? 1 : 0, &out, &ok));
    if (k > 0 && !json) std::cout << "\n";
    std::cout << take(out);
    all_ok = all_ok && ok != 0;
  }
  return all_ok ? kOk : kVerifyFailed;
}

int run_verify(std::size_t max_elems, const std::vector<std::uint64_t>& primes,
               std::size_t samples, std::uint64_t seed, const std::string& format) {
  incalg_verify_options options;
  incalg_verify_options_init(&options);
  options.max_elems = max_elems;
  options.primes = primes.data();
  options.prime_count = primes.size();
  options.samples = samples;
  options.seed = seed;
  char* out = nullptr;
  int ok = 0;
  check(incalg_verify(&options, format == "json" ? 1 : 0, &out, &ok));
  std::cout << take(out);
  return ok ? kOk : kVerifyFailed;
}

// Streams the matrices as one JSON array, one element per line.
int matrix_line(const char* json, void* user) {
  auto* first = static_cast<bool*>(user);
  std::cout << (*first ? "[\n  " : ",\n  ") << json;
  *first = false;
  return 1;
}

int run_enumerate(const PosetSource& src, std::uint64_t p, const std::string& diag,
                  std::uint64_t budget) {
  auto poset = src.load();
  std::uint64_t n = 0;
  bool first = true;
  check(incalg_enumerate(poset.get(), p, diag.empty() ? nullptr : diag.c_str(), budget,
                         matrix_line, &first, &n));
  std::cout << (first ? "[]\n" : "\n]\n");
  std::cerr << n << " involutions\n";
  return kOk;
}

int run_recognize(const PosetSource& src) {
  auto poset = src.load();
  char* out = nullptr;
  check(incalg_poset_recognize(poset.get(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involution counts in incidence algebras over finite fields"};
  app.set_version_flag("--version", std::string(incalg_version()));
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count involutions of a poset");
  PosetSource count_src;
  count_src.add_to(count);
  std::string method = "auto";
  std::string q = "symbolic";
  std::string format = "text";
  std::size_t max_size = 30;
  std::uint64_t budget = 100'000'000;
  count->add_option("--method", method, "auto, generic, formula or oracle")
      ->check(CLI::IsMember({"auto", "generic", "formula", "oracle"}))
      ->capture_default_str();
  count->add_option("--q", q, "'symbolic' or an integer to evaluate at")->capture_default_str();
  count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  count->add_option("--max-size", max_size, "Largest poset the generic engine accepts")
      ->capture_default_str();
  count->add_option("--budget", budget, "Oracle search-node budget")->capture_default_str();

  auto* tables = app.add_subcommand("tables", "Regenerate the count tables and compare");
  std::vector<int> which{2, 3, 4};
  std::string tables_format = "text";
  tables->add_option("--which", which, "2, 3 or 4 (default: all)")
      ->check(CLI::IsMember({2, 3, 4}))
      ->delimiter(',');
  tables->add_option("--format", tables_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Cross-check every engine on a seeded corpus");
  std::size_t max_elems = 5;
  std::vector<std::uint64_t> primes{3, 5};
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::string verify_format = "text";
  verify->add_option("--max-elems", max_elems)->capture_default_str();
  verify->add_option("--primes", primes, "Comma-separated odd primes")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--samples", samples, "Random posets")->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Print every involution as a JSON array");
  PosetSource enum_src;
  enum_src.add_to(enumerate);
  std::uint64_t p = 0;
  std::string diag;
  std::uint64_t enum_budget = 1'000'000;
  enumerate->add_option("--p", p, "Odd prime")->required();
  enumerate->add_option("--diag", diag, "Fixed diagonal, e.g. +,-,-,+");
  enumerate->add_option("--budget", enum_budget, "Maximum involutions per diagonal")
      ->capture_default_str();

  auto* recognize = app.add_subcommand("recognize", "Name the families a poset belongs to");
  PosetSource rec_src;
  rec_src.add_to(recognize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*count) return run_count(count_src, method, q, format, max_size, budget);
    if (*tables) return run_tables(which, tables_format);
    if (*verify) return run_verify(max_elems, primes, samples, seed, verify_format);
    if (*enumerate) return run_enumerate(enum_src, p, diag, enum_budget);
    if (*recognize) return run_recognize(rec_src);
  } catch (const Failure& f) {
    return report(f.status);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
