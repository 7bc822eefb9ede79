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


#include "incalg/incalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "incalg/counting.hpp"
#include "incalg/error.hpp"
#include "incalg/gf_prime.hpp"
#include "incalg/involutions.hpp"
#include "incalg/oracle.hpp"
#include "incalg/poset.hpp"
#include "incalg/qpoly.hpp"
#include "incalg/tables.hpp"
#include "incalg/verify.hpp"

struct incalg_poset {
  incalg::Poset value;
};

struct incalg_poly {
  incalg::QPoly value;
};

namespace {

thread_local std::string g_last_error;

incalg_status fail(incalg_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

struct InvalidArgument {
  const char* what;
};

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument{what};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
incalg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return INCALG_OK;
  } catch (const incalg::Error& e) {
    return fail(static_cast<incalg_status>(e.code()), e.what());
  } catch (const InvalidArgument& e) {
    return fail(INCALG_E_INVALID_ARGUMENT, std::string(e.what) + " must not be NULL");
  } catch (const std::bad_alloc&) {
    return fail(INCALG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(INCALG_E_INTERNAL, e.what());
  } catch (...) {
    return fail(INCALG_E_INTERNAL, "unknown exception");
  }
}

incalg::BigInt parse_decimal(const char* text) {
  std::string s(text);
  const std::size_t digits = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos) {
    throw incalg::Error(incalg::ErrorCode::kParse, "not a decimal integer: '" + s + "'");
  }
  return incalg::BigInt(s);
}

}  // namespace

extern "C" {

const char* incalg_version(void) { return INCALG_VERSION_STRING; }

const char* incalg_status_name(incalg_status status) {
  switch (status) {
    case INCALG_OK:
      return "Ok";
    case INCALG_E_INVALID_ARGUMENT:
      return "InvalidArgument";
    default:
      break;
  }
  if (status >= INCALG_E_PARSE && status <= INCALG_E_INTERNAL) {
    // error_code_name views a string literal, so data() is NUL-terminated.
    return incalg::error_code_name(static_cast<incalg::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* incalg_last_error(void) { return g_last_error.c_str(); }

void incalg_string_free(char* s) { std::free(s); }

incalg_status incalg_poset_parse(const char* text, incalg_poset** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new incalg_poset{incalg::parse_poset(text)};
  });
}

incalg_status incalg_poset_family(const char* spec, incalg_poset** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new incalg_poset{incalg::family_poset(spec)};
  });
}

void incalg_poset_free(incalg_poset* poset) { delete poset; }

size_t incalg_poset_size(const incalg_poset* poset) {
  return poset == nullptr ? 0 : poset->value.size();
}

incalg_status incalg_poset_render(const incalg_poset* poset, char** out) {
  return guarded([&] {
    require(poset, "poset");
    require(out, "out");
    *out = dup(poset->value.render());
  });
}

incalg_status incalg_poset_recognize(const incalg_poset* poset, char** out) {
  return guarded([&] {
    require(poset, "poset");
    require(out, "out");
    std::string s;
    for (const auto& shape : incalg::recognize_family(poset->value)) {
      s += s.empty() ? shape.to_string() : "; also " + shape.to_string();
    }
    *out = dup(s);
  });
}

incalg_status incalg_count(const incalg_poset* poset, incalg_method method, size_t max_size,
                           incalg_poly** out, const char** engine) {
  return guarded([&] {
    require(poset, "poset");
    require(out, "out");
    incalg::GenericOptions options;
    if (max_size != 0) options.max_size = max_size;
    std::pair<incalg::QPoly, incalg::Engine> result;
    switch (method) {
      case INCALG_METHOD_AUTO:
        result = incalg::count_auto(poset->value, options);
        break;
      case INCALG_METHOD_GENERIC:
        result = {incalg::generic_count(poset->value, options), incalg::Engine::kGeneric};
        break;
      case INCALG_METHOD_FORMULA:
        result = incalg::closed_form(incalg::recognize_family(poset->value).front());
        break;
      default:
        throw incalg::Error(incalg::ErrorCode::kParameterOutOfRange, "unknown method");
    }
    *out = new incalg_poly{std::move(result.first)};
    if (engine != nullptr) *engine = incalg::engine_name(result.second).data();
  });
}

incalg_status incalg_oracle_count(const incalg_poset* poset, uint64_t p, uint64_t budget,
                                  char** out) {
  return guarded([&] {
    require(poset, "poset");
    require(out, "out");
    const incalg::PrimeField field(p);
    const auto count = incalg::oracle::brute_force_count(
        poset->value, field, budget == 0 ? incalg::oracle::kDefaultBudget : budget);
    *out = dup(count.str());
  });
}

void incalg_poly_free(incalg_poly* poly) { delete poly; }

incalg_status incalg_poly_to_text(const incalg_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = dup(poly->value.to_string());
  });
}

incalg_status incalg_poly_to_json(const incalg_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = dup(poly->value.to_json().dump());
  });
}

incalg_status incalg_poly_eval(const incalg_poly* poly, const char* q, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(q, "q");
    require(out, "out");
    *out = dup(poly->value.eval(parse_decimal(q)).str());
  });
}

incalg_status incalg_enumerate(const incalg_poset* poset, uint64_t p, const char* diag,
                               uint64_t budget, incalg_matrix_callback callback, void* user,
                               uint64_t* count) {
  return guarded([&] {
    require(poset, "poset");
    if (callback == nullptr) throw InvalidArgument{"callback"};
    const incalg::PrimeField field(p);
    std::optional<incalg::SignDiagonal> d;
    if (diag != nullptr) d = incalg::SignDiagonal::parse(diag);
    incalg::EnumerateOptions options;
    if (budget != 0) options.budget_per_diagonal = budget;
    const auto n = incalg::enumerate_involutions(
        poset->value, field, d,
        [&](const incalg::SignDiagonal&, const incalg::InvolutionMatrix& g) {
          return callback(g.to_json(poset->value).dump().c_str(), user) != 0;
        },
        options);
    if (count != nullptr) *count = n;
  });
}

incalg_status incalg_tables(int which, int json, char** out, int* ok) {
  return guarded([&] {
    require(out, "out");
    const auto report = incalg::tables::reproduce(which);
    *out = dup(json ? report.to_json().dump(2) + "\n" : report.to_text());
    if (ok != nullptr) *ok = report.ok() ? 1 : 0;
  });
}

void incalg_verify_options_init(incalg_verify_options* options) {
  static const uint64_t kPrimes[] = {3, 5};
  if (options == nullptr) return;
  options->max_elems = 5;
  options->primes = kPrimes;
  options->prime_count = 2;
  options->samples = 50;
  options->seed = 0;
}

incalg_status incalg_verify(const incalg_verify_options* options, int json, char** out, int* ok) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    if (options->prime_count > 0) require(options->primes, "options->primes");
    incalg::verify::Options o;
    o.max_elems = options->max_elems;
    o.primes.assign(options->primes, options->primes + options->prime_count);
    o.samples = options->samples;
    o.seed = options->seed;
    const auto report = incalg::verify::run(o);
    *out = dup(json ? report.to_json().dump(2) + "\n" : report.to_text());
    if (ok != nullptr) *ok = report.ok() ? 1 : 0;
  });
}

}  // extern "C"
