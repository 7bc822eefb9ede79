/*
 * Copyright 2026 The incalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libincalg: involution counts in incidence algebras over
 * finite fields of odd characteristic.
 *
 * Every fallible call returns an incalg_status. On failure the message for
 * the calling thread is available from incalg_last_error() until the next
 * call on that thread. Strings returned through char** belong to the caller
 * and are released with incalg_string_free().
 */
#ifndef INCALG_INCALG_H_
#define INCALG_INCALG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(INCALG_BUILDING_LIBRARY)
#define INCALG_API __declspec(dllexport)
#else
#define INCALG_API __declspec(dllimport)
#endif
#else
#define INCALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum incalg_status {
  INCALG_OK = 0,
  INCALG_E_PARSE = 1,
  INCALG_E_CYCLE_DETECTED = 2,
  INCALG_E_EMPTY_POSET = 3,
  INCALG_E_DUPLICATE_ELEMENT = 4,
  INCALG_E_UNKNOWN_ELEMENT = 5,
  INCALG_E_PARAMETER_OUT_OF_RANGE = 6,
  INCALG_E_TOO_LARGE = 7,
  INCALG_E_NON_PRIME_MODULUS = 8,
  INCALG_E_EVEN_CHARACTERISTIC = 9,
  INCALG_E_DIVISION_BY_ZERO = 10,
  INCALG_E_NEGATIVE_EXPONENT = 11,
  INCALG_E_OUT_OF_RANGE = 12,
  INCALG_E_PARITY_VIOLATION = 13,
  INCALG_E_SIZE_MISMATCH = 14,
  INCALG_E_KEY_MISMATCH = 15,
  INCALG_E_RESIDUAL_CONSTRAINT_VIOLATION = 16,
  INCALG_E_BUDGET_EXCEEDED = 17,
  INCALG_E_NO_CLOSED_FORM = 18,
  INCALG_E_INTERNAL = 19,
  INCALG_E_INVALID_ARGUMENT = 20
} incalg_status;

typedef struct incalg_poset incalg_poset;
typedef struct incalg_poly incalg_poly;

INCALG_API const char* incalg_version(void);
/* Stable name such as "CycleDetected"; never NULL. */
INCALG_API const char* incalg_status_name(incalg_status status);
/* Message of the last failed call on this thread, or "". */
INCALG_API const char* incalg_last_error(void);
INCALG_API void incalg_string_free(char* s);

/* Line format or JSON (first non-blank character '{'). */
INCALG_API incalg_status incalg_poset_parse(const char* text, incalg_poset** out);
/* "chain:N", "antichain:N", "star:M1,M2,...", "rhombus:N,M", "y:N,M,L". */
INCALG_API incalg_status incalg_poset_family(const char* spec, incalg_poset** out);
INCALG_API void incalg_poset_free(incalg_poset* poset);
INCALG_API size_t incalg_poset_size(const incalg_poset* poset);
INCALG_API incalg_status incalg_poset_render(const incalg_poset* poset, char** out);
/* e.g. "Chain(4); also StarOfChains([3])", or "General". */
INCALG_API incalg_status incalg_poset_recognize(const incalg_poset* poset, char** out);

typedef enum incalg_method {
  INCALG_METHOD_AUTO = 0,    /* closed form when recognized, else generic */
  INCALG_METHOD_GENERIC = 1, /* sum over all 2^n diagonals */
  INCALG_METHOD_FORMULA = 2  /* closed form only; NO_CLOSED_FORM otherwise */
} incalg_method;

/*
 * Involution count as a polynomial in q. `max_size` caps the generic engine
 * (0 selects the default of 30). `engine` (optional) receives a static name:
 * "generic", "slowik", "star", "rhombus" or "y".
 */
INCALG_API incalg_status incalg_count(const incalg_poset* poset, incalg_method method,
                                      size_t max_size, incalg_poly** out, const char** engine);
/* Exhaustive count over GF(p) as a decimal string. budget 0 selects 10^8. */
INCALG_API incalg_status incalg_oracle_count(const incalg_poset* poset, uint64_t p,
                                             uint64_t budget, char** out);

INCALG_API void incalg_poly_free(incalg_poly* poly);
/* "2q^4 + 8q^3 + 4q^2 + 2" */
INCALG_API incalg_status incalg_poly_to_text(const incalg_poly* poly, char** out);
/* {"poly":{"4":"2","3":"8",...}} with decimal-string coefficients. */
INCALG_API incalg_status incalg_poly_to_json(const incalg_poly* poly, char** out);
/* Value at q, both as decimal strings. */
INCALG_API incalg_status incalg_poly_eval(const incalg_poly* poly, const char* q, char** out);

/* Receives one involution as a JSON object; return 0 to stop. */
typedef int (*incalg_matrix_callback)(const char* json, void* user);

/*
 * Enumerates the involutions over GF(p) with diagonal `diag` ("+,-,-,+" or
 * "1,-1,-1,1"), or with every diagonal when `diag` is NULL. `budget` bounds
 * p^{#free entries} per diagonal (0 selects 10^6). `count` is optional.
 */
INCALG_API incalg_status incalg_enumerate(const incalg_poset* poset, uint64_t p, const char* diag,
                                          uint64_t budget, incalg_matrix_callback callback,
                                          void* user, uint64_t* count);

/* Table 2, 3 or 4 compared against the printed values. `ok` is 0 on an
 * unexplained mismatch. */
INCALG_API incalg_status incalg_tables(int which, int json, char** out, int* ok);

typedef struct incalg_verify_options {
  size_t max_elems;
  const uint64_t* primes;
  size_t prime_count;
  size_t samples;
  uint64_t seed;
} incalg_verify_options;

/* max_elems 5, primes {3, 5}, 50 samples, seed 0. */
INCALG_API void incalg_verify_options_init(incalg_verify_options* options);
INCALG_API incalg_status incalg_verify(const incalg_verify_options* options, int json, char** out,
                                       int* ok);

#ifdef __cplusplus
}
#endif

#endif /* INCALG_INCALG_H_ */
