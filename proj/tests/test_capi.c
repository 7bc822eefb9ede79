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

/* Exercises the C interface from C, linked only against the shared library. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "incalg/incalg.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int expect_string(char* got, const char* want) {
  int ok = got != NULL && strcmp(got, want) == 0;
  if (!ok) fprintf(stderr, "  got \"%s\", want \"%s\"\n", got ? got : "(null)", want);
  incalg_string_free(got);
  return ok;
}

static int count_matrices(const char* json, void* user) {
  EXPECT(strstr(json, "\"diag\"") != NULL);
  ++*(int*)user;
  return 1;
}

static int stop_after_two(const char* json, void* user) {
  (void)json;
  return ++*(int*)user < 2;
}

int main(void) {
  incalg_poset* p = NULL;
  incalg_poly* poly = NULL;
  const char* engine = NULL;
  char* s = NULL;
  int n = 0;
  int ok = 0;
  uint64_t visited = 0;

  EXPECT(strcmp(incalg_version(), "") != 0);
  EXPECT(strcmp(incalg_status_name(INCALG_E_CYCLE_DETECTED), "CycleDetected") == 0);
  EXPECT(strcmp(incalg_status_name(INCALG_OK), "Ok") == 0);
  EXPECT(strcmp(incalg_status_name((incalg_status)999), "Unknown") == 0);

  /* parsing and errors */
  EXPECT(incalg_poset_parse("a < b\nb < a\n", &p) == INCALG_E_CYCLE_DETECTED);
  EXPECT(strstr(incalg_last_error(), "cycle") != NULL);
  EXPECT(incalg_poset_parse(NULL, &p) == INCALG_E_INVALID_ARGUMENT);
  EXPECT(incalg_poset_family("tree:3", &p) == INCALG_E_PARSE);

  EXPECT(incalg_poset_parse("elements: a b c d\na < b\na < c\nb < d\nc < d\n", &p) == INCALG_OK);
  EXPECT(strcmp(incalg_last_error(), "") == 0);
  EXPECT(incalg_poset_size(p) == 4);
  EXPECT(incalg_poset_recognize(p, &s) == INCALG_OK);
  EXPECT(expect_string(s, "Rhombus(1,1)"));

  EXPECT(incalg_count(p, INCALG_METHOD_AUTO, 0, &poly, &engine) == INCALG_OK);
  EXPECT(strcmp(engine, "rhombus") == 0);
  EXPECT(incalg_poly_to_text(poly, &s) == INCALG_OK);
  EXPECT(expect_string(s, "2q^4 + 8q^3 + 4q^2 + 2"));
  EXPECT(incalg_poly_to_json(poly, &s) == INCALG_OK);
  EXPECT(expect_string(s, "{\"poly\":{\"0\":\"2\",\"2\":\"4\",\"3\":\"8\",\"4\":\"2\"}}"));
  EXPECT(incalg_poly_eval(poly, "3", &s) == INCALG_OK);
  EXPECT(expect_string(s, "416"));
  EXPECT(incalg_poly_eval(poly, "100000000000000000000", &s) == INCALG_OK);
  EXPECT(expect_string(s, "20000000000000000000800000000000000000004"
                          "0000000000000000000000000000000000000002"));
  EXPECT(incalg_poly_eval(poly, "3x", &s) == INCALG_E_PARSE);
  incalg_poly_free(poly);

  EXPECT(incalg_oracle_count(p, 3, 0, &s) == INCALG_OK);
  EXPECT(expect_string(s, "416"));
  EXPECT(incalg_oracle_count(p, 2, 0, &s) == INCALG_E_EVEN_CHARACTERISTIC);
  EXPECT(incalg_oracle_count(p, 9, 0, &s) == INCALG_E_NON_PRIME_MODULUS);
  EXPECT(incalg_oracle_count(p, 5, 10, &s) == INCALG_E_BUDGET_EXCEEDED);
  EXPECT(incalg_poset_render(p, &s) == INCALG_OK);
  EXPECT(strstr(s, "elements: a b c d") != NULL);
  incalg_string_free(s);

  n = 0;
  EXPECT(incalg_enumerate(p, 3, "+,-,-,+", 0, count_matrices, &n, &visited) == INCALG_OK);
  EXPECT(n == 81 && visited == 81);
  EXPECT(incalg_enumerate(p, 3, "+,-", 0, count_matrices, &n, NULL) == INCALG_E_SIZE_MISMATCH);
  EXPECT(incalg_enumerate(p, 3, "+,?", 0, count_matrices, &n, NULL) == INCALG_E_PARSE);
  EXPECT(incalg_enumerate(p, 3, NULL, 0, NULL, NULL, NULL) == INCALG_E_INVALID_ARGUMENT);
  n = 0;
  EXPECT(incalg_enumerate(p, 3, NULL, 0, stop_after_two, &n, &visited) == INCALG_OK);
  EXPECT(n == 2 && visited == 2);
  incalg_poset_free(p);

  /* families and engines */
  EXPECT(incalg_poset_family("chain:5", &p) == INCALG_OK);
  EXPECT(incalg_count(p, INCALG_METHOD_FORMULA, 0, &poly, &engine) == INCALG_OK);
  EXPECT(strcmp(engine, "slowik") == 0);
  EXPECT(incalg_poly_to_text(poly, &s) == INCALG_OK);
  EXPECT(expect_string(s, "20q^6 + 10q^4 + 2"));
  incalg_poly_free(poly);
  EXPECT(incalg_count(p, INCALG_METHOD_GENERIC, 4, &poly, NULL) == INCALG_E_TOO_LARGE);
  incalg_poset_free(p);

  EXPECT(incalg_poset_family("antichain:3", &p) == INCALG_OK);
  EXPECT(incalg_count(p, INCALG_METHOD_FORMULA, 0, &poly, NULL) == INCALG_E_NO_CLOSED_FORM);
  EXPECT(incalg_poset_recognize(p, &s) == INCALG_OK);
  EXPECT(expect_string(s, "General"));
  incalg_poset_free(p);
  incalg_poset_free(NULL);
  incalg_poly_free(NULL);

  /* tables and verify */
  EXPECT(incalg_tables(2, 0, &s, &ok) == INCALG_OK);
  EXPECT(ok == 1 && strstr(s, "MISMATCH-ERRATUM") != NULL);
  incalg_string_free(s);
  EXPECT(incalg_tables(3, 1, &s, &ok) == INCALG_OK);
  EXPECT(s[0] == '{');
  incalg_string_free(s);
  EXPECT(incalg_tables(7, 0, &s, &ok) == INCALG_E_PARAMETER_OUT_OF_RANGE);

  {
    incalg_verify_options o;
    uint64_t even[] = {2};
    incalg_verify_options_init(&o);
    EXPECT(o.max_elems == 5 && o.prime_count == 2 && o.samples == 50 && o.seed == 0);
    o.max_elems = 3;
    o.samples = 3;
    EXPECT(incalg_verify(&o, 0, &s, &ok) == INCALG_OK);
    EXPECT(ok == 1 && strstr(s, "verify: all checks passed") != NULL);
    incalg_string_free(s);
    o.primes = even;
    o.prime_count = 1;
    EXPECT(incalg_verify(&o, 0, &s, &ok) == INCALG_E_EVEN_CHARACTERISTIC);
  }

  if (failures != 0) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("C API: all checks passed");
  return 0;
}
