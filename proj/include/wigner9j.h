/*
 * Copyright (c) the wigner9j developers.
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
 * C API of the wigner9j shared library.
 *
 * Exact Wigner 3j/6j/9j recoupling coefficients. Values are opaque handles
 * holding sign * coefficient * sqrt(square-free rational); they render to a
 * canonical exact string ("p/q*sqrt(r/s)", "0", leading "-") or to a
 * correctly rounded decimal.
 *
 * Angular momenta are passed as half-integer tokens: "7", "7/2" or "3.5".
 * All functions returning w9j_status leave an explanatory message in
 * w9j_last_error() on failure. Strings and value handles returned through
 * out-parameters are owned by the caller; release them with
 * w9j_string_free / w9j_value_free.
 */
#ifndef WIGNER9J_H
#define WIGNER9J_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct w9j_value w9j_value; /* opaque exact value */

typedef enum {
  W9J_OK = 0,
  W9J_ERROR_PARSE = 1,        /* malformed token or symbol */
  W9J_ERROR_DOMAIN = 2,       /* method/formula not applicable */
  W9J_ERROR_MISMATCH = 3,     /* verification detected disagreement */
  W9J_ERROR_INTERNAL = 4
} w9j_status;

typedef enum {
  W9J_METHOD_AUTO = 0,
  W9J_METHOD_ORACLE_SUM = 1,
  W9J_METHOD_VARSHALOVICH = 2,
  W9J_METHOD_FIVE_F4 = 3,
  W9J_METHOD_ZERO_ARG_4F3 = 4,
  W9J_METHOD_COLUMN_CLOSED = 5
} w9j_method;

/* Message for the most recent failure on this thread. */
const char* w9j_last_error(void);

/* 3j symbol from tokens {j1, j2, j3, m1, m2, m3}. */
w9j_status w9j_compute_3j(const char* const tokens[6], w9j_value** out);

/* 6j symbol from tokens {j1, j2, j3, j4, j5, j6} (standard 2x3 layout). */
w9j_status w9j_compute_6j(const char* const tokens[6], w9j_value** out);

/*
 * 9j symbol from nine row-major tokens. `method` selects the evaluation
 * path; W9J_METHOD_AUTO dispatches to the fastest applicable one. With
 * verify != 0 the result is additionally checked against the reference
 * sum and W9J_ERROR_MISMATCH is returned on disagreement. method_used
 * may be NULL.
 */
w9j_status w9j_compute_9j(const char* const tokens[9], w9j_method method, int verify,
                          w9j_value** out, w9j_method* method_used);

/*
 * Stretched-pattern classification: fills the detected pattern kind, the
 * symmetry orientation mapping the input onto the canonical template, the
 * accumulated phase (+1/-1), and the method auto dispatch would pick.
 */
w9j_status w9j_classify_9j(const char* const tokens[9], char* kind_buf, size_t kind_len,
                           char* orientation_buf, size_t orientation_len, int* phase,
                           w9j_method* method);

/*
 * Identity sweeps: Dougall (0<=n<=n_max, 0<=x,y,z<=xyz_max), the Dixon
 * reduction for even n, and the stretched-path equivalence corpus (doubled
 * momenta <= stretched_twice_max). Returns W9J_ERROR_MISMATCH with the first
 * failing tuple in fail_buf when a check fails. use_printed_dougall != 0
 * substitutes the misprinted Dougall right-hand side (expected to fail).
 * checked_out (may be NULL) receives the number of identities checked.
 */
w9j_status w9j_verify_identities(int n_max, int xyz_max, int stretched_twice_max,
                                 int use_printed_dougall, char* fail_buf,
                                 size_t fail_len, long long* checked_out);

/*
 * Times one evaluation method on one symbol: median/min wall-clock
 * nanoseconds over `repetitions` samples after warmup. out may be NULL.
 */
w9j_status w9j_bench_9j(const char* const tokens[9], w9j_method method, int repetitions,
                        unsigned long long* median_ns, unsigned long long* min_ns,
                        w9j_value** out);

/* Canonical exact rendering; caller frees with w9j_string_free. */
char* w9j_value_exact(const w9j_value* v);
/* Decimal rendering with `digits` significant digits. */
char* w9j_value_decimal(const w9j_value* v, int digits);
int w9j_value_is_zero(const w9j_value* v);
int w9j_value_equal(const w9j_value* a, const w9j_value* b);
void w9j_value_free(w9j_value* v);
void w9j_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WIGNER9J_H */
