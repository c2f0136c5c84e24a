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
#pragma once

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace w9j {

// A terminating pFq at unit argument: numerator/denominator parameter lists.
struct PFQSpec {
  std::vector<Rational> numerator_params;
  std::vector<Rational> denominator_params;
};

enum class SeriesMethod { Direct, Horner };

struct SeriesReport {
  Rational value;
  std::int64_t terms_evaluated = 0;
  SeriesMethod method = SeriesMethod::Direct;
};

// min{|alpha| : alpha a nonpositive integer numerator parameter}; throws
// NonTerminating when no such parameter exists.
std::int64_t termination_index(const PFQSpec& spec);

// Term-ratio accumulation of sum_k prod_j (alpha_j)_k / [prod_l (beta_l)_k k!].
SeriesReport eval_direct(const PFQSpec& spec);

// Same value via the nested (Horner) form, evaluated innermost-first from the
// termination depth.
SeriesReport eval_horner(const PFQSpec& spec);

// Saalschuetzian test: sum(beta) == 1 + sum(alpha).
bool is_balanced(const PFQSpec& spec);

// Pairing test in the given parameter order: 1+a1 == b_i + a_{i+1} for all i.
// Requires p == q+1.
bool is_well_poised(const PFQSpec& spec);

// True if some ordering of the parameters satisfies the well-poised pairing.
bool is_well_poised_any_order(const PFQSpec& spec);

}  // namespace w9j
