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
#include "core/pfq.hpp"

#include <algorithm>
#include <optional>

#include "core/errors.hpp"

namespace w9j {

std::int64_t termination_index(const PFQSpec& spec) {
  std::optional<std::int64_t> best;
  for (const Rational& a : spec.numerator_params) {
    if (is_integer(a) && a <= 0) {
      std::int64_t n = -to_long(a);
      if (!best || n < *best) best = n;
    }
  }
  if (!best) throw NonTerminating("no nonpositive-integer numerator parameter");
  return *best;
}

namespace {

void check_no_pole(const PFQSpec& spec, std::int64_t depth) {
  for (const Rational& b : spec.denominator_params) {
    if (is_integer(b) && b <= 0 && -to_long(b) < depth)
      throw DenominatorPole("denominator parameter hits a pole before termination");
  }
}

}  // namespace

SeriesReport eval_direct(const PFQSpec& spec) {
  const std::int64_t depth = termination_index(spec);
  check_no_pole(spec, depth);
  Rational sum = 1;
  Rational term = 1;
  for (std::int64_t k = 0; k < depth; ++k) {
    Rational num = 1, den = Rational(k + 1);
    for (const Rational& a : spec.numerator_params) num *= a + k;
    for (const Rational& b : spec.denominator_params) den *= b + k;
    term *= num / den;
    sum += term;
  }
  return {sum, depth + 1, SeriesMethod::Direct};
}

SeriesReport eval_horner(const PFQSpec& spec) {
  const std::int64_t depth = termination_index(spec);
  check_no_pole(spec, depth);
  Rational acc = 1;
  for (std::int64_t i = depth - 1; i >= 0; --i) {
    Rational num = 1, den = Rational(i + 1);
    for (const Rational& a : spec.numerator_params) num *= a + i;
    for (const Rational& b : spec.denominator_params) den *= b + i;
    acc = 1 + num / den * acc;
  }
  return {acc, depth + 1, SeriesMethod::Horner};
}

bool is_balanced(const PFQSpec& spec) {
  Rational num_sum = 0, den_sum = 0;
  for (const Rational& a : spec.numerator_params) num_sum += a;
  for (const Rational& b : spec.denominator_params) den_sum += b;
  return den_sum == 1 + num_sum;
}

bool is_well_poised(const PFQSpec& spec) {
  if (spec.numerator_params.size() != spec.denominator_params.size() + 1)
    throw ArityMismatch("is_well_poised: requires p == q+1");
  const Rational target = 1 + spec.numerator_params[0];
  for (std::size_t i = 0; i < spec.denominator_params.size(); ++i) {
    if (spec.denominator_params[i] + spec.numerator_params[i + 1] != target)
      return false;
  }
  return true;
}

bool is_well_poised_any_order(const PFQSpec& spec) {
  if (spec.numerator_params.size() != spec.denominator_params.size() + 1)
    throw ArityMismatch("is_well_poised_any_order: requires p == q+1");
  std::vector<Rational> betas = spec.denominator_params;
  std::sort(betas.begin(), betas.end());
  for (std::size_t lead = 0; lead < spec.numerator_params.size(); ++lead) {
    const Rational target = 1 + spec.numerator_params[lead];
    std::vector<Rational> needed;
    for (std::size_t i = 0; i < spec.numerator_params.size(); ++i)
      if (i != lead) needed.push_back(target - spec.numerator_params[i]);
    std::sort(needed.begin(), needed.end());
    if (needed == betas) return true;
  }
  return false;
}

}  // namespace w9j
