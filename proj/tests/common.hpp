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

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core/halfint.hpp"
#include "core/pfq.hpp"
#include "core/prime_factored.hpp"
#include "core/sqrt_rational.hpp"
#include "core/types.hpp"

namespace w9j::test {

inline HalfInt H(std::int64_t twice) { return HalfInt::from_twice(twice); }

inline NineJ ninej(std::int64_t t11, std::int64_t t12, std::int64_t t13,
                   std::int64_t t21, std::int64_t t22, std::int64_t t23,
                   std::int64_t t31, std::int64_t t32, std::int64_t t33) {
  NineJ s;
  s.m = {{{H(t11), H(t12), H(t13)}, {H(t21), H(t22), H(t23)}, {H(t31), H(t32), H(t33)}}};
  return s;
}

// The paper-of-record worked example and its exact value.
inline NineJ worked_example() { return ninej(12, 20, 32, 28, 24, 16, 24, 28, 48); }
inline const char* worked_example_value() { return "13/124062*sqrt(1615/7683753)"; }

// Test-only parser for the canonical rendering "±p/q*sqrt(r/s)" (round-trip
// checks); intentionally independent of the production formatting code.
inline SqrtRational parse_canonical(std::string_view text) {
  if (text == "0") return SqrtRational::zero();
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto parse_rational = [](std::string_view t) {
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(Int(std::string(t)));
    return Rational(Int(std::string(t.substr(0, slash))),
                    Int(std::string(t.substr(slash + 1))));
  };
  Rational coeff = 1;
  Rational radicand = 1;
  auto star = text.find("*sqrt(");
  if (star != std::string_view::npos) {
    coeff = parse_rational(text.substr(0, star));
    std::string_view inner = text.substr(star + 6);
    if (inner.empty() || inner.back() != ')') throw std::invalid_argument("bad sqrt");
    inner.remove_suffix(1);
    radicand = parse_rational(inner);
  } else if (text.starts_with("sqrt(")) {
    std::string_view inner = text.substr(5);
    if (inner.empty() || inner.back() != ')') throw std::invalid_argument("bad sqrt");
    inner.remove_suffix(1);
    radicand = parse_rational(inner);
  } else {
    coeff = parse_rational(text);
  }
  if (negative) coeff = -coeff;
  return SqrtRational(coeff, PrimeFactored::from_rational(radicand));
}

// Deterministic RNG for property-style tests.
inline std::mt19937 seeded_rng(std::uint32_t seed = 20240817u) {
  return std::mt19937(seed);
}

// Random terminating pFq spec with termination index <= 60 and pole-free
// positive denominator parameters.
inline PFQSpec random_terminating_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> extra_num(0, 3), n_den(1, 3);
  std::uniform_int_distribution<int> forced(-60, 0);
  std::uniform_int_distribution<int> small_twice(-12, 16);
  std::uniform_int_distribution<int> pos_twice(1, 16);
  std::uniform_int_distribution<int> halves(1, 2);

  PFQSpec spec;
  spec.numerator_params.push_back(Rational(forced(rng)));
  const int extras = extra_num(rng);
  for (int i = 0; i < extras; ++i)
    spec.numerator_params.push_back(Rational(small_twice(rng), halves(rng)));
  const int dens = n_den(rng);
  for (int i = 0; i < dens; ++i)
    spec.denominator_params.push_back(Rational(pos_twice(rng), halves(rng)));
  return spec;
}

}  // namespace w9j::test
