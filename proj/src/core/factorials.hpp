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

#include "core/prime_factored.hpp"
#include "core/types.hpp"

namespace w9j {

// n! as a prime-exponent map; memoized. Concurrent callers may duplicate
// work while the table grows but always see consistent values.
PrimeFactored factorial(std::int64_t n);

// n! as a plain integer; memoized. Workhorse of the summation oracles.
Int int_factorial(std::int64_t n);

// Accumulates a product of factorial powers and small-integer powers, then
// factors the whole thing in one pass (Legendre's formula per prime), which
// is much cheaper than merging per-factorial exponent maps.
class FactorialProduct {
 public:
  // multiply by (n!)^e
  FactorialProduct& mul_factorial(std::int64_t n, std::int64_t e = 1);
  // multiply by n^e, n > 0
  FactorialProduct& mul_integer(std::int64_t n, std::int64_t e = 1);

  PrimeFactored build() const;

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> factorials_;
  std::vector<std::pair<std::int64_t, std::int64_t>> integers_;
};

// a(a+1)...(a+k-1); 1 for k = 0.
Rational pochhammer(const Rational& a, std::int64_t k);

// Gamma(a)/Gamma(b) for integer a-b, computed as a Pochhammer product.
Rational gamma_ratio(const Rational& a, const Rational& b);

}  // namespace w9j
