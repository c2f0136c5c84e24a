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
#include "core/factorials.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"

namespace w9j {

namespace {

std::mutex g_factorial_mutex;
std::vector<PrimeFactored> g_factorial_table = {PrimeFactored::one()};

std::mutex g_int_factorial_mutex;
std::vector<Int> g_int_factorial_table = {Int(1)};

}  // namespace

PrimeFactored factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  std::scoped_lock lock(g_factorial_mutex);
  while (static_cast<std::int64_t>(g_factorial_table.size()) <= n) {
    auto next = g_factorial_table.back() *
                PrimeFactored::from_integer(
                    static_cast<std::int64_t>(g_factorial_table.size()));
    g_factorial_table.push_back(std::move(next));
  }
  return g_factorial_table[static_cast<std::size_t>(n)];
}

Int int_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("int_factorial: n must be nonnegative");
  std::scoped_lock lock(g_int_factorial_mutex);
  while (static_cast<std::int64_t>(g_int_factorial_table.size()) <= n) {
    g_int_factorial_table.push_back(
        g_int_factorial_table.back() *
        Int(static_cast<std::int64_t>(g_int_factorial_table.size())));
  }
  return g_int_factorial_table[static_cast<std::size_t>(n)];
}

FactorialProduct& FactorialProduct::mul_factorial(std::int64_t n, std::int64_t e) {
  if (n < 0) throw std::invalid_argument("FactorialProduct: n must be nonnegative");
  if (n > 1 && e != 0) factorials_.emplace_back(n, e);
  return *this;
}

FactorialProduct& FactorialProduct::mul_integer(std::int64_t n, std::int64_t e) {
  if (n <= 0) throw std::invalid_argument("FactorialProduct: n must be positive");
  if (n > 1 && e != 0) integers_.emplace_back(n, e);
  return *this;
}

PrimeFactored FactorialProduct::build() const {
  std::int64_t limit = 1;
  for (const auto& [n, e] : factorials_) limit = std::max(limit, n);
  for (const auto& [n, e] : integers_) limit = std::max(limit, n);
  factorial(limit);  // grow the memo table before taking the lock below

  // One flat exponent array indexed by prime, filled from the memoized
  // per-factorial maps; this replaces a cascade of sorted merges.
  std::vector<std::int64_t> exps(static_cast<std::size_t>(limit) + 1, 0);
  std::scoped_lock lock(g_factorial_mutex);
  for (const auto& [n, e] : factorials_)
    for (const auto& [p, k] : g_factorial_table[static_cast<std::size_t>(n)].factors())
      exps[static_cast<std::size_t>(p)] += e * k;
  for (const auto& [n, e] : integers_) {
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
      while (m % p == 0) {
        m /= p;
        exps[static_cast<std::size_t>(p)] += e;
      }
    if (m > 1) exps[static_cast<std::size_t>(m)] += e;
  }
  // every prime <= limit divides limit!, so its factor list enumerates them
  std::vector<PrimeFactored::Entry> out;
  for (const auto& [p, k] :
       g_factorial_table[static_cast<std::size_t>(limit)].factors())
    if (exps[static_cast<std::size_t>(p)] != 0)
      out.emplace_back(p, exps[static_cast<std::size_t>(p)]);
  return PrimeFactored::from_sorted_entries(std::move(out));
}

Rational pochhammer(const Rational& a, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k must be nonnegative");
  Rational result = 1;
  Rational term = a;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

Rational gamma_ratio(const Rational& a, const Rational& b) {
  Rational diff = a - b;
  if (!is_integer(diff)) throw NonIntegerOffset("gamma_ratio: a-b not an integer");
  if (is_integer(a) && a <= 0) throw PoleError("gamma_ratio: pole at a");
  if (is_integer(b) && b <= 0) throw PoleError("gamma_ratio: pole at b");
  long k = to_long(diff);
  if (k >= 0) return pochhammer(b, k);
  return 1 / pochhammer(a, -k);
}

}  // namespace w9j
