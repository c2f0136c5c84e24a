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
#include "core/prime_factored.hpp"

#include <stdexcept>

namespace w9j {

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("to_long: not an integer");
  return static_cast<long>(numerator(r));
}

Rational rational_from_coprime(Int num, Int den) {
  Rational out;
  // boost::rational exposes its parts by const reference only; writing
  // through them is fine on this non-const object and skips the gcd pass
  auto& raw = out.backend().data();
  const_cast<Int&>(raw.numerator()) = std::move(num);
  const_cast<Int&>(raw.denominator()) = std::move(den);
  return out;
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

PrimeFactored PrimeFactored::from_integer(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("from_integer: n must be positive");
  std::vector<Entry> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      std::int64_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return from_sorted_entries(std::move(out));
}

PrimeFactored PrimeFactored::from_integer(const Int& n) {
  if (n <= 0) throw std::invalid_argument("from_integer: n must be positive");
  Int m = n;
  std::vector<Entry> out;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      std::int64_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(static_cast<std::int64_t>(p), e);
    }
  }
  if (m > 1) out.emplace_back(static_cast<std::int64_t>(m), 1);
  return from_sorted_entries(std::move(out));
}

PrimeFactored PrimeFactored::from_rational(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("from_rational: r must be positive");
  PrimeFactored num = from_integer(Int(numerator(r)));
  PrimeFactored den = from_integer(Int(denominator(r)));
  return num * den.inverse();
}

Rational PrimeFactored::to_rational() const {
  Int num = 1, den = 1;
  for (const auto& [p, e] : factors_) {
    if (e > 0)
      num *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(e));
    else
      den *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(-e));
  }
  return Rational(num, den);
}

Int PrimeFactored::to_integer() const {
  Int num = 1;
  for (const auto& [p, e] : factors_) {
    if (e < 0) throw std::logic_error("to_integer: negative exponent");
    num *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(e));
  }
  return num;
}

PrimeFactored& PrimeFactored::operator*=(const PrimeFactored& other) {
  std::vector<Entry> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      merged.push_back(*a++);
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      std::int64_t e = a->second + b->second;
      if (e != 0) merged.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, factors_.end());
  merged.insert(merged.end(), b, other.factors_.end());
  factors_ = std::move(merged);
  return *this;
}

PrimeFactored PrimeFactored::inverse() const {
  PrimeFactored out = *this;
  for (auto& [p, e] : out.factors_) e = -e;
  return out;
}

PrimeFactored PrimeFactored::pow(std::int64_t e) const {
  if (e == 0) return {};
  PrimeFactored out = *this;
  for (auto& [p, x] : out.factors_) x *= e;
  return out;
}

std::pair<Rational, PrimeFactored> PrimeFactored::split_square() const {
  Int num = 1, den = 1;
  std::vector<Entry> rem;
  for (const auto& [p, e] : factors_) {
    // e = 2q + r with r in {-1,0,1} sharing e's sign, so denominator primes
    // stay in the radicand and the radical renders as sqrt(p/q)
    std::int64_t r = e % 2;
    std::int64_t q = (e - r) / 2;
    if (q > 0)
      num *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(q));
    else if (q < 0)
      den *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(-q));
    if (r != 0) rem.emplace_back(p, r);
  }
  // num and den are coprime by construction
  return {Rational(std::move(num), std::move(den)), from_sorted_entries(std::move(rem))};
}

bool PrimeFactored::is_square_free() const {
  for (const auto& [p, e] : factors_)
    if (e != 1 && e != -1) return false;
  return true;
}

PrimeFactored PrimeFactored::from_sorted_entries(std::vector<Entry> entries) {
  PrimeFactored out;
  out.factors_ = std::move(entries);
  return out;
}

}  // namespace w9j
