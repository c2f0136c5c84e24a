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
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace w9j {

// A positive rational stored as a finite map prime -> signed exponent.
// Factors are kept sorted by prime; zero exponents are never stored.
class PrimeFactored {
 public:
  using Entry = std::pair<std::int64_t, std::int64_t>;

  PrimeFactored() = default;  // value 1

  static PrimeFactored one() { return {}; }
  // Trial-division factorization; n > 0.
  static PrimeFactored from_integer(std::int64_t n);
  static PrimeFactored from_integer(const Int& n);
  // r > 0.
  static PrimeFactored from_rational(const Rational& r);

  Rational to_rational() const;
  Int to_integer() const;  // requires all exponents >= 0

  bool is_one() const { return factors_.empty(); }
  const std::vector<Entry>& factors() const { return factors_; }

  PrimeFactored& operator*=(const PrimeFactored& other);
  friend PrimeFactored operator*(PrimeFactored a, const PrimeFactored& b) {
    a *= b;
    return a;
  }
  PrimeFactored inverse() const;
  PrimeFactored pow(std::int64_t e) const;

  // Splits into (rational square part, square-free remainder): exponent
  // e = 2q + r with r in {-1,0,1} sharing e's sign; the first component is
  // the rational p^q part, the second keeps p^r.
  std::pair<Rational, PrimeFactored> split_square() const;
  bool is_square_free() const;

  friend bool operator==(const PrimeFactored&, const PrimeFactored&) = default;

  // Internal: entries must be sorted, prime, nonzero-exponent.
  static PrimeFactored from_sorted_entries(std::vector<Entry> entries);

 private:
  std::vector<Entry> factors_;
};

}  // namespace w9j
