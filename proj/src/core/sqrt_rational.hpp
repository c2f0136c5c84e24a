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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/prime_factored.hpp"
#include "core/types.hpp"

namespace w9j {

// sign * coefficient * sqrt(radicand), kept canonical: the radicand is the
// square-free rational part of the squared value in lowest terms (stored
// exponents are +-1, each matching the sign of the prime's net exponent in
// value^2) and the sign lives in the rational coefficient. Zero is
// coefficient 0 with empty radicand, so two values are equal iff their
// representations are.
class SqrtRational {
 public:
  SqrtRational() = default;  // zero

  explicit SqrtRational(Rational value);
  // coeff * sqrt(radicand); canonicalizes.
  SqrtRational(Rational coeff, const PrimeFactored& radicand);
  static SqrtRational sqrt_of(const PrimeFactored& radicand);

  static SqrtRational zero() { return {}; }

  bool is_zero() const { return coeff_.is_zero(); }
  int sign() const { return coeff_.sign(); }
  const Rational& coefficient() const { return coeff_; }
  const PrimeFactored& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_.is_one(); }

  // sign-independent square, equal to the full radicand of the value
  Rational squared() const;

  SqrtRational& operator*=(const SqrtRational& other);
  friend SqrtRational operator*(SqrtRational a, const SqrtRational& b) {
    a *= b;
    return a;
  }
  SqrtRational& operator*=(const Rational& scale);
  SqrtRational inverse() const;
  SqrtRational operator-() const;

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

  // Canonical text form: "p/q*sqrt(r/s)", omitting the sqrt factor when the
  // radicand is 1 and the coefficient when it is +-1; "0" for zero.
  std::string to_string() const;

  // Correctly rounded (round-half-even at the final digit) decimal rendering
  // with the given number of significant digits.
  std::string to_decimal(int digits) const;

 private:
  Rational coeff_ = 0;
  PrimeFactored radicand_;  // square-free; empty when coeff_ == 0
};

// Splits coeff*sqrt(radicand) into (coefficient, square-free radicand).
std::pair<Rational, PrimeFactored> canonicalize_sqrt(const Rational& coeff,
                                                     const PrimeFactored& radicand);

// Sum of like terms: every nonzero term must carry the same square-free
// radicand; throws MixedRadicands otherwise.
SqrtRational sqrt_add_same_radicand(
    std::span<const std::pair<Rational, PrimeFactored>> terms);

}  // namespace w9j
