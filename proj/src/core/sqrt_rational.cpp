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
#include "core/sqrt_rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <limits>

#include "core/errors.hpp"

namespace w9j {

SqrtRational::SqrtRational(Rational value) : coeff_(std::move(value)) {}

SqrtRational::SqrtRational(Rational coeff, const PrimeFactored& radicand) {
  if (coeff.is_zero()) return;
  // Single canonicalization pass, gcd-free: for every radicand prime the
  // net exponent in value^2 is 2*(its valuation in the coefficient) + (its
  // radicand exponent); the canonical square-free part keeps the sign of
  // that net exponent and the even remainder moves into the coefficient.
  // Since only whole prime powers move between the coprime numerator and
  // denominator, the result stays coprime.
  Int num = numerator(coeff);
  Int den = denominator(coeff);
  const bool negative = num < 0;
  if (negative) num = -num;
  std::vector<PrimeFactored::Entry> entries;
  entries.reserve(radicand.factors().size());
  // prime powers moving into the coefficient are batched into machine-word
  // chunks so each radicand prime does not pay a big-integer multiply
  std::uint64_t num_chunk = 1, den_chunk = 1;
  auto chunk_in = [](std::uint64_t& chunk, Int& target, std::int64_t p,
                     std::int64_t count) {
    const auto up = static_cast<std::uint64_t>(p);
    for (std::int64_t i = 0; i < count; ++i) {
      if (chunk > std::numeric_limits<std::uint64_t>::max() / up) {
        target *= chunk;
        chunk = 1;
      }
      chunk *= up;
    }
  };
  for (const auto& [p, e] : radicand.factors()) {
    std::int64_t v = 0;
    while (boost::multiprecision::integer_modulus(num, p) == 0) {
      num /= p;
      ++v;
    }
    while (boost::multiprecision::integer_modulus(den, p) == 0) {
      den /= p;
      --v;
    }
    const std::int64_t net = 2 * v + e;
    const std::int64_t e_out = net % 2;
    const std::int64_t v_out = (net - e_out) / 2;
    if (v_out > 0)
      chunk_in(num_chunk, num, p, v_out);
    else if (v_out < 0)
      chunk_in(den_chunk, den, p, -v_out);
    if (e_out != 0) entries.emplace_back(p, e_out);
  }
  if (num_chunk != 1) num *= num_chunk;
  if (den_chunk != 1) den *= den_chunk;
  coeff_ = rational_from_coprime(negative ? Int(-num) : num, std::move(den));
  radicand_ = PrimeFactored::from_sorted_entries(std::move(entries));
}

SqrtRational SqrtRational::sqrt_of(const PrimeFactored& radicand) {
  return SqrtRational(Rational(1), radicand);
}

Rational SqrtRational::squared() const {
  return coeff_ * coeff_ * radicand_.to_rational();
}

SqrtRational& SqrtRational::operator*=(const SqrtRational& other) {
  if (is_zero() || other.is_zero()) {
    *this = {};
    return *this;
  }
  *this = SqrtRational(coeff_ * other.coeff_, radicand_ * other.radicand_);
  return *this;
}

SqrtRational& SqrtRational::operator*=(const Rational& scale) {
  if (scale == 0) {
    *this = {};
    return *this;
  }
  if (scale == 1) return *this;
  if (scale == -1) {
    coeff_ = -coeff_;
    return *this;
  }
  *this = SqrtRational(coeff_ * scale, radicand_);
  return *this;
}

SqrtRational SqrtRational::inverse() const {
  if (is_zero()) throw std::domain_error("SqrtRational: inverse of zero");
  return SqrtRational(1 / (coeff_ * radicand_.to_rational()), radicand_);
}

SqrtRational SqrtRational::operator-() const {
  SqrtRational out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

std::string SqrtRational::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  Rational c = coeff_;
  if (c < 0) {
    out += "-";
    c = -c;
  }
  const bool have_root = !radicand_.is_one();
  if (!have_root) {
    out += rational_to_string(c);
    return out;
  }
  if (c != 1) out += rational_to_string(c) + "*";
  out += "sqrt(" + rational_to_string(radicand_.to_rational()) + ")";
  return out;
}

std::pair<Rational, PrimeFactored> canonicalize_sqrt(const Rational& coeff,
                                                     const PrimeFactored& radicand) {
  auto [square, rem] = radicand.split_square();
  return {coeff * square, std::move(rem)};
}

SqrtRational sqrt_add_same_radicand(
    std::span<const std::pair<Rational, PrimeFactored>> terms) {
  Rational sum = 0;
  PrimeFactored radicand;
  bool have_radicand = false;
  for (const auto& [coeff_in, rad_in] : terms) {
    auto [coeff, rad] = canonicalize_sqrt(coeff_in, rad_in);
    if (coeff == 0) continue;
    // Terms in the same radical class can still carry different square-free
    // representatives (sqrt(3) vs sqrt(1/3)); bring every radicand to
    // positive exponents via sqrt(1/p) = (1/p) sqrt(p) before comparing.
    if (std::any_of(rad.factors().begin(), rad.factors().end(),
                    [](const PrimeFactored::Entry& f) { return f.second < 0; })) {
      std::vector<PrimeFactored::Entry> pos;
      pos.reserve(rad.factors().size());
      for (const auto& [p, e] : rad.factors()) {
        if (e < 0) coeff /= p;
        pos.emplace_back(p, e < 0 ? -e : e);
      }
      rad = PrimeFactored::from_sorted_entries(std::move(pos));
    }
    if (!have_radicand) {
      radicand = rad;
      have_radicand = true;
    } else if (rad != radicand) {
      throw MixedRadicands("sqrt_add_same_radicand: distinct radicands");
    }
    sum += coeff;
  }
  if (!have_radicand || sum == 0) return {};
  return SqrtRational(sum, radicand);
}

namespace {

Int pow10(std::int64_t k) {
  return boost::multiprecision::pow(Int(10), static_cast<unsigned>(k));
}

}  // namespace

std::string SqrtRational::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (is_zero()) return "0";

  const Rational sq = squared();  // value^2, positive
  const Int N = numerator(sq);
  const Int D = denominator(sq);

  // t = number of digits before the decimal point: 10^(t-1) <= |x| < 10^t.
  std::int64_t t = static_cast<std::int64_t>(
      (static_cast<double>(msb(N) + 1) - static_cast<double>(msb(D) + 1)) /
          (2.0 * 3.321928) +
      1);
  // The estimate above can be off; fix up exactly with x^2 vs 10^(2t).
  auto cmp_pow = [&](std::int64_t e) {
    // compare x^2 with 10^(2e): N/D ? 10^(2e)
    if (e >= 0) return (N < D * pow10(2 * e)) ? -1 : 1;
    return (N * pow10(-2 * e) < D) ? -1 : 1;
  };
  while (cmp_pow(t) > 0) ++t;
  while (cmp_pow(t - 1) < 0) --t;

  const std::int64_t m = digits - t;  // digits after the point
  Int n0;
  Int tie_lhs, tie_rhs;
  if (m >= 0) {
    n0 = sqrt(Int(N * D * pow10(2 * m))) / D;
    tie_lhs = 4 * N * pow10(2 * m);
    tie_rhs = D * (2 * n0 + 1) * (2 * n0 + 1);
  } else {
    n0 = sqrt(Int(N * D)) / (D * pow10(-m));
    tie_lhs = 4 * N;
    tie_rhs = D * pow10(-2 * m) * (2 * n0 + 1) * (2 * n0 + 1);
  }
  if (tie_lhs > tie_rhs || (tie_lhs == tie_rhs && (n0 & 1) != 0)) ++n0;

  std::int64_t point = t;
  if (n0 == pow10(digits)) {
    n0 = pow10(digits - 1);
    ++point;
  }
  std::string s = n0.str();
  // s has exactly `digits` characters
  std::string out = (sign() < 0) ? "-" : "";
  if (point > 0 && point <= digits) {
    out += s.substr(0, static_cast<std::size_t>(point));
    if (point < digits) out += "." + s.substr(static_cast<std::size_t>(point));
  } else if (point <= 0 && -point <= 4) {
    out += "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else {
    out += s.substr(0, 1);
    if (digits > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(point - 1);
  }
  return out;
}

}  // namespace w9j
