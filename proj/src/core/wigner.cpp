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
#include "core/wigner.hpp"

#include <algorithm>
#include <vector>

#include "core/errors.hpp"
#include "core/factorials.hpp"

namespace w9j {

namespace {

// Integral value of a HalfInt combination; throws ParityViolation if the
// bookkeeping ever produces a genuine half-integer.
std::int64_t as_int(HalfInt h) { return h.to_integer(); }

int phase_sign(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

PrimeFactored delta_squared(HalfInt a, HalfInt b, HalfInt c) {
  return factorial(as_int(a + b - c)) * factorial(as_int(a - b + c)) *
         factorial(as_int(b + c - a)) *
         factorial(as_int(a + b + c + HalfInt(1))).inverse();
}

}  // namespace

SqrtRational three_j(const ThreeJ& s) {
  if ((s.m1 + s.m2 + s.m3).twice() != 0) return {};
  if (!is_triangle({s.j1, s.j2, s.j3})) return {};
  const std::array<std::pair<HalfInt, HalfInt>, 3> jm = {
      {{s.j1, s.m1}, {s.j2, s.m2}, {s.j3, s.m3}}};
  for (const auto& [j, m] : jm) {
    if (m.twice() > j.twice() || m.twice() < -j.twice()) return {};
    if ((j.twice() - m.twice()) % 2 != 0) return {};
  }

  const std::int64_t tmin =
      std::max<std::int64_t>({0, as_int(s.j2 - s.j3 - s.m1), as_int(s.j1 - s.j3 + s.m2)});
  const std::int64_t tmax = std::min<std::int64_t>(
      {as_int(s.j1 + s.j2 - s.j3), as_int(s.j1 - s.m1), as_int(s.j2 + s.m2)});
  if (tmin > tmax) return {};

  Rational sum = 0;
  for (std::int64_t t = tmin; t <= tmax; ++t) {
    Int den = int_factorial(t) * int_factorial(as_int(s.j1 + s.j2 - s.j3) - t) *
              int_factorial(as_int(s.j1 - s.m1) - t) *
              int_factorial(as_int(s.j2 + s.m2) - t) *
              int_factorial(as_int(s.j3 - s.j2 + s.m1) + t) *
              int_factorial(as_int(s.j3 - s.j1 - s.m2) + t);
    sum += Rational(Int(phase_sign(t)), den);
  }
  if (sum == 0) return {};

  PrimeFactored radicand = delta_squared(s.j1, s.j2, s.j3);
  for (const auto& [j, m] : jm)
    radicand *= factorial(as_int(j + m)) * factorial(as_int(j - m));

  const Rational coeff = sum * phase_sign(as_int(s.j1 - s.j2 - s.m3));
  return SqrtRational(coeff, radicand);
}

SqrtRational six_j(const SixJ& s) {
  const HalfInt j1 = s.j[0], j2 = s.j[1], j3 = s.j[2];
  const HalfInt j4 = s.j[3], j5 = s.j[4], j6 = s.j[5];
  if (!is_triangle({j1, j2, j3}) || !is_triangle({j1, j5, j6}) ||
      !is_triangle({j4, j2, j6}) || !is_triangle({j4, j5, j3}))
    return {};

  const std::int64_t s1 = as_int(j1 + j2 + j3), s2 = as_int(j1 + j5 + j6);
  const std::int64_t s3 = as_int(j4 + j2 + j6), s4 = as_int(j4 + j5 + j3);
  const std::int64_t p1 = as_int(j1 + j2 + j4 + j5), p2 = as_int(j2 + j3 + j5 + j6);
  const std::int64_t p3 = as_int(j1 + j3 + j4 + j6);
  const std::int64_t kmin = std::max({s1, s2, s3, s4});
  const std::int64_t kmax = std::min({p1, p2, p3});
  if (kmin > kmax) return {};

  Rational sum = 0;
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    Int den = int_factorial(k - s1) * int_factorial(k - s2) * int_factorial(k - s3) *
              int_factorial(k - s4) * int_factorial(p1 - k) * int_factorial(p2 - k) *
              int_factorial(p3 - k);
    sum += Rational(Int(phase_sign(k)) * int_factorial(k + 1), den);
  }
  if (sum == 0) return {};

  PrimeFactored radicand = delta_squared(j1, j2, j3) * delta_squared(j1, j5, j6) *
                           delta_squared(j4, j2, j6) * delta_squared(j4, j5, j3);
  return SqrtRational(sum, radicand);
}

std::pair<SqrtRational, PFQSpec> six_j_as_4f3(const SixJ& s) {
  const HalfInt j1 = s.j[0], j2 = s.j[1], j3 = s.j[2];
  const HalfInt j4 = s.j[3], j5 = s.j[4], j6 = s.j[5];
  if (!is_triangle({j1, j2, j3}) || !is_triangle({j1, j5, j6}) ||
      !is_triangle({j4, j2, j6}) || !is_triangle({j4, j5, j3}))
    throw InvalidTriad("six_j_as_4f3: invalid triad");

  const std::array<std::int64_t, 4> tsum = {as_int(j1 + j2 + j3), as_int(j1 + j5 + j6),
                                            as_int(j4 + j2 + j6), as_int(j4 + j5 + j3)};
  const std::array<std::int64_t, 3> psum = {as_int(j1 + j2 + j4 + j5),
                                            as_int(j2 + j3 + j5 + j6),
                                            as_int(j1 + j3 + j4 + j6)};
  const std::int64_t kmin = *std::max_element(tsum.begin(), tsum.end());

  // Leading Racah-sum term: the rest of the sum is a balanced 4F3(1).
  Int den = 1;
  for (std::int64_t t : tsum) den *= int_factorial(kmin - t);
  for (std::int64_t p : psum) den *= int_factorial(p - kmin);
  const Rational lead = Rational(Int(phase_sign(kmin)) * int_factorial(kmin + 1), den);

  PFQSpec spec;
  spec.numerator_params = {Rational(kmin + 2), Rational(kmin - psum[0]),
                           Rational(kmin - psum[1]), Rational(kmin - psum[2])};
  bool max_dropped = false;
  for (std::int64_t t : tsum) {
    if (!max_dropped && t == kmin) {
      max_dropped = true;
      continue;
    }
    spec.denominator_params.push_back(Rational(kmin + 1 - t));
  }

  PrimeFactored radicand = delta_squared(j1, j2, j3) * delta_squared(j1, j5, j6) *
                           delta_squared(j4, j2, j6) * delta_squared(j4, j5, j3);
  return {SqrtRational(lead, radicand), spec};
}

SqrtRational nine_j_sum(const NineJ& s) {
  if (!ninej_validate(s).empty()) return {};
  const HalfInt j1 = s.at(0, 0), j2 = s.at(0, 1), j3 = s.at(0, 2);
  const HalfInt j4 = s.at(1, 0), j5 = s.at(1, 1), j6 = s.at(1, 2);
  const HalfInt j7 = s.at(2, 0), j8 = s.at(2, 1), j9 = s.at(2, 2);

  const std::int64_t lo = std::max({std::abs(j1.twice() - j9.twice()),
                                    std::abs(j4.twice() - j8.twice()),
                                    std::abs(j2.twice() - j6.twice())});
  const std::int64_t hi = std::min({j1.twice() + j9.twice(), j4.twice() + j8.twice(),
                                    j2.twice() + j6.twice()});

  std::vector<std::pair<Rational, PrimeFactored>> terms;
  for (std::int64_t tx = lo; tx <= hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    SqrtRational term = six_j({{j1, j4, j7, j8, j9, x}});
    if (term.is_zero()) continue;
    term *= six_j({{j2, j5, j8, j4, x, j6}});
    if (term.is_zero()) continue;
    term *= six_j({{j3, j6, j9, x, j1, j2}});
    if (term.is_zero()) continue;
    term *= Rational((tx + 1) * phase_sign(tx));
    terms.emplace_back(term.coefficient(), term.radicand());
  }
  return sqrt_add_same_radicand(terms);
}

}  // namespace w9j
