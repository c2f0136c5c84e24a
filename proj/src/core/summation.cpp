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
#include "core/summation.hpp"

#include <initializer_list>
#include <numeric>
#include <optional>

#include "core/errors.hpp"
#include "core/factorials.hpp"

namespace w9j {

namespace {

std::int64_t wp5f4_depth(const Rational& x, const Rational& y, const Rational& z) {
  std::optional<std::int64_t> best;
  for (const Rational* v : {&x, &y, &z}) {
    const auto& data = v->backend().data();  // skips temporary-laden compares
    if (data.denominator() == 1 && data.numerator() >= 0) {
      const auto k = static_cast<std::int64_t>(data.numerator());
      if (!best || k < *best) best = k;
    }
  }
  if (!best) throw NonTerminating("eval_wp5f4: none of x, y, z is a nonnegative integer");
  return *best;
}

}  // namespace

Rational eval_wp5f4(const Rational& n, const Rational& x, const Rational& y,
                    const Rational& z) {
  const std::int64_t depth = wp5f4_depth(x, y, z);

  // Work over a common denominator D so the loop stays in pure integer
  // arithmetic: every parameter combination below is an integer numerator
  // over D, and equal factor counts make the D powers cancel per step
  // (except one leftover D at k = 1).
  // backend access avoids a big-int copy per numerator()/denominator() call
  auto den_of = [](const Rational& r) {
    return static_cast<std::int64_t>(r.backend().data().denominator());
  };
  std::int64_t dd = den_of(n);
  for (const Rational* v : {&x, &y, &z}) dd = std::lcm(dd, den_of(*v));
  auto scaled = [&](const Rational& r) {
    return static_cast<std::int64_t>(r.backend().data().numerator()) * (dd / den_of(r));
  };
  const std::int64_t nn = scaled(n), xx = scaled(x), yy = scaled(y), zz = scaled(z);

  // One growing fraction: term = tnum/tden, partial sum = acc/tden. Factor
  // ratios are pushed in unreduced; when every factor is small the per-step
  // ratio is fused into one machine-integer pair, so each step costs four
  // big-integer operations. A single normalization happens at the end.
  Int tnum = 1, tden = 1, acc = 1;
  auto push = [&](std::int64_t rn, std::int64_t rd) {
    if (rd == 0) throw PoleError("eval_wp5f4: zero denominator factor");
    // reducing the step ratio keeps the running products small
    const std::int64_t g = std::gcd(rn, rd);
    tnum *= rn / g;
    tden *= rd / g;
    acc *= rd / g;
  };

  // bound on any single factor below; 5 fused factors stay within int64
  const std::int64_t bound =
      std::max({std::abs(nn), std::abs(xx), std::abs(yy), std::abs(zz)}) +
      (2 * depth + 2) * dd;
  const bool fused = bound < 6000;  // 6000^5 < 2^63

  for (std::int64_t k = 1; k <= depth; ++k) {
    if (k == 1) {
      if (fused) {
        push((nn + 2 * dd) * -xx * yy * zz,
             (xx + nn + dd) * (yy + nn + dd) * (zz + nn + dd) * dd);
      } else {
        push((nn + 2 * dd) * -xx, (xx + nn + dd) * (yy + nn + dd));
        push(yy * zz, (zz + nn + dd) * dd);
      }
    } else if (fused) {
      push((nn + 2 * k * dd) * (nn + (k - 1) * dd) * ((k - 1) * dd - xx) *
               ((k - 1) * dd - yy) * ((k - 1) * dd - zz),
           (nn + (2 * k - 2) * dd) * (xx + nn + k * dd) * (yy + nn + k * dd) *
               (zz + nn + k * dd) * (k * dd));
    } else {
      push((nn + 2 * k * dd) * (nn + (k - 1) * dd),
           (nn + (2 * k - 2) * dd) * (xx + nn + k * dd));
      push(((k - 1) * dd - xx) * ((k - 1) * dd - yy),
           (yy + nn + k * dd) * (zz + nn + k * dd));
      push((k - 1) * dd - zz, k * dd);
    }
    acc += tnum;
  }
  return Rational(acc, tden);
}

PFQSpec wp5f4_spec(const Rational& n, const Rational& x, const Rational& y,
                   const Rational& z) {
  PFQSpec spec;
  spec.numerator_params = {n / 2 + 1, n, -x, -y, -z};
  spec.denominator_params = {n / 2, x + n + 1, y + n + 1, z + n + 1};
  return spec;
}

Rational dougall_rhs(const Rational& n, const Rational& x, const Rational& y,
                     const Rational& z) {
  return gamma_ratio(x + n + 1, x + y + n + 1) * gamma_ratio(y + n + 1, y + z + n + 1) *
         gamma_ratio(z + n + 1, x + z + n + 1) * gamma_ratio(x + y + z + n + 1, n + 1);
}

Rational dougall_rhs_as_printed(const Rational& n, const Rational& x,
                                const Rational& y, const Rational& z) {
  return gamma_ratio(x + n + 1, x + z + n + 1) * gamma_ratio(y + n + 1, y + z + n + 1) *
         gamma_ratio(x + y + n + 1, x + y + z + n + 1) * gamma_ratio(z + n + 1, n + 1);
}

Rational dixon_rhs(const Rational& n, const Rational& x, const Rational& y) {
  return gamma_ratio(n / 2 + 1, n / 2 + x + 1) * gamma_ratio(n + x + 1, n + 1) *
         gamma_ratio(n + y + 1, n + x + y + 1) * gamma_ratio(n / 2 + x + y + 1, n / 2 + y + 1);
}

}  // namespace w9j
