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

#include "core/pfq.hpp"
#include "core/types.hpp"

namespace w9j {

// The well-poised 5F4[n/2+1, n, -x, -y, -z; n/2, x+n+1, y+n+1, z+n+1; 1],
// evaluated from the algebraically cancelled term formula
//   t0 = 1,  t_k = (n+2k)(n+1)_{k-1}(-x)_k(-y)_k(-z)_k /
//                  [(x+n+1)_k(y+n+1)_k(z+n+1)_k k!]
// which stays correct at n = 0, where substituting into the raw parameter
// list truncates the series prematurely.
Rational eval_wp5f4(const Rational& n, const Rational& x, const Rational& y,
                    const Rational& z);

// The raw parameter lists of that series (no cancellation); useful for the
// structural classifiers and for documenting the n = 0 pitfall.
PFQSpec wp5f4_spec(const Rational& n, const Rational& x, const Rational& y,
                   const Rational& z);

// Dougall-Ramanujan closed form, in the standard arrangement
//   G(x+n+1)G(y+n+1)G(z+n+1)G(x+y+z+n+1) /
//   [G(n+1)G(x+y+n+1)G(x+z+n+1)G(y+z+n+1)].
Rational dougall_rhs(const Rational& n, const Rational& x, const Rational& y,
                     const Rational& z);

// The arrangement with G(x+y+n+1) in the numerator and G(x+y+z+n+1) in the
// denominator. Disagrees with the series (e.g. at n=0, x=y=z=2); kept for the
// regression test that pins down the discrepancy.
Rational dougall_rhs_as_printed(const Rational& n, const Rational& x,
                                const Rational& y, const Rational& z);

// Dixon closed form for the well-poised 3F2[n, -x, -y; x+n+1, y+n+1; 1]:
//   G(1+n/2)G(1+n+x)G(1+n+y)G(1+n/2+x+y) /
//   [G(1+n)G(1+n/2+x)G(1+n/2+y)G(1+n+x+y)]
// computed through integer-offset gamma_ratio pairings.
Rational dixon_rhs(const Rational& n, const Rational& x, const Rational& y);

}  // namespace w9j
