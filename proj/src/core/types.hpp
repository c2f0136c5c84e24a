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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace w9j {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// backend access: avoids a big-int copy and a temporary-laden comparison
inline bool is_integer(const Rational& r) {
  return r.backend().data().denominator() == 1;
}

// Requires |r| to fit in a long; callers only pass triad-bounded quantities.
long to_long(const Rational& r);

std::string rational_to_string(const Rational& r);

// Builds num/den directly, skipping the constructor's gcd normalization.
// Requires gcd(num, den) == 1 and den > 0.
Rational rational_from_coprime(Int num, Int den);

}  // namespace w9j
