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

#include <array>
#include <utility>

#include "core/halfint.hpp"
#include "core/pfq.hpp"
#include "core/sqrt_rational.hpp"

namespace w9j {

struct ThreeJ {
  HalfInt j1, j2, j3;  // magnitudes
  HalfInt m1, m2, m3;  // projections
};

// Standard 2x3 arrangement {j1 j2 j3; j4 j5 j6}.
struct SixJ {
  std::array<HalfInt, 6> j{};
};

// Single-sum (Racah) 3j with the Condon-Shortley-consistent sign convention.
// Invalid inputs yield exact zero.
SqrtRational three_j(const ThreeJ& s);

// Racah single-sum 6j; invalid triads yield exact zero.
SqrtRational six_j(const SixJ& s);

// 6j as prefactor x balanced 4F3(1): prefactor * eval_direct(series) == six_j.
// Requires all four triads valid.
std::pair<SqrtRational, PFQSpec> six_j_as_4f3(const SixJ& s);

// Reference 9j: single sum over the auxiliary momentum of
// (-1)^(2x) (2x+1) times a product of three 6j symbols.
SqrtRational nine_j_sum(const NineJ& s);

}  // namespace w9j
