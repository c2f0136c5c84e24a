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
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/sqrt_rational.hpp"
#include "core/types.hpp"

namespace w9j {

// An angular momentum (or projection) stored exactly as its doubled value,
// so every triangle check is integer arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t integer_value) : twice_(2 * integer_value) {}
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  // Requires an integral value.
  std::int64_t to_integer() const;
  Rational to_rational() const { return Rational(twice_, 2); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

// Accepts "7", "7/2", "3.5", "-1", "3.0"; rejects non-half-integer tokens.
HalfInt parse_halfint(std::string_view text);

struct Triad {
  HalfInt j1, j2, j3;
};

// Triangle inequality plus integer perimeter.
bool is_triangle(const Triad& t);

// Delta(a,b,c) = sqrt((a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!)
SqrtRational delta_coeff(const Triad& t);
// Delta(a,b,c)^2 in factored form, for fusing several radicals into one.
PrimeFactored delta_radicand(const Triad& t);

// eta(a,b,c) = sqrt((a-b+c)!(a+b-c)!(a+b+c+1)!/(-a+b+c)!)
SqrtRational eta_coeff(const Triad& t);
// eta(a,b,c)^2 in factored form.
PrimeFactored eta_radicand(const Triad& t);

struct NineJ {
  std::array<std::array<HalfInt, 3>, 3> m{};

  HalfInt& at(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const HalfInt& at(int r, int c) const {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  Triad row(int r) const { return {at(r, 0), at(r, 1), at(r, 2)}; }
  Triad col(int c) const { return {at(0, c), at(1, c), at(2, c)}; }
  NineJ transposed() const;
  // Sum of all nine entries; integral for any symbol with valid triads.
  HalfInt entry_sum() const;

  friend bool operator==(const NineJ&, const NineJ&) = default;

  // Nine whitespace-separated half-integer tokens, row major.
  static NineJ parse(std::string_view text);
  std::string to_string() const;
};

struct TriadFailure {
  bool is_row;
  int index;  // 0-based row/column index
  Triad triad;
};

// Empty iff all six triads (three rows, three columns) are valid.
std::vector<TriadFailure> ninej_validate(const NineJ& s);

}  // namespace w9j
