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
#include "core/halfint.hpp"

#include <charconv>
#include <sstream>

#include "core/errors.hpp"
#include "core/factorials.hpp"

namespace w9j {

std::int64_t HalfInt::to_integer() const {
  if (twice_ % 2 != 0) throw ParityViolation("HalfInt: not an integer: " + to_string());
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

std::int64_t parse_int_or_throw(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("not a half-integer: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

HalfInt parse_halfint(std::string_view text) {
  if (text.empty()) throw ParseError("not a half-integer: ''");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int_or_throw(text.substr(0, slash), text);
    std::int64_t den = parse_int_or_throw(text.substr(slash + 1), text);
    if (den == 2) return HalfInt::from_twice(num);
    if (den == 1) return HalfInt(num);
    throw ParseError("not a half-integer: '" + std::string(text) + "'");
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::int64_t whole = parse_int_or_throw(text.substr(0, dot), text);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !text.empty() && text.front() == '-';
    if (frac == "0" || frac == "00")
      return HalfInt(whole);
    if (frac == "5" || frac == "50") {
      std::int64_t tw = 2 * whole + (negative ? -1 : 1);
      return HalfInt::from_twice(tw);
    }
    throw ParseError("not a half-integer: '" + std::string(text) + "'");
  }
  return HalfInt(parse_int_or_throw(text, text));
}

bool is_triangle(const Triad& t) {
  const std::int64_t a = t.j1.twice(), b = t.j2.twice(), c = t.j3.twice();
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

namespace {

// Factorial of a triad combination; the argument must be an integral,
// nonnegative HalfInt.
PrimeFactored triad_factorial(HalfInt h) {
  std::int64_t n = h.to_integer();
  if (n < 0) throw InvalidTriad("negative factorial argument");
  return factorial(n);
}

}  // namespace

PrimeFactored delta_radicand(const Triad& t) {
  if (!is_triangle(t)) throw InvalidTriad("delta_radicand: invalid triad");
  const HalfInt a = t.j1, b = t.j2, c = t.j3;
  return triad_factorial(a + b - c) * triad_factorial(a - b + c) *
         triad_factorial(c - a + b) * triad_factorial(a + b + c + HalfInt(1)).inverse();
}

SqrtRational delta_coeff(const Triad& t) {
  return SqrtRational::sqrt_of(delta_radicand(t));
}

PrimeFactored eta_radicand(const Triad& t) {
  if (!is_triangle(t)) throw InvalidTriad("eta_radicand: invalid triad");
  const HalfInt a = t.j1, b = t.j2, c = t.j3;
  return triad_factorial(a - b + c) * triad_factorial(a + b - c) *
         triad_factorial(a + b + c + HalfInt(1)) * triad_factorial(b + c - a).inverse();
}

SqrtRational eta_coeff(const Triad& t) {
  return SqrtRational::sqrt_of(eta_radicand(t));
}

NineJ NineJ::transposed() const {
  NineJ out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(r, c) = at(c, r);
  return out;
}

HalfInt NineJ::entry_sum() const {
  HalfInt s;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) s = s + at(r, c);
  return s;
}

NineJ NineJ::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  NineJ out;
  std::string token;
  for (int i = 0; i < 9; ++i) {
    if (!(in >> token)) throw ParseError("expected 9 half-integer tokens");
    out.at(i / 3, i % 3) = parse_halfint(token);
  }
  if (in >> token) throw ParseError("trailing token: '" + token + "'");
  return out;
}

std::string NineJ::to_string() const {
  std::string out;
  for (int i = 0; i < 9; ++i) {
    if (i) out += " ";
    out += at(i / 3, i % 3).to_string();
  }
  return out;
}

std::vector<TriadFailure> ninej_validate(const NineJ& s) {
  std::vector<TriadFailure> out;
  for (int r = 0; r < 3; ++r)
    if (!is_triangle(s.row(r))) out.push_back({true, r, s.row(r)});
  for (int c = 0; c < 3; ++c)
    if (!is_triangle(s.col(c))) out.push_back({false, c, s.col(c)});
  return out;
}

}  // namespace w9j
