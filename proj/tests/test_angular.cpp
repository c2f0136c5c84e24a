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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "core/errors.hpp"

using namespace w9j;
using w9j::test::H;
using w9j::test::ninej;

TEST_CASE("half-integer parsing accepts all documented spellings") {
  CHECK(parse_halfint("7") == H(14));
  CHECK(parse_halfint("7/2") == H(7));
  CHECK(parse_halfint("3.5") == H(7));
  CHECK(parse_halfint("-1") == H(-2));
  CHECK(parse_halfint("3.0") == H(6));
  CHECK(parse_halfint("0") == H(0));
  for (const char* bad : {"0.3", "2/3", "abc", "", "1/", "/2", "1.55", "3..5", "7/0"})
    CHECK_THROWS_AS(parse_halfint(bad), ParseError);
}

TEST_CASE("half-integer arithmetic and conversions") {
  CHECK(H(7).to_rational() == Rational(7, 2));
  CHECK(H(7).is_integer() == false);
  CHECK(H(6).to_integer() == 3);
  CHECK_THROWS_AS(H(7).to_integer(), ParityViolation);
  CHECK((H(3) + H(5)) == H(8));
  CHECK((H(3) - H(5)) == H(-2));
  CHECK(-H(3) == H(-3));
  CHECK(H(3) < H(4));
  CHECK(HalfInt(2).twice() == 4);
  CHECK(H(7).to_string() == "7/2");
  CHECK(H(6).to_string() == "3");
  CHECK(H(-1).to_string() == "-1/2");
}

TEST_CASE("triangle rule includes the integer-perimeter condition") {
  CHECK(is_triangle({H(2), H(2), H(4)}));
  CHECK(is_triangle({H(1), H(1), H(2)}));
  CHECK(is_triangle({H(1), H(1), H(0)}));
  CHECK(!is_triangle({H(2), H(2), H(10)}));   // inequality fails
  CHECK(!is_triangle({H(1), H(2), H(2)}));    // half-odd perimeter
  CHECK(!is_triangle({H(-2), H(2), H(4)}));   // negative momentum
}

TEST_CASE("triangle coefficients") {
  CHECK(delta_coeff({H(1), H(1), H(2)}).to_string() == "sqrt(1/6)");
  // Delta(1,1,1)^2 = 1/24; canonically 1/2*sqrt(1/6)
  CHECK(delta_coeff({H(2), H(2), H(2)}).to_string() == "1/2*sqrt(1/6)");
  CHECK(delta_coeff({H(2), H(2), H(2)}).squared() == Rational(1, 24));
  CHECK(eta_coeff({H(1), H(1), H(2)}).to_string() == "sqrt(6)");
  // eta(1,1,1) = sqrt(1*1*24/1) = 2*sqrt(6)
  CHECK(eta_coeff({H(2), H(2), H(2)}).to_string() == "2*sqrt(6)");

  // the radicand forms square to the coefficient
  const Triad t{H(3), H(5), H(4)};
  CHECK(SqrtRational::sqrt_of(delta_radicand(t)) == delta_coeff(t));
  CHECK(SqrtRational::sqrt_of(eta_radicand(t)) == eta_coeff(t));

  // Delta is symmetric under permutations of its arguments
  const Triad p{H(5), H(4), H(3)};
  CHECK(delta_coeff(t) == delta_coeff(p));
}

TEST_CASE("nine-j container: accessors, transpose, parsing") {
  NineJ s = ninej(12, 20, 32, 28, 24, 16, 24, 28, 48);
  CHECK(s.at(0, 2) == H(32));
  CHECK(s.row(1).j3 == H(16));
  CHECK(s.col(2).j2 == H(16));
  CHECK(s.entry_sum() == H(232));

  NineJ tr = s.transposed();
  CHECK(tr.at(2, 0) == H(32));
  CHECK(tr.transposed() == s);

  CHECK(NineJ::parse("6 10 16 14 12 8 12 14 24") == s);
  CHECK(NineJ::parse(s.to_string()) == s);
  CHECK(NineJ::parse("1/2 1/2 1  1/2 1/2 1  1 1 2") ==
        ninej(1, 1, 2, 1, 1, 2, 2, 2, 4));
  CHECK_THROWS_AS(NineJ::parse("1 2 3"), ParseError);            // too few
  CHECK_THROWS_AS(NineJ::parse("1 2 3 4 5 6 7 8 9 10"), ParseError);  // too many
  CHECK_THROWS_AS(NineJ::parse("1 2 3 4 5 6 7 8 x"), ParseError);
}

TEST_CASE("nine-j triad validation pinpoints the broken triad") {
  CHECK(ninej_validate(w9j::test::worked_example()).empty());

  // {1 1 3; 0 0 0; 0 0 0}: row 0 violates the triangle rule
  NineJ bad = ninej(2, 2, 6, 0, 0, 0, 0, 0, 0);
  auto failures = ninej_validate(bad);
  REQUIRE(!failures.empty());
  CHECK(failures.front().is_row);
  CHECK(failures.front().index == 0);
  CHECK(failures.front().triad.j3 == H(6));
}
