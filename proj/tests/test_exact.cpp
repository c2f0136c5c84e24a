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

#include <random>

#include "common.hpp"
#include "core/errors.hpp"
#include "core/factorials.hpp"

using namespace w9j;
using w9j::test::parse_canonical;

TEST_CASE("integer factorials match the iterated product") {
  Int expect = 1;
  for (std::int64_t n = 0; n <= 40; ++n) {
    if (n > 0) expect *= n;
    CHECK(int_factorial(n) == expect);
    CHECK(factorial(n).to_integer() == expect);
  }
  CHECK_THROWS_AS(int_factorial(-1), std::invalid_argument);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("pochhammer and gamma_ratio") {
  CHECK(pochhammer(Rational(3), 4) == Rational(3 * 4 * 5 * 6));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-2), 5) == 0);
  CHECK(pochhammer(Rational(7, 3), 0) == 1);

  // Gamma(7)/Gamma(4) = 4*5*6
  CHECK(gamma_ratio(Rational(7), Rational(4)) == Rational(120));
  CHECK(gamma_ratio(Rational(4), Rational(7)) == Rational(1, 120));
  CHECK(gamma_ratio(Rational(9, 2), Rational(5, 2)) == Rational(35, 4));
  CHECK_THROWS_AS(gamma_ratio(Rational(3), Rational(1, 2)), NonIntegerOffset);
  CHECK_THROWS_AS(gamma_ratio(Rational(0), Rational(2)), PoleError);
  CHECK_THROWS_AS(gamma_ratio(Rational(2), Rational(-1)), PoleError);
}

TEST_CASE("prime factored maps") {
  PrimeFactored n = PrimeFactored::from_integer(360);  // 2^3 3^2 5
  REQUIRE(n.factors().size() == 3);
  CHECK(n.to_integer() == 360);
  CHECK(n.to_rational() == Rational(360));
  CHECK(PrimeFactored::from_rational(Rational(8, 45)).to_rational() == Rational(8, 45));
  CHECK((n * n.inverse()).is_one());
  CHECK(n.pow(2).to_integer() == 360 * 360);
  CHECK(PrimeFactored::from_integer(Int("1000000007")).factors().size() == 1);
  CHECK_THROWS_AS(PrimeFactored::from_integer(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeFactored::from_rational(Rational(-2)), std::invalid_argument);
}

TEST_CASE("split_square keeps the remainder sign with the exponent") {
  // 2^5 / 3^3 -> square part 2^2/3^1 times remainder 2 / 3
  PrimeFactored v = PrimeFactored::from_rational(Rational(32, 27));
  auto [square, rem] = v.split_square();
  CHECK(square == Rational(4, 3));
  CHECK(rem.is_square_free());
  CHECK(rem.to_rational() == Rational(2, 3));
  CHECK(square * square * rem.to_rational() == Rational(32, 27));
}

TEST_CASE("factorial product accumulator agrees with explicit factorials") {
  FactorialProduct fp;
  fp.mul_factorial(10).mul_factorial(7, -1).mul_factorial(6, -1).mul_integer(21, 2);
  // 10! / (7! 6!) * 21^2 = 120/120 * ... compute directly
  Rational expect = Rational(int_factorial(10), int_factorial(7) * int_factorial(6)) *
                    Rational(21 * 21);
  CHECK(fp.build().to_rational() == expect);
  CHECK(FactorialProduct{}.build().is_one());
  CHECK_THROWS_AS(FactorialProduct{}.mul_factorial(-2), std::invalid_argument);
  CHECK_THROWS_AS(FactorialProduct{}.mul_integer(0), std::invalid_argument);
}

TEST_CASE("rational_from_coprime equals the checked constructor") {
  auto rng = w9j::test::seeded_rng(7);
  std::uniform_int_distribution<std::int64_t> d(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    Int num = d(rng), den = d(rng);
    Int g = gcd(num, den);
    num /= g;
    den /= g;
    if (i % 2) num = -num;
    CHECK(rational_from_coprime(Int(num), Int(den)) == Rational(num, den));
  }
}

TEST_CASE("sqrt-rational canonical form") {
  // 20/3 * sqrt(9/8) squares to 50  ->  canonically 5*sqrt(2)
  SqrtRational v(Rational(20, 3), PrimeFactored::from_rational(Rational(9, 8)));
  CHECK(v.to_string() == "5*sqrt(2)");
  CHECK(v.squared() == Rational(50));

  CHECK(SqrtRational(Rational(-1), PrimeFactored::from_integer(3)).to_string() ==
        "-sqrt(3)");
  CHECK(SqrtRational(Rational(9, 4)).to_string() == "9/4");
  CHECK(SqrtRational::zero().to_string() == "0");
  CHECK(SqrtRational::zero().is_zero());
  CHECK(SqrtRational(Rational(0), PrimeFactored::from_integer(7)).is_zero());

  // radicand prime signs follow the net exponent in value^2: 1/2 * sqrt(2)
  // squares to 1/2, so the 2 belongs downstairs
  SqrtRational w(Rational(1, 2), PrimeFactored::from_integer(2));
  CHECK(w.to_string() == "sqrt(1/2)");
  CHECK(w.squared() == Rational(1, 2));
}

TEST_CASE("sqrt-rational uniqueness: equal values share one representation") {
  // both are 2/7 * sqrt(5)
  SqrtRational a(Rational(3, 7), PrimeFactored::from_rational(Rational(20, 9)));
  SqrtRational b(Rational(1, 7), PrimeFactored::from_integer(20));
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("sqrt-rational algebra") {
  SqrtRational a(Rational(2), PrimeFactored::from_integer(3));
  SqrtRational b(Rational(5), PrimeFactored::from_integer(12));
  CHECK((a * b).to_string() == "60");  // 2sqrt3 * 10sqrt3 = 60
  CHECK((a * a.inverse()).to_string() == "1");
  CHECK((-a).to_string() == "-2*sqrt(3)");
  CHECK((-a).sign() == -1);
  SqrtRational c = a;
  c *= Rational(-3, 4);
  CHECK(c.to_string() == "-3/2*sqrt(3)");
  CHECK_THROWS(SqrtRational::zero().inverse());
}

TEST_CASE("sum of like radicals") {
  std::vector<std::pair<Rational, PrimeFactored>> terms = {
      {Rational(1, 2), PrimeFactored::from_integer(12)},
      {Rational(1, 3), PrimeFactored::from_integer(27)},
      {Rational(-1), PrimeFactored::from_integer(3)},
  };
  // sqrt(3) + sqrt(3) - sqrt(3) = sqrt(3)
  CHECK(sqrt_add_same_radicand(terms).to_string() == "sqrt(3)");

  std::vector<std::pair<Rational, PrimeFactored>> cancel = {
      {Rational(1), PrimeFactored::from_integer(5)},
      {Rational(-1), PrimeFactored::from_integer(5)},
  };
  CHECK(sqrt_add_same_radicand(cancel).is_zero());

  std::vector<std::pair<Rational, PrimeFactored>> mixed = {
      {Rational(1), PrimeFactored::from_integer(2)},
      {Rational(1), PrimeFactored::from_integer(3)},
  };
  CHECK_THROWS_AS(sqrt_add_same_radicand(mixed), MixedRadicands);
}

TEST_CASE("decimal rendering is correctly rounded") {
  CHECK(SqrtRational(Rational(2)).to_decimal(5) == "2.0000");
  CHECK(SqrtRational::sqrt_of(PrimeFactored::from_integer(2)).to_decimal(6) ==
        "1.41421");
  CHECK(SqrtRational::sqrt_of(PrimeFactored::from_integer(2)).to_decimal(11) ==
        "1.4142135624");  // rounds 1.41421356237 up
  CHECK(SqrtRational(Rational(-1, 8)).to_decimal(3) == "-0.125");
  CHECK(SqrtRational::zero().to_decimal(4) == "0");
  CHECK(SqrtRational(Rational(1, 1000000)).to_decimal(3) == "1.00e-6");
  CHECK(SqrtRational(Rational(12345)).to_decimal(2) == "1.2e4");
  CHECK_THROWS(SqrtRational(Rational(1)).to_decimal(0));
}

TEST_CASE("canonical strings round-trip through an independent parser") {
  auto roundtrip = [](const SqrtRational& v) {
    CHECK(parse_canonical(v.to_string()) == v);
  };
  roundtrip(SqrtRational::zero());
  roundtrip(SqrtRational(Rational(-22, 7)));
  roundtrip(SqrtRational(Rational(3, 5), PrimeFactored::from_rational(Rational(7, 11))));
  roundtrip(SqrtRational(Rational(-1), PrimeFactored::from_integer(15)));
  roundtrip(parse_canonical(w9j::test::worked_example_value()));
}
