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
#include "core/bench.hpp"
#include "core/errors.hpp"
#include "core/stretched.hpp"
#include "core/verify.hpp"
#include "core/wigner.hpp"

using namespace w9j;
using w9j::test::H;
using w9j::test::ninej;

namespace {

// {a, b, a+b; d, e, f; e, d, a+b+f} from the five free momenta (doubled).
NineJ stretched(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e,
                std::int64_t f) {
  return ninej(a, b, a + b, d, e, f, e, d, a + b + f);
}

}  // namespace

TEST_CASE("pattern detection") {
  StretchedPattern p = detect(w9j::test::worked_example());
  CHECK(p.kind == PatternKind::DoublyStretchedVarshalovich);
  CHECK(p.orientation.is_identity());
  CHECK(p.phase == 1);
  CHECK(p.canonical == w9j::test::worked_example());

  StretchedPattern t = detect(w9j::test::worked_example().transposed());
  CHECK(t.kind == PatternKind::DoublyStretchedVarshalovich);
  CHECK(t.orientation.transposed);
  CHECK(t.phase == 1);  // transposition carries no phase
  CHECK(t.canonical == w9j::test::worked_example());

  CHECK(detect(ninej(2, 2, 2, 2, 2, 2, 2, 2, 2)).kind == PatternKind::None);
  CHECK(detect(ninej(2, 2, 0, 2, 4, 4, 4, 6, 4)).kind == PatternKind::ZeroArgument);
  // columns (a, d, a+d), (b, e, b+e)
  CHECK(detect(ninej(2, 2, 2, 2, 2, 4, 4, 4, 4)).kind ==
        PatternKind::TwoColumnStretched);
}

TEST_CASE("three routes agree on the worked example") {
  const SqrtRational expect =
      w9j::test::parse_canonical(w9j::test::worked_example_value());
  CHECK(nine_j_varshalovich(H(12), H(20), H(28), H(24), H(16)) == expect);
  CHECK(nine_j_5f4(H(12), H(20), H(28), H(24), H(16)) == expect);
  CHECK(nine_j_sum(w9j::test::worked_example()) == expect);
  CHECK(nine_j_with_method(w9j::test::worked_example(), Method::FiveF4) == expect);
  CHECK(nine_j_with_method(w9j::test::worked_example(), Method::VarshalovichClosed) ==
        expect);
  CHECK(nine_j_with_method(w9j::test::worked_example(), Method::OracleSum) == expect);
}

TEST_CASE("three routes agree across a small sweep, including n = 0 symbols") {
  int checked = 0;
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t b = 0; b <= 4; ++b)
      for (std::int64_t d = 0; d <= 4; ++d)
        for (std::int64_t e = 0; e <= 4; ++e)
          for (std::int64_t f = std::abs(d - e); f <= d + e; f += 2) {
            const NineJ s = stretched(a, b, d, e, f);
            if (!ninej_validate(s).empty()) continue;
            const SqrtRational oracle = nine_j_sum(s);
            CHECK(nine_j_varshalovich(H(a), H(b), H(d), H(e), H(f)) == oracle);
            CHECK(nine_j_5f4(H(a), H(b), H(d), H(e), H(f)) == oracle);
            ++checked;
          }
  CHECK(checked > 50);

  // an n = 0 instance: e+d-a-b-f = 0 exercises the cancelled series head-on
  const NineJ s0 = stretched(2, 2, 4, 4, 4);
  CHECK(nine_j_5f4(H(2), H(2), H(4), H(4), H(4)) == nine_j_sum(s0));
}

TEST_CASE("momenta outside the family domain give an exact zero") {
  // e+d-a-b-f < 0 breaks the third-row triad, so both routes return zero
  CHECK(nine_j_5f4(H(4), H(4), H(2), H(2), H(2)).is_zero());
  CHECK(nine_j_varshalovich(H(4), H(4), H(2), H(2), H(2)).is_zero());
}

TEST_CASE("the stretched series parameters are well-poised") {
  for (auto [a, b, d, e, f] :
       {std::array<std::int64_t, 5>{12, 20, 28, 24, 16},
        std::array<std::int64_t, 5>{2, 2, 4, 4, 4},
        std::array<std::int64_t, 5>{1, 1, 3, 4, 3}}) {
    PFQSpec spec = nine_j_5f4_series(H(a), H(b), H(d), H(e), H(f));
    CHECK(is_well_poised_any_order(spec));
  }
}

TEST_CASE("column-stretched closed form: adjudicated factor matches the oracle") {
  CHECK(column_formula_verified());
  // {a, b, c; d, e, f; a+d, a+d+g, g}
  struct Case {
    std::int64_t a, b, c, d, e, f, g;  // doubled
  };
  int checked = 0;
  for (const Case& q :
       {Case{1, 2, 3, 1, 2, 3, 2}, Case{2, 4, 2, 2, 4, 2, 2}, Case{1, 3, 2, 2, 4, 4, 2},
        Case{2, 2, 2, 2, 2, 2, 0}}) {
    const NineJ s =
        ninej(q.a, q.b, q.c, q.d, q.e, q.f, q.a + q.d, q.a + q.d + q.g, q.g);
    REQUIRE(ninej_validate(s).empty());
    const SqrtRational oracle = nine_j_sum(s);
    CHECK(nine_j_column_stretched(H(q.a), H(q.b), H(q.c), H(q.d), H(q.e), H(q.f),
                                  H(q.g)) == oracle);
    // the printed square-root factor uses b where d belongs, so it can only
    // disagree when the two differ
    if (!oracle.is_zero() && q.b != q.d) {
      CHECK(nine_j_column_stretched_printed(H(q.a), H(q.b), H(q.c), H(q.d), H(q.e),
                                            H(q.f), H(q.g)) != oracle);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("zero-argument closed form matches the oracle and reports poles") {
  // {a, a, 0; d, e, f; g, h, f}
  struct Case {
    std::int64_t a, d, e, f, g, h;  // doubled
  };
  for (const Case& q : {Case{2, 2, 4, 4, 4, 6}, Case{2, 2, 2, 2, 2, 2},
                        Case{1, 2, 3, 3, 3, 4}}) {
    const NineJ s = ninej(q.a, q.a, 0, q.d, q.e, q.f, q.g, q.h, q.f);
    REQUIRE(ninej_validate(s).empty());
    CHECK(nine_j_zero_arg(H(q.a), H(q.d), H(q.e), H(q.f), H(q.g), H(q.h)) ==
          nine_j_sum(s));
  }

  // reachable pole inside the valid domain; the dispatcher must fall back
  const NineJ poled = ninej(3, 3, 0, 3, 5, 4, 6, 2, 4);
  CHECK_THROWS_AS(nine_j_zero_arg(H(3), H(3), H(5), H(4), H(6), H(2)), PoleError);
  MethodReport r = nine_j_auto(poled);
  CHECK(r.value == nine_j_sum(poled));
}

TEST_CASE("dispatcher method selection and verified mode") {
  MethodReport r = nine_j_auto(w9j::test::worked_example());
  CHECK(r.method == Method::FiveF4);
  CHECK(r.value.to_string() == w9j::test::worked_example_value());

  MethodReport v = nine_j_auto(w9j::test::worked_example(), EvalMode::Verified);
  CHECK(v.value == r.value);

  // generic symbol routes to the oracle
  CHECK(nine_j_auto(ninej(2, 2, 2, 2, 2, 2, 2, 2, 2)).method == Method::OracleSum);
  // two-column-stretched has no closed form: also the oracle
  CHECK(nine_j_auto(ninej(2, 2, 2, 2, 2, 4, 4, 4, 4)).method == Method::OracleSum);

  // fixed-method evaluation refuses inapplicable symbols
  CHECK_THROWS_AS(nine_j_with_method(ninej(2, 2, 2, 2, 2, 2, 2, 2, 2), Method::FiveF4),
                  Error);
  CHECK_THROWS_AS(
      nine_j_with_method(w9j::test::worked_example(), Method::ZeroArg4F3), Error);

  // symbols with an invalid triad evaluate to exact zero under every route
  const NineJ invalid = ninej(2, 2, 6, 0, 0, 0, 0, 0, 0);
  CHECK(nine_j_auto(invalid).value.is_zero());
  CHECK(nine_j_with_method(invalid, Method::OracleSum).is_zero());
}

TEST_CASE("identity sweep driver") {
  IdentityReport r = verify_identities(2, 2, 5, false);
  CHECK(r.ok());
  CHECK(r.failures == 0);
  CHECK(r.dougall_checked > 0);
  CHECK(r.dixon_checked > 0);
  CHECK(r.stretched_checked > 0);

  // the printed closed-form arrangement is caught by the same driver
  IdentityReport bad = verify_identities(2, 2, 0, true);
  CHECK(!bad.ok());
  CHECK(bad.failures > 0);
  CHECK(!bad.first_failure.empty());
}

TEST_CASE("benchmark records are self-consistent") {
  BenchmarkRecord r = bench_method(w9j::test::worked_example(), Method::FiveF4, 5);
  CHECK(r.repetitions == 5);
  CHECK(r.min_ns > 0);
  CHECK(r.median_ns >= r.min_ns);
  CHECK(r.value_rendered == w9j::test::worked_example_value());

  BenchmarkRecord one = bench_method(w9j::test::worked_example(), Method::OracleSum, 1);
  CHECK(one.median_ns == one.min_ns);
}
