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
#include "core/stretched.hpp"

#include <mutex>
#include <numeric>
#include <optional>

#include "core/errors.hpp"
#include "core/factorials.hpp"
#include "core/summation.hpp"
#include "core/wigner.hpp"

namespace w9j {

std::string pattern_kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::DoublyStretchedVarshalovich:
      return "DoublyStretchedVarshalovich";
    case PatternKind::ColumnStretched:
      return "ColumnStretched";
    case PatternKind::ZeroArgument:
      return "ZeroArgument";
    case PatternKind::TwoColumnStretched:
      return "TwoColumnStretched";
    case PatternKind::None:
      return "None";
  }
  return "?";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::FiveF4:
      return "FiveF4";
    case Method::VarshalovichClosed:
      return "VarshalovichClosed";
    case Method::ColumnClosed:
      return "ColumnClosed";
    case Method::ZeroArg4F3:
      return "ZeroArg4F3";
    case Method::OracleSum:
      return "OracleSum";
  }
  return "?";
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
constexpr std::array<bool, 6> kPermOdd = {false, true, true, false, false, true};

int phase_sign(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::int64_t as_int(HalfInt h) { return h.to_integer(); }

}  // namespace

NineJ Orientation::apply(const NineJ& s) const {
  const NineJ base = transposed ? s.transposed() : s;
  NineJ out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      out.at(r, c) = base.at(rows[static_cast<std::size_t>(r)],
                             cols[static_cast<std::size_t>(c)]);
  return out;
}

bool Orientation::odd() const {
  auto parity = [](const std::array<int, 3>& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    return inv % 2 != 0;
  };
  return parity(rows) != parity(cols);
}

bool Orientation::is_identity() const {
  return !transposed && rows == std::array<int, 3>{0, 1, 2} &&
         cols == std::array<int, 3>{0, 1, 2};
}

std::string Orientation::to_string() const {
  if (is_identity()) return "identity";
  std::string out;
  if (transposed) out += "transpose";
  auto add = [&](const char* tag, const std::array<int, 3>& p) {
    if (p == std::array<int, 3>{0, 1, 2}) return;
    if (!out.empty()) out += "+";
    out += tag;
    for (int i : p) out += static_cast<char>('0' + i);
  };
  add("rows", rows);
  add("cols", cols);
  return out.empty() ? "identity" : out;
}

namespace {

bool match_template(PatternKind kind, const NineJ& n) {
  auto eq = [&](int r1, int c1, HalfInt v) { return n.at(r1, c1) == v; };
  switch (kind) {
    case PatternKind::DoublyStretchedVarshalovich:
      return eq(0, 2, n.at(0, 0) + n.at(0, 1)) && n.at(2, 0) == n.at(1, 1) &&
             n.at(2, 1) == n.at(1, 0) && eq(2, 2, n.at(0, 2) + n.at(1, 2));
    case PatternKind::ZeroArgument:
      return n.at(0, 2).twice() == 0 && n.at(0, 0) == n.at(0, 1) &&
             n.at(2, 2) == n.at(1, 2);
    case PatternKind::ColumnStretched:
      return eq(2, 0, n.at(0, 0) + n.at(1, 0)) && eq(2, 1, n.at(2, 0) + n.at(2, 2));
    case PatternKind::TwoColumnStretched:
      return eq(2, 0, n.at(0, 0) + n.at(1, 0)) && eq(2, 1, n.at(0, 1) + n.at(1, 1));
    default:
      return false;
  }
}

}  // namespace

StretchedPattern detect(const NineJ& s) {
  if (!ninej_validate(s).empty()) throw InvalidTriad("detect: invalid triad");
  const std::int64_t entry_sum = as_int(s.entry_sum());

  constexpr std::array<PatternKind, 4> kKinds = {
      PatternKind::DoublyStretchedVarshalovich, PatternKind::ZeroArgument,
      PatternKind::ColumnStretched, PatternKind::TwoColumnStretched};

  for (PatternKind kind : kKinds) {
    for (int t = 0; t < 2; ++t) {
      for (std::size_t rp = 0; rp < kPerms.size(); ++rp) {
        for (std::size_t cp = 0; cp < kPerms.size(); ++cp) {
          Orientation o{t != 0, kPerms[rp], kPerms[cp]};
          NineJ candidate = o.apply(s);
          if (!match_template(kind, candidate)) continue;
          StretchedPattern out;
          out.kind = kind;
          out.orientation = o;
          out.phase = o.odd() ? phase_sign(entry_sum) : 1;
          out.canonical = candidate;
          return out;
        }
      }
    }
  }
  StretchedPattern out;
  out.kind = PatternKind::None;
  out.canonical = s;
  return out;
}

namespace {

// Shared prefactor of the Varshalovich and 5F4 routes: everything except the
// trailing factorial ratio / series, kept as (rational scale, radicand) so
// each route pays for exactly one radical canonicalization.
struct StretchedCommon {
  bool zero = false;
  Rational scale;
  PrimeFactored root;
};

StretchedCommon stretched_common(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f) {
  StretchedCommon out;
  const Triad t1{a, d, e}, t2{b, e, d}, t3{d, e, f}, t4{a + b + f, e, d};
  if (!is_triangle(t1) || !is_triangle(t2) || !is_triangle(t3) || !is_triangle(t4)) {
    out.zero = true;
    return out;
  }
  // fuse every radical factor into a single radicand, factored in one pass
  FactorialProduct fp;
  auto delta_sq = [&](const Triad& t, std::int64_t sign) {
    fp.mul_factorial(as_int(t.j1 + t.j2 - t.j3), sign);
    fp.mul_factorial(as_int(t.j1 - t.j2 + t.j3), sign);
    fp.mul_factorial(as_int(t.j2 + t.j3 - t.j1), sign);
    fp.mul_factorial(as_int(t.j1 + t.j2 + t.j3) + 1, -sign);
  };
  delta_sq(t4, 1);
  delta_sq(t1, -1);
  delta_sq(t2, -1);
  delta_sq(t3, -1);
  fp.mul_factorial(a.twice());
  fp.mul_factorial(b.twice());
  fp.mul_factorial(f.twice());
  fp.mul_integer(a.twice() + b.twice() + 1, -1);
  fp.mul_factorial(a.twice() + b.twice() + f.twice() + 1, -1);
  out.root = fp.build();

  const std::int64_t num = (as_int(a + b + e + d + f) + 1) * phase_sign(as_int(a + d - e));
  const std::int64_t den = (as_int(a + e + d) + 1) * (as_int(b + e + d) + 1) *
                           (as_int(d + e + f) + 1);
  const std::int64_t g = std::gcd(num, den);
  out.scale = rational_from_coprime(Int(num / g), Int(den / g));
  return out;
}

}  // namespace

SqrtRational nine_j_varshalovich(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f) {
  StretchedCommon common = stretched_common(a, b, d, e, f);
  if (common.zero) return {};
  // the trailing factorial ratio, evaluated exactly as written
  const Int num = int_factorial(as_int(a + b + e + d + f)) *
                  int_factorial(as_int(e - a + d)) * int_factorial(as_int(e - b + d)) *
                  int_factorial(as_int(d + e - f));
  const Int den = int_factorial(as_int(e + d - a - b - f)) *
                  int_factorial(as_int(a + e + d)) * int_factorial(as_int(b + e + d)) *
                  int_factorial(as_int(d + e + f));
  return SqrtRational(common.scale * Rational(num, den), common.root);
}

SqrtRational nine_j_5f4(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f) {
  StretchedCommon common = stretched_common(a, b, d, e, f);
  if (common.zero) return {};
  const std::int64_t n = as_int(e + d - a - b - f);
  const std::int64_t x = as_int(b + f), y = as_int(a + f), z = as_int(a + b);
  if (n < 0 || x < 0 || y < 0 || z < 0)
    throw ParityViolation("nine_j_5f4: negative series parameter");
  return SqrtRational(
      common.scale * eval_wp5f4(Rational(n), Rational(x), Rational(y), Rational(z)),
      common.root);
}

PFQSpec nine_j_5f4_series(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f) {
  return wp5f4_spec(Rational(as_int(e + d - a - b - f)), Rational(as_int(b + f)),
                    Rational(as_int(a + f)), Rational(as_int(a + b)));
}

namespace {

SqrtRational column_stretched_impl(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                                   HalfInt f, HalfInt g, bool printed_variant) {
  NineJ s;
  s.m = {{{a, b, c}, {d, e, f}, {a + d, a + d + g, g}}};
  if (!ninej_validate(s).empty()) return {};

  SqrtRational pre = eta_coeff({a + d + g, b, e}) *
                     (eta_coeff({a, b, c}) * eta_coeff({d, e, f}) * eta_coeff({g, c, f}))
                         .inverse();
  const std::int64_t big = printed_variant ? a.twice() + b.twice() + g.twice() + 1
                                           : a.twice() + d.twice() + g.twice() + 1;
  PrimeFactored root = factorial(a.twice()) * factorial(d.twice()) *
                       factorial(g.twice()) *
                       PrimeFactored::from_integer(a.twice() + d.twice() + 1).inverse() *
                       factorial(big).inverse();
  pre *= SqrtRational::sqrt_of(root);
  pre *= Rational(phase_sign(as_int(d - e + f)));
  return pre;
}

}  // namespace

SqrtRational nine_j_column_stretched(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                     HalfInt e, HalfInt f, HalfInt g) {
  return column_stretched_impl(a, b, c, d, e, f, g, false);
}

SqrtRational nine_j_column_stretched_printed(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                             HalfInt e, HalfInt f, HalfInt g) {
  return column_stretched_impl(a, b, c, d, e, f, g, true);
}

bool column_formula_verified() {
  static std::once_flag flag;
  static bool verified = false;
  std::call_once(flag, [] {
    for (std::int64_t ta = 0; ta <= 3; ++ta)
      for (std::int64_t tb = 0; tb <= 3; ++tb)
        for (std::int64_t tc = 0; tc <= 3; ++tc)
          for (std::int64_t td = 0; td <= 3; ++td)
            for (std::int64_t te = 0; te <= 3; ++te)
              for (std::int64_t tf = 0; tf <= 3; ++tf)
                for (std::int64_t tg = 0; tg <= 3; ++tg) {
                  NineJ s;
                  const HalfInt a = HalfInt::from_twice(ta), b = HalfInt::from_twice(tb),
                                c = HalfInt::from_twice(tc), d = HalfInt::from_twice(td),
                                e = HalfInt::from_twice(te), f = HalfInt::from_twice(tf),
                                g = HalfInt::from_twice(tg);
                  s.m = {{{a, b, c}, {d, e, f}, {a + d, a + d + g, g}}};
                  if (!ninej_validate(s).empty()) continue;
                  if (nine_j_column_stretched(a, b, c, d, e, f, g) != nine_j_sum(s))
                    return;
                }
    verified = true;
  });
  return verified;
}

SqrtRational nine_j_zero_arg(HalfInt a, HalfInt d, HalfInt e, HalfInt f, HalfInt g,
                             HalfInt h) {
  NineJ s;
  s.m = {{{a, a, HalfInt(0)}, {d, e, f}, {g, h, f}}};
  if (!ninej_validate(s).empty()) return {};

  const std::int64_t a1 = as_int(h - a - e), a2 = as_int(h - f - g);
  const std::int64_t a3 = as_int(d - a - g), a4 = as_int(d - e - f);
  const std::int64_t b1 = -as_int(a + e + f + g) - 1;
  const std::int64_t b2 = as_int(d + h - e - g) + 1, b3 = as_int(d + h - a - f) + 1;
  if (b2 <= 0 || b3 <= 0)
    throw PoleError("nine_j_zero_arg: nonpositive Gamma argument (beta2/beta3)");

  PFQSpec spec;
  spec.numerator_params = {Rational(a1), Rational(a2), Rational(a3), Rational(a4)};
  spec.denominator_params = {Rational(b1), Rational(b2), Rational(b3)};
  const Rational series = eval_direct(spec).value;

  // Gamma(1-b1) / [Gamma(1-a1)...Gamma(1-a4) Gamma(b2) Gamma(b3)]; all
  // arguments are positive integers here.
  PrimeFactored gblock = factorial(-b1);  // (-b1)! == Gamma(1-b1)
  gblock *= factorial(-a1).inverse() * factorial(-a2).inverse() *
            factorial(-a3).inverse() * factorial(-a4).inverse() *
            factorial(b2 - 1).inverse() * factorial(b3 - 1).inverse();

  SqrtRational out = delta_coeff({a, e, h}) * delta_coeff({f, g, h}) *
                     delta_coeff({a, g, d}) * delta_coeff({f, e, d});
  PrimeFactored dim = PrimeFactored::from_integer(a.twice() + 1) *
                      PrimeFactored::from_integer(f.twice() + 1);
  out *= SqrtRational::sqrt_of(dim.inverse());
  out *= gblock.to_rational() * series;
  out *= Rational(phase_sign(as_int(a + e + f + g)) * phase_sign(b1 + 1));
  return out;
}

Dispatcher::Dispatcher()
    : Dispatcher({Method::FiveF4, Method::VarshalovichClosed, Method::ZeroArg4F3,
                  Method::ColumnClosed, Method::OracleSum}) {}

Dispatcher::Dispatcher(std::vector<Method> priority) : priority_(std::move(priority)) {}

namespace {

// Evaluate a detected pattern with a specific closed-form method; returns
// nothing if the method does not apply to the pattern.
std::optional<SqrtRational> try_method(const StretchedPattern& p, Method m) {
  const NineJ& n = p.canonical;
  const Rational phase(p.phase);
  switch (m) {
    case Method::FiveF4:
      if (p.kind != PatternKind::DoublyStretchedVarshalovich) return std::nullopt;
      {
        SqrtRational v =
            nine_j_5f4(n.at(0, 0), n.at(0, 1), n.at(1, 0), n.at(1, 1), n.at(1, 2));
        v *= phase;
        return v;
      }
    case Method::VarshalovichClosed:
      if (p.kind != PatternKind::DoublyStretchedVarshalovich) return std::nullopt;
      {
        SqrtRational v = nine_j_varshalovich(n.at(0, 0), n.at(0, 1), n.at(1, 0),
                                             n.at(1, 1), n.at(1, 2));
        v *= phase;
        return v;
      }
    case Method::ZeroArg4F3:
      if (p.kind != PatternKind::ZeroArgument) return std::nullopt;
      {
        SqrtRational v = nine_j_zero_arg(n.at(0, 0), n.at(1, 0), n.at(1, 1), n.at(1, 2),
                                         n.at(2, 0), n.at(2, 1));
        v *= phase;
        return v;
      }
    case Method::ColumnClosed:
      if (p.kind != PatternKind::ColumnStretched) return std::nullopt;
      if (!column_formula_verified())
        throw FormulaMismatch("column-stretched closed form failed its oracle sweep");
      {
        SqrtRational v =
            nine_j_column_stretched(n.at(0, 0), n.at(0, 1), n.at(0, 2), n.at(1, 0),
                                    n.at(1, 1), n.at(1, 2), n.at(2, 2));
        v *= phase;
        return v;
      }
    case Method::OracleSum:
      return std::nullopt;  // handled by the caller on the original symbol
  }
  return std::nullopt;
}

}  // namespace

MethodReport Dispatcher::evaluate(const NineJ& s, EvalMode mode) const {
  MethodReport report;
  if (!ninej_validate(s).empty()) {
    report.method = Method::OracleSum;
    report.pattern.kind = PatternKind::None;
    report.pattern.canonical = s;
    return report;  // exact zero
  }
  report.pattern = detect(s);

  bool have_value = false;
  for (Method m : priority_) {
    if (m == Method::OracleSum) {
      report.method = Method::OracleSum;
      report.value = nine_j_sum(s);
      have_value = true;
      break;
    }
    if (m == Method::ColumnClosed && report.pattern.kind == PatternKind::ColumnStretched &&
        !column_formula_verified())
      continue;  // unverified fast path stays disabled
    std::optional<SqrtRational> v;
    try {
      v = try_method(report.pattern, m);
    } catch (const PoleError&) {
      continue;  // Eq.(5) outside its Gamma-positive domain; use a later method
    }
    if (v) {
      report.method = m;
      report.value = *v;
      have_value = true;
      break;
    }
  }
  if (!have_value) {
    report.method = Method::OracleSum;
    report.value = nine_j_sum(s);
  }

  if (mode == EvalMode::Verified && report.method != Method::OracleSum) {
    SqrtRational oracle = nine_j_sum(s);
    if (oracle != report.value)
      throw VerificationMismatch("nine_j_auto: " + method_name(report.method) +
                                 " disagrees with OracleSum for {" + s.to_string() + "}");
  }
  return report;
}

MethodReport nine_j_auto(const NineJ& s, EvalMode mode) {
  static const Dispatcher dispatcher;
  return dispatcher.evaluate(s, mode);
}

SqrtRational nine_j_with_method(const NineJ& s, Method method) {
  if (!ninej_validate(s).empty()) return {};
  if (method == Method::OracleSum) return nine_j_sum(s);
  StretchedPattern p = detect(s);
  std::optional<SqrtRational> v = try_method(p, method);
  if (!v)
    throw Error("method " + method_name(method) + " not applicable to {" +
                s.to_string() + "} (pattern " + pattern_kind_name(p.kind) + ")");
  return *v;
}

}  // namespace w9j
