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
#include <string>
#include <vector>

#include "core/halfint.hpp"
#include "core/pfq.hpp"
#include "core/sqrt_rational.hpp"

namespace w9j {

enum class PatternKind {
  // rows (a, b, a+b), (d, e, f), (e, d, a+b+f)
  DoublyStretchedVarshalovich,
  // third row (a+d, a+d+g, g)
  ColumnStretched,
  // {a, a, 0; d, e, f; g, h, f}
  ZeroArgument,
  // columns (a, d, a+d) and (b, e, b+e); proportional to a 3j, no closed
  // form implemented: routed to the oracle
  TwoColumnStretched,
  None,
};

std::string pattern_kind_name(PatternKind kind);

// One of the 72 symmetry images: candidate(r, c) = base(rows[r], cols[c]),
// where base is the input or its transpose.
struct Orientation {
  bool transposed = false;
  std::array<int, 3> rows = {0, 1, 2};
  std::array<int, 3> cols = {0, 1, 2};

  NineJ apply(const NineJ& s) const;
  bool odd() const;  // odd overall permutation (phase-carrying)
  bool is_identity() const;
  std::string to_string() const;
};

struct StretchedPattern {
  PatternKind kind = PatternKind::None;
  Orientation orientation;
  int phase = 1;     // value(input) = phase * value(canonical image)
  NineJ canonical;   // the image matching the kind's template
};

// Searches the 72 symmetry images, kinds in fast-path priority order, and
// returns the first match with phase bookkeeping. Requires valid triads.
StretchedPattern detect(const NineJ& s);

// {a, b, a+b; d, e, f; e, d, a+b+f} by the Varshalovich closed form
// (phase, Delta ratio, square-root factor, linear ratio, factorial ratio).
SqrtRational nine_j_varshalovich(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f);

// Same symbol with the trailing factorial ratio replaced by the well-poised
// 5F4(1) at n = e+d-a-b-f, x = b+f, y = a+f, z = a+b.
SqrtRational nine_j_5f4(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f);

// The raw series parameters used by the 5F4 route (for classification).
PFQSpec nine_j_5f4_series(HalfInt a, HalfInt b, HalfInt d, HalfInt e, HalfInt f);

// {a, b, c; d, e, f; a+d, a+d+g, g}: eta-ratio closed form with the
// oracle-adjudicated (2a+2d+2g+1)! square-root factor.
SqrtRational nine_j_column_stretched(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                     HalfInt e, HalfInt f, HalfInt g);
// The factor as printed, (2a+2b+2g+1)!; disagrees with the oracle and is
// kept only so tests can demonstrate the mismatch.
SqrtRational nine_j_column_stretched_printed(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                             HalfInt e, HalfInt f, HalfInt g);
// Run-once oracle sweep gating the column-stretched fast path.
bool column_formula_verified();

// {a, a, 0; d, e, f; g, h, f} via the 4F3 closed form. Throws PoleError when
// a Gamma argument fails to be positive (reachable inside the valid domain).
SqrtRational nine_j_zero_arg(HalfInt a, HalfInt d, HalfInt e, HalfInt f, HalfInt g,
                             HalfInt h);

enum class Method { FiveF4, VarshalovichClosed, ColumnClosed, ZeroArg4F3, OracleSum };

std::string method_name(Method m);

struct MethodReport {
  Method method = Method::OracleSum;
  SqrtRational value;
  StretchedPattern pattern;
};

enum class EvalMode { Fast, Verified };

// Dispatch priority is configurable for benchmarking; the default order is
// FiveF4 > VarshalovichClosed > ZeroArg4F3 > ColumnClosed > OracleSum.
class Dispatcher {
 public:
  Dispatcher();
  explicit Dispatcher(std::vector<Method> priority);

  MethodReport evaluate(const NineJ& s, EvalMode mode) const;

 private:
  std::vector<Method> priority_;
};

MethodReport nine_j_auto(const NineJ& s, EvalMode mode = EvalMode::Fast);

// Evaluates with a fixed method; throws Error if the method does not apply.
SqrtRational nine_j_with_method(const NineJ& s, Method method);

}  // namespace w9j
