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
#include "core/verify.hpp"

#include "core/stretched.hpp"
#include "core/summation.hpp"
#include "core/wigner.hpp"

namespace w9j {

IdentityReport verify_identities(int n_max, int xyz_max, int stretched_twice_max,
                                 bool use_printed_dougall) {
  IdentityReport report;
  auto fail = [&](const std::string& what) {
    ++report.failures;
    if (report.first_failure.empty()) report.first_failure = what;
  };

  for (int n = 0; n <= n_max; ++n) {
    for (int x = 0; x <= xyz_max; ++x) {
      for (int y = 0; y <= xyz_max; ++y) {
        for (int z = 0; z <= xyz_max; ++z) {
          const Rational lhs = eval_wp5f4(n, x, y, z);
          const Rational rhs = use_printed_dougall ? dougall_rhs_as_printed(n, x, y, z)
                                                   : dougall_rhs(n, x, y, z);
          ++report.dougall_checked;
          if (lhs != rhs)
            fail("dougall (n,x,y,z)=(" + std::to_string(n) + "," + std::to_string(x) +
                 "," + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }

  for (int n = 0; n <= n_max; n += 2) {
    for (int x = 0; x <= xyz_max; ++x) {
      for (int y = 0; y <= xyz_max; ++y) {
        const Rational lhs = eval_wp5f4(n, x, y, Rational(-n) / 2);
        ++report.dixon_checked;
        if (lhs != dixon_rhs(n, x, y))
          fail("dixon (n,x,y)=(" + std::to_string(n) + "," + std::to_string(x) + "," +
               std::to_string(y) + ")");
      }
    }
  }

  const std::int64_t tmax = stretched_twice_max;
  for (std::int64_t ta = 0; ta <= tmax; ++ta) {
    for (std::int64_t tb = 0; tb <= tmax; ++tb) {
      for (std::int64_t td = 0; td <= tmax; ++td) {
        for (std::int64_t te = 0; te <= tmax; ++te) {
          for (std::int64_t tf = 0; tf <= tmax; ++tf) {
            const HalfInt a = HalfInt::from_twice(ta), b = HalfInt::from_twice(tb);
            const HalfInt d = HalfInt::from_twice(td), e = HalfInt::from_twice(te);
            const HalfInt f = HalfInt::from_twice(tf);
            if (!is_triangle({a, d, e}) || !is_triangle({b, e, d}) ||
                !is_triangle({d, e, f}) || !is_triangle({a + b + f, e, d}))
              continue;
            NineJ s;
            s.m = {{{a, b, a + b}, {d, e, f}, {e, d, a + b + f}}};
            const SqrtRational fast = nine_j_5f4(a, b, d, e, f);
            const SqrtRational closed = nine_j_varshalovich(a, b, d, e, f);
            const SqrtRational oracle = nine_j_sum(s);
            ++report.stretched_checked;
            if (fast != closed || fast != oracle)
              fail("stretched (2a,2b,2d,2e,2f)=(" + std::to_string(ta) + "," +
                   std::to_string(tb) + "," + std::to_string(td) + "," +
                   std::to_string(te) + "," + std::to_string(tf) + ")");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace w9j
