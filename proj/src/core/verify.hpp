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

#include <cstdint>
#include <string>

namespace w9j {

struct IdentityReport {
  std::int64_t dougall_checked = 0;
  std::int64_t dixon_checked = 0;
  std::int64_t stretched_checked = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // empty when everything passed

  bool ok() const { return failures == 0; }
};

// Sweeps the Dougall grid (0 <= n <= n_max, 0 <= x,y,z <= xyz_max), the Dixon
// reduction for even n, and the stretched-path equivalence corpus (all valid
// five-parameter tuples with doubled momenta <= stretched_twice_max).
// use_printed_dougall swaps in the misprinted closed form, which fails.
IdentityReport verify_identities(int n_max, int xyz_max, int stretched_twice_max,
                                 bool use_printed_dougall = false);

}  // namespace w9j
