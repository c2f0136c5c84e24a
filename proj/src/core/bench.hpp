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

#include "core/stretched.hpp"

namespace w9j {

struct BenchmarkRecord {
  std::string symbol;
  Method method = Method::OracleSum;
  int repetitions = 0;
  std::uint64_t median_ns = 0;
  std::uint64_t min_ns = 0;
  std::string value_rendered;
};

// Monotonic wall-clock timing: warmup iterations first, then median/min over
// `repetitions` samples. Throws if the method does not apply to the symbol.
BenchmarkRecord bench_method(const NineJ& s, Method method, int repetitions,
                             int warmup = 16);

}  // namespace w9j
