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
#include "core/bench.hpp"

#include <algorithm>
#include <chrono>

#include "core/errors.hpp"
#include <stdexcept>
#include <vector>

namespace w9j {

BenchmarkRecord bench_method(const NineJ& s, Method method, int repetitions, int warmup) {
  if (repetitions < 1) throw std::invalid_argument("bench_method: repetitions >= 1");
  using clock = std::chrono::steady_clock;

  SqrtRational value;
  for (int i = 0; i < warmup; ++i) value = nine_j_with_method(s, method);

  std::vector<std::uint64_t> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int i = 0; i < repetitions; ++i) {
    const auto t0 = clock::now();
    SqrtRational v = nine_j_with_method(s, method);
    const auto t1 = clock::now();
    if (v != value) throw VerificationMismatch("bench_method: unstable value");
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::sort(samples.begin(), samples.end());

  BenchmarkRecord rec;
  rec.symbol = s.to_string();
  rec.method = method;
  rec.repetitions = repetitions;
  rec.min_ns = samples.front();
  rec.median_ns = samples[samples.size() / 2];
  rec.value_rendered = value.to_string();
  return rec;
}

}  // namespace w9j
