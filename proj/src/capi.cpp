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
#include "wigner9j.h"

#include <cstring>
#include <string>

#include "core/bench.hpp"
#include "core/errors.hpp"
#include "core/stretched.hpp"
#include "core/verify.hpp"
#include "core/wigner.hpp"

struct w9j_value {
  w9j::SqrtRational v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_to_buf(const std::string& s, char* buf, size_t len) {
  if (!buf || len == 0) return;
  const size_t n = std::min(len - 1, s.size());
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

w9j_status fail(w9j_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
w9j_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const w9j::ParseError& e) {
    return fail(W9J_ERROR_PARSE, e.what());
  } catch (const w9j::VerificationMismatch& e) {
    return fail(W9J_ERROR_MISMATCH, e.what());
  } catch (const w9j::Error& e) {
    return fail(W9J_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(W9J_ERROR_INTERNAL, e.what());
  }
}

w9j::HalfInt parse_token(const char* token) {
  if (!token) throw w9j::ParseError("null token");
  return w9j::parse_halfint(token);
}

w9j::NineJ parse_ninej(const char* const tokens[9]) {
  w9j::NineJ s;
  for (int i = 0; i < 9; ++i) s.at(i / 3, i % 3) = parse_token(tokens[i]);
  return s;
}

w9j_method to_c_method(w9j::Method m) {
  switch (m) {
    case w9j::Method::OracleSum:
      return W9J_METHOD_ORACLE_SUM;
    case w9j::Method::VarshalovichClosed:
      return W9J_METHOD_VARSHALOVICH;
    case w9j::Method::FiveF4:
      return W9J_METHOD_FIVE_F4;
    case w9j::Method::ZeroArg4F3:
      return W9J_METHOD_ZERO_ARG_4F3;
    case w9j::Method::ColumnClosed:
      return W9J_METHOD_COLUMN_CLOSED;
  }
  return W9J_METHOD_ORACLE_SUM;
}

w9j::Method from_c_method(w9j_method m) {
  switch (m) {
    case W9J_METHOD_ORACLE_SUM:
      return w9j::Method::OracleSum;
    case W9J_METHOD_VARSHALOVICH:
      return w9j::Method::VarshalovichClosed;
    case W9J_METHOD_FIVE_F4:
      return w9j::Method::FiveF4;
    case W9J_METHOD_ZERO_ARG_4F3:
      return w9j::Method::ZeroArg4F3;
    case W9J_METHOD_COLUMN_CLOSED:
      return w9j::Method::ColumnClosed;
    default:
      throw w9j::Error("unknown method id");
  }
}

}  // namespace

extern "C" {

const char* w9j_last_error(void) { return g_last_error.c_str(); }

w9j_status w9j_compute_3j(const char* const tokens[6], w9j_value** out) {
  return guarded([&]() -> w9j_status {
    w9j::ThreeJ s{parse_token(tokens[0]), parse_token(tokens[1]), parse_token(tokens[2]),
                  parse_token(tokens[3]), parse_token(tokens[4]), parse_token(tokens[5])};
    *out = new w9j_value{w9j::three_j(s)};
    return W9J_OK;
  });
}

w9j_status w9j_compute_6j(const char* const tokens[6], w9j_value** out) {
  return guarded([&]() -> w9j_status {
    w9j::SixJ s;
    for (int i = 0; i < 6; ++i) s.j[static_cast<std::size_t>(i)] = parse_token(tokens[i]);
    *out = new w9j_value{w9j::six_j(s)};
    return W9J_OK;
  });
}

w9j_status w9j_compute_9j(const char* const tokens[9], w9j_method method, int verify,
                          w9j_value** out, w9j_method* method_used) {
  return guarded([&]() -> w9j_status {
    const w9j::NineJ s = parse_ninej(tokens);
    w9j::SqrtRational value;
    w9j::Method used;
    if (method == W9J_METHOD_AUTO) {
      auto report =
          w9j::nine_j_auto(s, verify ? w9j::EvalMode::Verified : w9j::EvalMode::Fast);
      value = report.value;
      used = report.method;
    } else {
      used = from_c_method(method);
      value = w9j::nine_j_with_method(s, used);
      if (verify && value != w9j::nine_j_sum(s))
        throw w9j::VerificationMismatch("method " + w9j::method_name(used) +
                                        " disagrees with OracleSum");
    }
    *out = new w9j_value{std::move(value)};
    if (method_used) *method_used = to_c_method(used);
    return W9J_OK;
  });
}

w9j_status w9j_classify_9j(const char* const tokens[9], char* kind_buf, size_t kind_len,
                           char* orientation_buf, size_t orientation_len, int* phase,
                           w9j_method* method) {
  return guarded([&]() -> w9j_status {
    const w9j::NineJ s = parse_ninej(tokens);
    if (!w9j::ninej_validate(s).empty()) {
      copy_to_buf("InvalidTriad", kind_buf, kind_len);
      copy_to_buf("identity", orientation_buf, orientation_len);
      if (phase) *phase = 1;
      if (method) *method = W9J_METHOD_ORACLE_SUM;
      return W9J_OK;
    }
    const w9j::StretchedPattern pattern = w9j::detect(s);
    copy_to_buf(w9j::pattern_kind_name(pattern.kind), kind_buf, kind_len);
    copy_to_buf(pattern.orientation.to_string(), orientation_buf, orientation_len);
    if (phase) *phase = pattern.phase;
    if (method) {
      // what auto dispatch would pick, without paying for the evaluation
      switch (pattern.kind) {
        case w9j::PatternKind::DoublyStretchedVarshalovich:
          *method = W9J_METHOD_FIVE_F4;
          break;
        case w9j::PatternKind::ZeroArgument:
          *method = W9J_METHOD_ZERO_ARG_4F3;
          break;
        case w9j::PatternKind::ColumnStretched:
          *method = w9j::column_formula_verified() ? W9J_METHOD_COLUMN_CLOSED
                                                   : W9J_METHOD_ORACLE_SUM;
          break;
        default:
          *method = W9J_METHOD_ORACLE_SUM;
      }
    }
    return W9J_OK;
  });
}

w9j_status w9j_verify_identities(int n_max, int xyz_max, int stretched_twice_max,
                                 int use_printed_dougall, char* fail_buf,
                                 size_t fail_len, long long* checked_out) {
  return guarded([&]() -> w9j_status {
    const w9j::IdentityReport report = w9j::verify_identities(
        n_max, xyz_max, stretched_twice_max, use_printed_dougall != 0);
    if (checked_out)
      *checked_out =
          report.dougall_checked + report.dixon_checked + report.stretched_checked;
    if (!report.ok()) {
      copy_to_buf(report.first_failure, fail_buf, fail_len);
      return fail(W9J_ERROR_MISMATCH, "identity sweep failed: " + report.first_failure);
    }
    if (fail_buf && fail_len) fail_buf[0] = '\0';
    return W9J_OK;
  });
}

w9j_status w9j_bench_9j(const char* const tokens[9], w9j_method method, int repetitions,
                        unsigned long long* median_ns, unsigned long long* min_ns,
                        w9j_value** out) {
  return guarded([&]() -> w9j_status {
    if (method == W9J_METHOD_AUTO) throw w9j::Error("bench requires a concrete method");
    const w9j::NineJ s = parse_ninej(tokens);
    const w9j::BenchmarkRecord rec =
        w9j::bench_method(s, from_c_method(method), repetitions);
    if (median_ns) *median_ns = rec.median_ns;
    if (min_ns) *min_ns = rec.min_ns;
    if (out) *out = new w9j_value{w9j::nine_j_with_method(s, from_c_method(method))};
    return W9J_OK;
  });
}

char* w9j_value_exact(const w9j_value* v) {
  if (!v) return nullptr;
  return dup_string(v->v.to_string());
}

char* w9j_value_decimal(const w9j_value* v, int digits) {
  if (!v) return nullptr;
  try {
    return dup_string(v->v.to_decimal(digits));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

int w9j_value_is_zero(const w9j_value* v) { return v && v->v.is_zero() ? 1 : 0; }

int w9j_value_equal(const w9j_value* a, const w9j_value* b) {
  return (a && b && a->v == b->v) ? 1 : 0;
}

void w9j_value_free(w9j_value* v) { delete v; }

void w9j_string_free(char* s) { delete[] s; }

}  // extern "C"
