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

// Command-line front end for the wigner9j shared library. This binary talks
// to the core exclusively through the public C API (wigner9j.h).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wigner9j.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitSweepFailure = 4;

struct ValueDeleter {
  void operator()(w9j_value* v) const { w9j_value_free(v); }
};
using ValuePtr = std::unique_ptr<w9j_value, ValueDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  w9j_string_free(s);
  return out;
}

std::string exact_string(const w9j_value* v) { return take_string(w9j_value_exact(v)); }

std::string decimal_string(const w9j_value* v, int digits) {
  char* s = w9j_value_decimal(v, digits);
  if (!s) throw std::runtime_error(w9j_last_error());
  return take_string(s);
}

int status_to_exit(w9j_status status) {
  switch (status) {
    case W9J_OK:
      return kExitOk;
    case W9J_ERROR_PARSE:
    case W9J_ERROR_DOMAIN:
      return kExitUsage;
    case W9J_ERROR_MISMATCH:
      return kExitMismatch;
    default:
      return 1;
  }
}

int report_failure(w9j_status status) {
  std::cerr << "error: " << w9j_last_error() << "\n";
  return status_to_exit(status);
}

struct OutputFormat {
  enum class Kind { Exact, Decimal, Json } kind = Kind::Exact;
  int digits = 10;
};

OutputFormat parse_format(const std::string& spec) {
  OutputFormat fmt;
  if (spec == "exact") {
    fmt.kind = OutputFormat::Kind::Exact;
  } else if (spec == "json") {
    fmt.kind = OutputFormat::Kind::Json;
  } else if (spec.rfind("decimal=", 0) == 0) {
    fmt.kind = OutputFormat::Kind::Decimal;
    fmt.digits = std::stoi(spec.substr(8));
    if (fmt.digits < 1) throw CLI::ValidationError("--format", "decimal digits must be >= 1");
  } else {
    throw CLI::ValidationError("--format", "expected exact, decimal=N or json");
  }
  return fmt;
}

const char* method_names[] = {"auto",   "OracleSum",  "VarshalovichClosed",
                              "FiveF4", "ZeroArg4F3", "ColumnClosed"};

std::string method_name(w9j_method m) { return method_names[static_cast<int>(m)]; }

w9j_method parse_method(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == method_names[i]) return static_cast<w9j_method>(i);
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

std::vector<const char*> token_ptrs(const std::vector<std::string>& tokens) {
  std::vector<const char*> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.c_str());
  return out;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

int print_value(const w9j_value* v, const OutputFormat& fmt,
                const std::vector<std::string>& tokens, const std::string& method) {
  switch (fmt.kind) {
    case OutputFormat::Kind::Exact:
      std::cout << exact_string(v) << "\n";
      break;
    case OutputFormat::Kind::Decimal:
      std::cout << decimal_string(v, fmt.digits) << "\n";
      break;
    case OutputFormat::Kind::Json: {
      json record = {{"tokens", tokens},
                     {"exact", exact_string(v)},
                     {"decimal", decimal_string(v, fmt.digits)}};
      if (!method.empty()) record["method"] = method;
      std::cout << record.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

int run_3j(const std::vector<std::string>& tokens, const OutputFormat& fmt) {
  w9j_value* raw = nullptr;
  const w9j_status status = w9j_compute_3j(token_ptrs(tokens).data(), &raw);
  if (status != W9J_OK) return report_failure(status);
  ValuePtr value(raw);
  return print_value(value.get(), fmt, tokens, "");
}

int run_6j(const std::vector<std::string>& tokens, const OutputFormat& fmt) {
  w9j_value* raw = nullptr;
  const w9j_status status = w9j_compute_6j(token_ptrs(tokens).data(), &raw);
  if (status != W9J_OK) return report_failure(status);
  ValuePtr value(raw);
  return print_value(value.get(), fmt, tokens, "");
}

int run_9j(const std::vector<std::string>& tokens, w9j_method method, bool verify,
           const OutputFormat& fmt) {
  w9j_value* raw = nullptr;
  w9j_method used = W9J_METHOD_ORACLE_SUM;
  const w9j_status status =
      w9j_compute_9j(token_ptrs(tokens).data(), method, verify ? 1 : 0, &raw, &used);
  if (status != W9J_OK) return report_failure(status);
  ValuePtr value(raw);
  return print_value(value.get(), fmt, tokens, method_name(used));
}

int run_classify(const std::vector<std::string>& tokens, const OutputFormat& fmt) {
  char kind[64] = {0};
  char orientation[64] = {0};
  int phase = 1;
  w9j_method method = W9J_METHOD_ORACLE_SUM;
  const w9j_status status =
      w9j_classify_9j(token_ptrs(tokens).data(), kind, sizeof(kind), orientation,
                      sizeof(orientation), &phase, &method);
  if (status != W9J_OK) return report_failure(status);
  if (fmt.kind == OutputFormat::Kind::Json) {
    std::cout << json{{"tokens", tokens},
                      {"kind", kind},
                      {"orientation", orientation},
                      {"phase", phase},
                      {"method", method_name(method)}}
                     .dump()
              << "\n";
    return kExitOk;
  }
  if (std::string(kind) == "None") {
    std::cout << kind << " / " << method_name(method) << "\n";
  } else {
    std::cout << kind << " / " << orientation << " / " << method_name(method) << "\n";
  }
  std::cout << "phase: " << (phase > 0 ? "+1" : "-1") << "\n";
  return kExitOk;
}

int run_verify(int n_max, int xyz_max, int stretched_twice_max, bool printed_dougall,
               const OutputFormat& fmt) {
  char first_failure[256] = {0};
  long long checked = 0;
  const w9j_status status =
      w9j_verify_identities(n_max, xyz_max, stretched_twice_max, printed_dougall ? 1 : 0,
                            first_failure, sizeof(first_failure), &checked);
  if (status == W9J_OK) {
    if (fmt.kind == OutputFormat::Kind::Json)
      std::cout << json{{"checked", checked}, {"failures", 0}}.dump() << "\n";
    else
      std::cout << "verified " << checked << " identities, all pass\n";
    return kExitOk;
  }
  if (status != W9J_ERROR_MISMATCH) return report_failure(status);
  if (fmt.kind == OutputFormat::Kind::Json)
    std::cout << json{{"checked", checked}, {"first_failure", first_failure}}.dump()
              << "\n";
  else
    std::cout << "identity sweep FAILED, first failing tuple: " << first_failure << "\n";
  return kExitSweepFailure;
}

int run_bench(const std::vector<std::string>& tokens,
              const std::vector<std::string>& method_names_in, int repetitions) {
  std::vector<w9j_method> methods;
  if (method_names_in.empty()) {
    // default set: the auto-dispatch fast path (if any), the matching closed
    // form, and the reference sum
    char kind[64] = {0};
    char orientation[64] = {0};
    w9j_method fast = W9J_METHOD_ORACLE_SUM;
    const w9j_status status =
        w9j_classify_9j(token_ptrs(tokens).data(), kind, sizeof(kind), orientation,
                        sizeof(orientation), nullptr, &fast);
    if (status != W9J_OK) return report_failure(status);
    if (fast == W9J_METHOD_FIVE_F4) {
      methods = {W9J_METHOD_FIVE_F4, W9J_METHOD_VARSHALOVICH, W9J_METHOD_ORACLE_SUM};
    } else if (fast != W9J_METHOD_ORACLE_SUM) {
      methods = {fast, W9J_METHOD_ORACLE_SUM};
    } else {
      methods = {W9J_METHOD_ORACLE_SUM};
    }
  } else {
    for (const auto& name : method_names_in) methods.push_back(parse_method(name));
  }

  struct Sample {
    w9j_method method;
    unsigned long long median_ns = 0;
    unsigned long long min_ns = 0;
    ValuePtr value;
  };
  std::vector<Sample> samples;
  for (const w9j_method method : methods) {
    Sample sample;
    sample.method = method;
    w9j_value* raw = nullptr;
    const w9j_status status = w9j_bench_9j(token_ptrs(tokens).data(), method,
                                           repetitions, &sample.median_ns,
                                           &sample.min_ns, &raw);
    if (status != W9J_OK) return report_failure(status);
    sample.value.reset(raw);
    samples.push_back(std::move(sample));
  }
  for (const Sample& s : samples) {
    if (!w9j_value_equal(s.value.get(), samples.front().value.get())) {
      std::cerr << "error: method " << method_name(s.method) << " disagrees with "
                << method_name(samples.front().method) << " on {" << join(tokens)
                << "}\n";
      return kExitMismatch;
    }
  }
  for (const Sample& s : samples) {
    std::cout << json{{"symbol", join(tokens)},
                      {"method", method_name(s.method)},
                      {"repetitions", repetitions},
                      {"median_ns", s.median_ns},
                      {"min_ns", s.min_ns},
                      {"value", exact_string(s.value.get())}}
                     .dump()
              << "\n";
  }
  return kExitOk;
}

// Parses a half-integer range bound to doubled units; accepts "n", "n/2", "n.5".
std::optional<std::int64_t> parse_twice(const std::string& token) {
  const char* probe[6] = {token.c_str(), "0", "0", "0", "0", "0"};
  w9j_value* raw = nullptr;
  // reuse the library tokenizer: a bound is valid iff it parses as a momentum
  if (w9j_compute_6j(probe, &raw) == W9J_ERROR_PARSE) return std::nullopt;
  w9j_value_free(raw);
  const auto slash = token.find('/');
  const auto dot = token.find('.');
  if (slash != std::string::npos) return std::stoll(token.substr(0, slash));
  if (dot != std::string::npos) return 2 * std::stoll(token.substr(0, dot)) + (token[0] == '-' ? -1 : 1);
  return 2 * std::stoll(token);
}

int run_table(const std::string& max_token, const std::string& out_path, bool verify,
              const OutputFormat& fmt) {
  const std::optional<std::int64_t> tmax = parse_twice(max_token);
  if (!tmax) {
    std::cerr << "error: malformed range bound '" << max_token << "'\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  const bool as_json = fmt.kind == OutputFormat::Kind::Json;
  json rows = json::array();
  if (!as_json)
    out << "j11,j12,j13,j21,j22,j23,j31,j32,j33,pattern,method,exact_value,"
           "decimal_value\n";

  auto render = [](std::int64_t twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2)
                          : std::to_string(twice) + "/2";
  };

  // the stretched family {a b a+b; d e f; e d a+b+f}, swept in lexicographic
  // order over the doubled momenta
  for (std::int64_t ta = 0; ta <= *tmax; ++ta)
    for (std::int64_t tb = 0; tb <= *tmax; ++tb)
      for (std::int64_t td = 0; td <= *tmax; ++td)
        for (std::int64_t te = 0; te <= *tmax; ++te)
          for (std::int64_t tf = 0; tf <= *tmax; ++tf) {
            const std::vector<std::string> tokens = {
                render(ta), render(tb), render(ta + tb),
                render(td), render(te), render(tf),
                render(te), render(td), render(ta + tb + tf)};
            char kind[64] = {0};
            char orientation[64] = {0};
            w9j_status status =
                w9j_classify_9j(token_ptrs(tokens).data(), kind, sizeof(kind),
                                orientation, sizeof(orientation), nullptr, nullptr);
            if (status != W9J_OK) return report_failure(status);
            if (std::string(kind) == "InvalidTriad") continue;
            w9j_value* raw = nullptr;
            w9j_method used = W9J_METHOD_ORACLE_SUM;
            status = w9j_compute_9j(token_ptrs(tokens).data(), W9J_METHOD_AUTO,
                                    verify ? 1 : 0, &raw, &used);
            if (status != W9J_OK) return report_failure(status);
            ValuePtr value(raw);
            const std::string exact = exact_string(value.get());
            const std::string decimal = decimal_string(value.get(), fmt.digits);
            if (as_json) {
              rows.push_back({{"tokens", tokens},
                              {"pattern", kind},
                              {"method", method_name(used)},
                              {"exact_value", exact},
                              {"decimal_value", decimal}});
            } else {
              for (const auto& t : tokens) out << t << ",";
              out << kind << "," << method_name(used) << "," << exact << ","
                  << decimal << "\n";
            }
          }
  if (as_json) out << rows.dump(2) << "\n";
  if (!out_path.empty() && !file) {
    std::cerr << "error: write failed for '" << out_path << "'\n";
    return 1;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wigner 3j/6j/9j symbols with fast stretched-9j paths"};
  app.require_subcommand(1);

  std::vector<std::string> tokens;
  std::string format_spec = "exact";
  std::string method_spec = "auto";
  std::vector<std::string> bench_methods;
  bool verify_flag = false;
  int repetitions = 25;
  std::string out_path;
  int n_max = 6, xyz_max = 5, stretched_twice_max = 6;
  bool printed_dougall = false;
  std::string max_token;

  CLI::App* cmd_3j = app.add_subcommand("3j", "3j symbol from j1 j2 j3 m1 m2 m3");
  cmd_3j->add_option("tokens", tokens)->expected(6)->required();
  cmd_3j->add_option("--format", format_spec, "exact, decimal=N or json");

  CLI::App* cmd_6j = app.add_subcommand("6j", "6j symbol from j1 j2 j3 j4 j5 j6");
  cmd_6j->add_option("tokens", tokens)->expected(6)->required();
  cmd_6j->add_option("--format", format_spec, "exact, decimal=N or json");

  CLI::App* cmd_9j = app.add_subcommand("9j", "9j symbol from nine row-major tokens");
  cmd_9j->add_option("tokens", tokens)->expected(9)->required();
  cmd_9j->add_option("--method", method_spec,
                     "auto, OracleSum, VarshalovichClosed, FiveF4, ZeroArg4F3 or "
                     "ColumnClosed");
  cmd_9j->add_option("--format", format_spec, "exact, decimal=N or json");
  cmd_9j->add_flag("--verify", verify_flag, "re-check against the reference sum");

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "detect the stretched pattern of a 9j symbol");
  cmd_classify->add_option("tokens", tokens)->expected(9)->required();
  cmd_classify->add_option("--format", format_spec, "exact (text) or json");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the hypergeometric identity sweeps");
  cmd_verify->add_option("--nmax", n_max, "Dougall grid bound for n")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--xyzmax", xyz_max, "Dougall grid bound for x, y, z")
      ->check(CLI::NonNegativeNumber);
  cmd_verify
      ->add_option("--stretched-max", stretched_twice_max,
                   "doubled-momentum bound for the stretched equivalence corpus")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_flag("--printed-dougall", printed_dougall)->group("");
  cmd_verify->add_option("--format", format_spec, "exact (text) or json");

  CLI::App* cmd_bench = app.add_subcommand("bench", "time evaluation methods (JSON lines)");
  cmd_bench->add_option("tokens", tokens)->expected(9)->required();
  cmd_bench->add_option("--method", bench_methods, "methods to time (repeatable)");
  cmd_bench->add_option("--reps", repetitions, "timing repetitions")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_table =
      app.add_subcommand("table", "tabulate the stretched family up to a bound");
  cmd_table->add_option("max", max_token, "momentum bound (half-integer token)")
      ->required();
  cmd_table->add_option("--out", out_path, "output path (default: stdout)");
  cmd_table->add_option("--format", format_spec, "exact (CSV) or json; decimal=N sets "
                                                 "the decimal column precision");
  cmd_table->add_flag("--verify", verify_flag, "re-check every row against the sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    OutputFormat fmt = parse_format(format_spec);
    if (cmd_3j->parsed()) return run_3j(tokens, fmt);
    if (cmd_6j->parsed()) return run_6j(tokens, fmt);
    if (cmd_9j->parsed()) return run_9j(tokens, parse_method(method_spec), verify_flag, fmt);
    if (cmd_classify->parsed()) return run_classify(tokens, fmt);
    if (cmd_verify->parsed())
      return run_verify(n_max, xyz_max, stretched_twice_max, printed_dougall, fmt);
    if (cmd_bench->parsed()) return run_bench(tokens, bench_methods, repetitions);
    if (cmd_table->parsed()) return run_table(max_token, out_path, verify_flag, fmt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
