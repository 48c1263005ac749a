// horadam: exact evaluation of Horadam sequences W_n(a,b;p,q), their
// partial and range sums in sum-free closed form, and the rational
// generating functions behind them. All arithmetic is exact; output is
// deterministic in text, JSON, or CSV.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horadam/core_sequences.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/partial_sums.hpp"
#include "horadam/rational.hpp"
#include "horadam/verify.hpp"

namespace {

using horadam::DegeneracyClass;
using horadam::FLPair;
using horadam::HoradamParams;
using horadam::Rational;
using ordered_json = nlohmann::ordered_json;

// Command-line mistakes: reported on stderr, exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// --max-bits guard: a GMP allocation hook that aborts (exit 3) as soon as any
// single big-integer allocation would exceed the configured bit count. The
// bound is rounded up two limbs, so it is a runaway guard rather than a
// precise bit meter.

std::size_t g_limit_bytes = 0;
void* (*g_base_alloc)(std::size_t) = nullptr;
void* (*g_base_realloc)(void*, std::size_t, std::size_t) = nullptr;
void (*g_base_free)(void*, std::size_t) = nullptr;

void enforce_limit(std::size_t bytes) {
  if (bytes > g_limit_bytes) {
    std::fprintf(stderr,
                 "error: --max-bits exceeded: an intermediate integer needed "
                 "%zu bytes\n",
                 bytes);
    std::exit(3);
  }
}

void* guarded_alloc(std::size_t bytes) {
  enforce_limit(bytes);
  return g_base_alloc(bytes);
}

void* guarded_realloc(void* ptr, std::size_t old_bytes, std::size_t new_bytes) {
  enforce_limit(new_bytes);
  return g_base_realloc(ptr, old_bytes, new_bytes);
}

void install_bit_guard(long long bits) {
  mp_get_memory_functions(&g_base_alloc, &g_base_realloc, &g_base_free);
  g_limit_bytes =
      (static_cast<std::size_t>(bits) / (8 * sizeof(mp_limb_t)) + 3) *
      sizeof(mp_limb_t);
  mp_set_memory_functions(guarded_alloc, guarded_realloc, g_base_free);
}

// ---------------------------------------------------------------------------
// Argument parsing helpers

struct ParamFlags {
  std::string a = "0";
  std::string b = "1";
  std::string p = "1";
  std::string q = "1";

  void attach(CLI::App& cmd) {
    cmd.add_option("-a", a, "W_0 as a rational literal, e.g. 3, -5, 1/2");
    cmd.add_option("-b", b, "W_1");
    cmd.add_option("-p", p, "coefficient on W_{n-1}");
    cmd.add_option("-q", q, "coefficient on W_{n-2}");
  }

  HoradamParams values() const {
    return HoradamParams{parse_one("-a", a), parse_one("-b", b),
                         parse_one("-p", p), parse_one("-q", q)};
  }

 private:
  static Rational parse_one(const char* flag, const std::string& text) {
    auto value = horadam::parse_rational(text);
    if (!value) {
      throw UsageError(std::string(flag) + ": '" + text +
                       "' is not a rational literal (expected [+-]digits or "
                       "[+-]digits/digits with a positive denominator)");
    }
    return *std::move(value);
  }
};

std::int64_t parse_integer(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + text + "' is not an integer");
  }
}

// "K" or inclusive "LO..HI".
std::pair<std::int64_t, std::int64_t> parse_index_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    const std::int64_t n = parse_integer("-n", text);
    return {n, n};
  }
  const std::int64_t lo = parse_integer("-n", text.substr(0, sep));
  const std::int64_t hi = parse_integer("-n", text.substr(sep + 2));
  if (hi < lo) throw UsageError("-n: empty range '" + text + "'");
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Output records

struct Record {
  std::string command;
  HoradamParams params;
  DegeneracyClass degeneracy = DegeneracyClass::generic;
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<std::pair<std::string, std::vector<std::string>>> vectors;
  std::string row_prefix = "W";
  std::vector<std::pair<std::string, std::string>> rows;  // (index, value)
};

std::string bracket_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out + "]";
}

void print_record(const Record& record, const std::string& format) {
  if (format == "json") {
    ordered_json doc;
    doc["command"] = record.command;
    ordered_json params;
    params["a"] = horadam::to_string(record.params.a);
    params["b"] = horadam::to_string(record.params.b);
    params["p"] = horadam::to_string(record.params.p);
    params["q"] = horadam::to_string(record.params.q);
    doc["params"] = params;
    doc["degeneracy_class"] = std::string(horadam::to_string(record.degeneracy));
    for (const auto& [key, value] : record.scalars) doc[key] = value;
    for (const auto& [key, values] : record.vectors) doc[key] = values;
    ordered_json results = ordered_json::array();
    for (const auto& [index, value] : record.rows) {
      ordered_json row;
      row["n"] = index;
      row["value"] = value;
      results.push_back(row);
    }
    doc["results"] = results;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "n,value\n";
    for (const auto& [index, value] : record.rows) {
      std::cout << index << "," << value << "\n";
    }
    return;
  }
  std::cout << record.command << " a=" << horadam::to_string(record.params.a)
            << " b=" << horadam::to_string(record.params.b)
            << " p=" << horadam::to_string(record.params.p)
            << " q=" << horadam::to_string(record.params.q)
            << " class=" << horadam::to_string(record.degeneracy);
  for (const auto& [key, value] : record.scalars) {
    std::cout << " " << key << "=" << value;
  }
  std::cout << "\n";
  for (const auto& [key, values] : record.vectors) {
    std::cout << key << " " << bracket_list(values) << "\n";
  }
  for (const auto& [index, value] : record.rows) {
    std::cout << record.row_prefix << "[" << index << "] = " << value << "\n";
  }
}

void print_verification(const horadam::VerifyOptions& options,
                        const std::vector<horadam::CheckResult>& checks,
                        const std::string& format) {
  const bool passed = horadam::all_passed(checks);
  std::size_t pass_count = 0;
  for (const auto& check : checks) pass_count += check.passed ? 1 : 0;

  if (format == "json") {
    ordered_json doc;
    doc["command"] = "verify";
    doc["seed"] = std::to_string(options.seed);
    doc["trials"] = std::to_string(options.trials);
    doc["max_n"] = std::to_string(options.max_n);
    ordered_json rows = ordered_json::array();
    for (const auto& check : checks) {
      ordered_json row;
      row["name"] = check.name;
      row["status"] = check.passed ? "pass" : "fail";
      if (!check.passed) row["counterexample"] = check.counterexample;
      rows.push_back(row);
    }
    doc["checks"] = rows;
    doc["status"] = passed ? "pass" : "fail";
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "check,status\n";
    for (const auto& check : checks) {
      std::cout << check.name << "," << (check.passed ? "pass" : "fail") << "\n";
    }
    std::cout << "result," << (passed ? "pass" : "fail") << "\n";
    return;
  }
  std::cout << "verify seed=" << options.seed << " trials=" << options.trials
            << " max-n=" << options.max_n << "\n";
  for (const auto& check : checks) {
    if (check.passed) {
      std::cout << "PASS " << check.name << " trials=" << check.trials << "\n";
    } else {
      std::cout << "FAIL " << check.name << " trials=" << check.trials << " ("
                << check.counterexample << ")\n";
    }
  }
  std::cout << "RESULT " << (passed ? "PASS" : "FAIL") << " " << pass_count
            << "/" << checks.size() << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

int run_eval(const ParamFlags& flags, const std::string& index_text,
             const std::string& method, const std::string& format) {
  const HoradamParams params = flags.values();
  const auto [lo, hi] = parse_index_range(index_text);
  if (lo < 0) throw UsageError("-n: sequence indices must be non-negative");

  Record record;
  record.command = "eval";
  record.params = params;
  record.degeneracy = horadam::classify(params);
  record.row_prefix = "W";
  for (std::int64_t n = lo; n <= hi; ++n) {
    Rational value;
    if (method == "iter") {
      value = horadam::w_iterative(params, n);
    } else {
      value = horadam::w_from_fl(params, horadam::fl_doubling(params.p, params.q, n));
    }
    record.rows.emplace_back(std::to_string(n), horadam::to_string(value));
  }
  print_record(record, format);
  return 0;
}

int run_sum(const ParamFlags& flags, std::int64_t n, const std::string& format) {
  const HoradamParams params = flags.values();
  if (n < -1) throw UsageError("-n: partial sums require n >= -1");

  Record record;
  record.command = "sum";
  record.params = params;
  record.degeneracy = horadam::classify(params);
  record.row_prefix = "S";
  record.rows.emplace_back(std::to_string(n),
                           horadam::to_string(horadam::partial_sum(params, n)));
  print_record(record, format);
  return 0;
}

int run_range(const ParamFlags& flags, std::int64_t n, std::int64_t m,
              const std::string& format) {
  const HoradamParams params = flags.values();
  if (n < 1) throw UsageError("-n: range sums require n >= 1");
  if (m < 0) throw UsageError("-m: range sums require m >= 0");

  Record record;
  record.command = "range";
  record.params = params;
  record.degeneracy = horadam::classify(params);
  record.row_prefix = "sum W";
  const std::string index = std::to_string(n) + ".." + std::to_string(n + m);
  record.rows.emplace_back(index,
                           horadam::to_string(horadam::range_sum(params, n, m)));
  print_record(record, format);
  return 0;
}

int run_gf(const ParamFlags& flags, const std::string& which, std::int64_t terms,
           const std::string& format) {
  const HoradamParams params = flags.values();
  if (terms < 1) throw UsageError("--terms: need at least one coefficient");

  std::optional<horadam::RationalGF> gf;
  if (which == "W") gf = horadam::gf_w(params);
  if (which == "F") gf = horadam::gf_f(params.p, params.q);
  if (which == "L") gf = horadam::gf_l(params.p, params.q);
  if (which == "S") gf = horadam::gf_s(params);
  if (!gf) throw UsageError("--which: expected one of W, F, L, S");

  const auto poly_strings = [](const horadam::Polynomial& poly) {
    std::vector<std::string> out;
    for (const Rational& c : poly.coefficients()) {
      out.push_back(horadam::to_string(c));
    }
    return out;
  };

  Record record;
  record.command = "gf";
  record.params = params;
  record.degeneracy = horadam::classify(params);
  record.scalars.emplace_back("which", which);
  record.vectors.emplace_back("numerator", poly_strings(gf->numerator()));
  record.vectors.emplace_back("denominator", poly_strings(gf->denominator()));
  record.row_prefix = "c";
  const auto series = horadam::coefficients(*gf, static_cast<std::size_t>(terms));
  for (std::size_t k = 0; k < series.size(); ++k) {
    record.rows.emplace_back(std::to_string(k), horadam::to_string(series[k]));
  }
  print_record(record, format);
  return 0;
}

int run_verify(const horadam::VerifyOptions& options, const std::string& format) {
  const auto checks = horadam::run_verification(options);
  print_verification(options, checks, format);
  return horadam::all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Horadam sequence calculator (terms, partial sums, range "
               "sums, generating functions)"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  long long max_bits = 0;
  app.add_option("--max-bits", max_bits,
                 "abort with exit code 3 if any intermediate integer exceeds "
                 "this many bits")
      ->check(CLI::PositiveNumber);

  ParamFlags eval_flags;
  std::string eval_index;
  std::string eval_method = "doubling";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate W_n");
  eval_cmd->fallthrough();
  eval_flags.attach(*eval_cmd);
  eval_cmd->add_option("-n", eval_index, "index n, or inclusive range lo..hi")
      ->required();
  eval_cmd->add_option("--method", eval_method, "evaluation path")
      ->check(CLI::IsMember({"iter", "doubling"}));

  ParamFlags sum_flags;
  std::string sum_index;
  auto* sum_cmd = app.add_subcommand("sum", "partial sum S_n = W_0 + ... + W_n");
  sum_cmd->fallthrough();
  sum_flags.attach(*sum_cmd);
  sum_cmd->add_option("-n", sum_index, "upper index (>= -1; -1 is the empty sum)")
      ->required();

  ParamFlags range_flags;
  std::string range_n;
  std::string range_m;
  auto* range_cmd =
      app.add_subcommand("range", "range sum W_n + ... + W_{n+m}");
  range_cmd->fallthrough();
  range_flags.attach(*range_cmd);
  range_cmd->add_option("-n", range_n, "first index (>= 1)")->required();
  range_cmd->add_option("-m", range_m, "number of extra terms (>= 0)")->required();

  ParamFlags gf_flags;
  std::string gf_which;
  long long gf_terms = 10;
  auto* gf_cmd = app.add_subcommand(
      "gf", "generating function as numerator/denominator plus series prefix");
  gf_cmd->fallthrough();
  gf_flags.attach(*gf_cmd);
  gf_cmd->add_option("--which", gf_which, "one of W, F, L, S")
      ->required()
      ->check(CLI::IsMember({"W", "F", "L", "S"}));
  gf_cmd->add_option("--terms", gf_terms, "number of series coefficients")
      ->check(CLI::PositiveNumber);

  horadam::VerifyOptions verify_options;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the seeded self-verification suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--seed", verify_options.seed, "RNG seed");
  verify_cmd->add_option("--trials", verify_options.trials, "trials per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify_options.max_n, "largest index checked")
      ->check(CLI::Range(2, 1000000));
  verify_cmd->add_flag("--inject-fault", verify_options.inject_fault,
                       "corrupt one comparison to exercise failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (max_bits > 0) install_bit_guard(max_bits);

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_flags, eval_index, eval_method, format);
    }
    if (sum_cmd->parsed()) {
      return run_sum(sum_flags, parse_integer("-n", sum_index), format);
    }
    if (range_cmd->parsed()) {
      return run_range(range_flags, parse_integer("-n", range_n),
                       parse_integer("-m", range_m), format);
    }
    if (gf_cmd->parsed()) {
      return run_gf(gf_flags, gf_which, gf_terms, format);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_options, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
