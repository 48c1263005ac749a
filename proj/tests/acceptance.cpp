// Acceptance suite: runs every acceptance criterion end to end, printing one
// PASS/FAIL line per criterion, and exits nonzero if any fails.
//
// Usage: acceptance <path-to-cli> <golden-dir>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "horadam/core_sequences.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/partial_sums.hpp"
#include "horadam/quadratic.hpp"
#include "horadam/rational.hpp"
#include "support/cli_fixtures.hpp"
#include "support/process.hpp"
#include "support/random_params.hpp"

using horadam::DegeneracyClass;
using horadam::FLPair;
using horadam::GenericSumForm;
using horadam::HoradamParams;
using horadam::Rational;
using testsupport::Rng;
using testsupport::prefix_sums;
using testsupport::run_command;
using testsupport::slurp;
using testsupport::w_values;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string describe(const HoradamParams& params) {
  std::ostringstream out;
  out << "a=" << horadam::to_string(params.a) << " b=" << horadam::to_string(params.b)
      << " p=" << horadam::to_string(params.p) << " q=" << horadam::to_string(params.q);
  return out.str();
}

Outcome fail(const std::string& detail) { return Outcome{false, detail}; }

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// ---------------------------------------------------------------------------

Outcome oracle_agreement_generic() {
  Rng rng(20260809);
  for (int trial = 0; trial < 100; ++trial) {
    const HoradamParams params = rng.generic_params();
    for (std::int64_t n = 0; n <= 200; ++n) {
      const Rational closed = horadam::partial_sum(params, n);
      const Rational literal = horadam::sum_oracle(params, n);
      if (closed != literal) {
        return fail(describe(params) + " n=" + std::to_string(n) +
                    ": closed form " + horadam::to_string(closed) +
                    " != oracle " + horadam::to_string(literal));
      }
    }
  }
  return {};
}

Outcome oracle_agreement_degenerate() {
  Rng rng(8091);
  for (int trial = 0; trial < 50; ++trial) {
    const HoradamParams params = rng.simple_degenerate_params();
    for (std::int64_t n = 0; n <= 200; ++n) {
      if (horadam::partial_sum(params, n) != horadam::sum_oracle(params, n)) {
        return fail("simple-degenerate mismatch at " + describe(params) +
                    " n=" + std::to_string(n));
      }
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const HoradamParams params = rng.double_degenerate_params();
    for (std::int64_t n = 0; n <= 200; ++n) {
      if (horadam::partial_sum(params, n) != horadam::sum_oracle(params, n)) {
        return fail("double-degenerate mismatch at " + describe(params) +
                    " n=" + std::to_string(n));
      }
    }
  }
  return {};
}

Outcome range_sum_identity() {
  Rng rng(8092);
  for (int trial = 0; trial < 50; ++trial) {
    const HoradamParams params = rng.generic_params();
    const auto form = std::get<GenericSumForm>(horadam::decompose_sum(params).form);
    const auto terms = w_values(params, 80);
    for (std::int64_t n = 1; n <= 40; ++n) {
      const FLPair low = horadam::fl_doubling(params.p, params.q, n - 1);
      Rational window(0);
      for (std::int64_t m = 0; m <= 40; ++m) {
        window += terms[static_cast<std::size_t>(n + m)];
        const FLPair high = horadam::fl_doubling(params.p, params.q, n + m);
        const Rational cancelled =
            form.c_f * (high.f - low.f) + form.c_l * (high.l - low.l);
        if (cancelled != window) {
          return fail(describe(params) + " n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + ": cancelled form " +
                      horadam::to_string(cancelled) + " != literal window " +
                      horadam::to_string(window));
        }
        if (horadam::range_sum(params, n, m) != window) {
          return fail(describe(params) + ": range_sum disagrees with window");
        }
      }
    }
  }
  return {};
}

Outcome generating_function_transfer() {
  Rng rng(8093);
  std::vector<HoradamParams> cases;
  for (int trial = 0; trial < 9; ++trial) cases.push_back(rng.generic_params());
  for (int trial = 0; trial < 8; ++trial) {
    cases.push_back(rng.simple_degenerate_params());
  }
  for (int trial = 0; trial < 8; ++trial) {
    cases.push_back(rng.double_degenerate_params());
  }
  for (const HoradamParams& params : cases) {
    const auto w_series = horadam::coefficients(horadam::gf_w(params), 64);
    const auto s_series = horadam::coefficients(horadam::gf_s(params), 64);
    const auto f_series =
        horadam::coefficients(horadam::gf_f(params.p, params.q), 64);
    const auto l_series =
        horadam::coefficients(horadam::gf_l(params.p, params.q), 64);
    for (std::int64_t n = 0; n < 64; ++n) {
      const auto k = static_cast<std::size_t>(n);
      if (w_series[k] != horadam::w_iterative(params, n)) {
        return fail("W(z) series mismatch at " + describe(params) +
                    " n=" + std::to_string(n));
      }
      if (s_series[k] != horadam::sum_oracle(params, n)) {
        return fail("S(z) series mismatch at " + describe(params) +
                    " n=" + std::to_string(n));
      }
      const FLPair fl = horadam::fl_iterative(params.p, params.q, n);
      if (f_series[k] != fl.f || l_series[k] != fl.l) {
        return fail("F/L series mismatch at " + describe(params) +
                    " n=" + std::to_string(n));
      }
    }
  }
  return {};
}

Outcome partial_fraction_recombination() {
  Rng rng(8094);
  for (int trial = 0; trial < 25; ++trial) {
    const HoradamParams generic = rng.generic_params();
    if (!(horadam::recombine(horadam::decompose_s(generic)) ==
          horadam::gf_s(generic))) {
      return fail("generic recombination mismatch at " + describe(generic));
    }
    const HoradamParams simple = rng.simple_degenerate_params();
    if (!(horadam::recombine(horadam::decompose_s_degenerate(simple)) ==
          horadam::gf_s(simple))) {
      return fail("simple-degenerate recombination mismatch at " +
                  describe(simple));
    }
    const HoradamParams twice = rng.double_degenerate_params();
    if (!(horadam::recombine(horadam::decompose_s_degenerate(twice)) ==
          horadam::gf_s(twice))) {
      return fail("double-degenerate recombination mismatch at " +
                  describe(twice));
    }
  }
  return {};
}

Outcome doubling_correctness_and_speed() {
  Rng rng(8095);
  std::vector<std::pair<Rational, Rational>> coefficient_pairs = {
      {Rational(1), Rational(1)}, {Rational(2), Rational(1)}};
  coefficient_pairs.emplace_back(rng.rational(), rng.rational());
  coefficient_pairs.emplace_back(rng.rational(), rng.rational());
  for (const auto& [p, q] : coefficient_pairs) {
    for (std::int64_t n = 0; n <= 500; ++n) {
      const FLPair fast = horadam::fl_doubling(p, q, n);
      const FLPair slow = horadam::fl_iterative(p, q, n);
      if (fast.f != slow.f || fast.l != slow.l) {
        return fail("doubling/iteration mismatch at p=" + horadam::to_string(p) +
                    " q=" + horadam::to_string(q) + " n=" + std::to_string(n));
      }
    }
  }

  // spot values, cross-checked against a third route (w_iterative seeded to
  // reproduce F and L directly)
  const std::vector<std::pair<Rational, Rational>> spot_pairs = {
      {Rational(1), Rational(1)}, {Rational(2), Rational(1)}};
  for (const auto& [p, q] : spot_pairs) {
    const HoradamParams f_seed{Rational(0), Rational(1), p, q};
    const HoradamParams l_seed{Rational(2), p, p, q};
    const std::vector<std::int64_t> spots =
        (p == 1) ? std::vector<std::int64_t>{1000, 10000, 100000}
                 : std::vector<std::int64_t>{1000, 10000};
    for (const std::int64_t n : spots) {
      const FLPair fast = horadam::fl_doubling(p, q, n);
      const FLPair slow = horadam::fl_iterative(p, q, n);
      if (fast.f != slow.f || fast.l != slow.l) {
        return fail("doubling/iteration spot mismatch at n=" + std::to_string(n));
      }
      if (fast.f != horadam::w_iterative(f_seed, n) ||
          fast.l != horadam::w_iterative(l_seed, n)) {
        return fail("doubling/w_iterative spot mismatch at n=" + std::to_string(n));
      }
    }
  }

  // speed and frozen digit/hash anchors at n = 10^6, p = q = 1
  const auto started = std::chrono::steady_clock::now();
  const FLPair big = horadam::fl_doubling(Rational(1), Rational(1), 1000000);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  if (elapsed >= 5.0) {
    return fail("fl_doubling(1,1,10^6) took " + std::to_string(elapsed) +
                " s (budget 5 s)");
  }
  const std::string f_digits = horadam::to_string(big.f);
  const std::string l_digits = horadam::to_string(big.l);
  const double estimate = 1e6 * std::log10((1.0 + std::sqrt(5.0)) / 2.0);
  if (std::abs(static_cast<double>(f_digits.size()) - estimate) > 1.0) {
    return fail("F digit count " + std::to_string(f_digits.size()) +
                " outside n*log10(phi) +- 1");
  }
  if (f_digits.size() != 208988 || fnv1a64(f_digits) != 0x05e8be02fffcd32fULL) {
    return fail("F(10^6) digits/hash mismatch: " +
                std::to_string(f_digits.size()) + " digits");
  }
  if (l_digits.size() != 208988 || fnv1a64(l_digits) != 0x00ec51cd8c2a371aULL) {
    return fail("L(10^6) digits/hash mismatch: " +
                std::to_string(l_digits.size()) + " digits");
  }
  return {};
}

Outcome binet_diagnostic() {
  Rng rng(8096);
  for (int trial = 0; trial < 50; ++trial) {
    Rational p = rng.rational();
    Rational q = rng.rational();
    while (p * p + 4 * q == 0) {
      p = rng.rational();
      q = rng.rational();
    }
    const std::int64_t n = rng.uniform(0, 50);
    const auto result = horadam::binet_check(p, q, n);
    if (result.repeated_root || !result.passed()) {
      return fail("binet failure at p=" + horadam::to_string(p) +
                  " q=" + horadam::to_string(q) + " n=" + std::to_string(n));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    Rational p = rng.rational();
    if (p == 0) p = Rational(3);
    const Rational q = -(p * p) / 4;
    const auto result = horadam::binet_check(p, q, rng.uniform(0, 50));
    if (!result.repeated_root || !result.l_identity_ok) {
      return fail("repeated-root reporting failure at p=" + horadam::to_string(p));
    }
  }
  return {};
}

std::string g_cli_path;
std::string g_golden_dir;

Outcome fibonacci_landmark() {
  const HoradamParams fib{Rational(0), Rational(1), Rational(1), Rational(1)};
  // regenerate the frozen values from the brute-force oracle first
  if (horadam::sum_oracle(fib, 4) != 7) return fail("oracle S_4 != 7");
  if (horadam::w_iterative(fib, 10) != 55) return fail("oracle W_10 != 55");

  if (horadam::partial_sum(fib, 4) != 7) return fail("closed-form S_4 != 7");
  for (std::int64_t n = 0; n <= 100; ++n) {
    const Rational f_shifted =
        horadam::fl_iterative(Rational(1), Rational(1), n + 2).f;
    if (horadam::partial_sum(fib, n) != f_shifted - 1) {
      return fail("S_n != F_{n+2} - 1 at n=" + std::to_string(n));
    }
  }

  const auto run = run_command(g_cli_path +
                               " eval -a 0 -b 1 -p 1 -q 1 -n 10 --format csv");
  if (run.exit_code != 0) return fail("cli eval exited " + std::to_string(run.exit_code));
  if (run.out.find("10,55") == std::string::npos) {
    return fail("cli eval -n 10 did not print 55: " + run.out);
  }
  return {};
}

Outcome cli_contract() {
  for (const auto& fixture : testsupport::cli_fixtures()) {
    const auto result = run_command(g_cli_path + " " + fixture.args);
    if (result.exit_code != 0) {
      return fail(fixture.args + " exited " + std::to_string(result.exit_code));
    }
    const std::string expected = slurp(g_golden_dir + "/" + fixture.golden_file);
    if (expected.empty()) return fail("missing golden file " + fixture.golden_file);
    if (result.out != expected) {
      return fail("golden mismatch for " + fixture.golden_file);
    }
  }
  for (const auto& item : testsupport::cli_exit_cases()) {
    const auto result = run_command(g_cli_path + " " + item.args);
    if (result.exit_code != item.expected_exit) {
      return fail("'" + item.args + "' exited " + std::to_string(result.exit_code) +
                  ", expected " + std::to_string(item.expected_exit));
    }
    if (!item.stderr_needle.empty() &&
        result.err.find(item.stderr_needle) == std::string::npos) {
      return fail("'" + item.args + "' stderr lacks '" + item.stderr_needle + "'");
    }
    if (!item.stdout_needle.empty() &&
        result.out.find(item.stdout_needle) == std::string::npos) {
      return fail("'" + item.args + "' stdout lacks '" + item.stdout_needle + "'");
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-cli> <golden-dir>\n";
    return 2;
  }
  g_cli_path = argv[1];
  g_golden_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form/oracle agreement (generic, 100 quadruples, n <= 200)",
       oracle_agreement_generic},
      {"closed-form/oracle agreement (degenerate, 50+20 parameter sets, n <= 200)",
       oracle_agreement_degenerate},
      {"range-sum identity (50 quadruples, 1 <= n <= 40, 0 <= m <= 40)",
       range_sum_identity},
      {"generating-function transfer (25 quadruples, 64 coefficients)",
       generating_function_transfer},
      {"partial-fraction recombination (25 per class, exact polynomial identity)",
       partial_fraction_recombination},
      {"doubling correctness and speed (n <= 500, spots to 10^5, timed 10^6)",
       doubling_correctness_and_speed},
      {"binet diagnostic (50 simple-root pairs, 10 repeated-root pairs)",
       binet_diagnostic},
      {"fibonacci landmark (S_4 = 7, S_n = F_{n+2} - 1, eval -n 10 = 55)",
       fibonacci_landmark},
      {"cli contract (golden files for text/json/csv, exit-code matrix)",
       cli_contract},
  };

  bool all_ok = true;
  for (const auto& [name, runner] : criteria) {
    const auto started = std::chrono::steady_clock::now();
    const Outcome outcome = runner();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::cout << (outcome.ok ? "PASS " : "FAIL ") << name << " ("
              << std::fixed << std::setprecision(2) << elapsed << " s)\n";
    if (!outcome.ok) {
      std::cout << "     " << outcome.detail << "\n";
      all_ok = false;
    }
  }
  std::cout << (all_ok ? "ACCEPTANCE: all criteria passed"
                       : "ACCEPTANCE: criteria failed")
            << "\n";
  return all_ok ? 0 : 1;
}
