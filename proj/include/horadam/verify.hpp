#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horadam {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 25;
  int max_n = 100;
  // Corrupts one telescoping comparison so the failure-reporting path and
  // the nonzero exit status can be exercised against a correct library.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  std::string counterexample;  // empty when passed
};

// Seeded, deterministic property run over random parameter sets:
// closed-form/oracle agreement per degeneracy class, doubling/iteration
// agreement, F/L basis decomposition of W, Binet identities, exact
// partial-fraction recombination, and range-sum telescoping.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace horadam
