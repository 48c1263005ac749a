#include "horadam/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "horadam/core_sequences.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/partial_sums.hpp"
#include "horadam/quadratic.hpp"

namespace horadam {

namespace {

// mt19937_64 output is pinned by the standard; avoiding std distributions
// keeps trial sequences identical across standard libraries.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_abs_numerator = 9, int max_denominator = 6) {
    return make_rational(uniform(-max_abs_numerator, max_abs_numerator),
                         uniform(1, max_denominator));
  }

  HoradamParams generic_params() {
    for (;;) {
      HoradamParams params{rational(), rational(), rational(), rational()};
      if (classify(params) == DegeneracyClass::generic) return params;
    }
  }

  HoradamParams simple_degenerate_params() {
    for (;;) {
      Rational p = rational();
      HoradamParams params{rational(), rational(), p, Rational(1 - p)};
      if (classify(params) == DegeneracyClass::simple_degenerate) return params;
    }
  }

  HoradamParams double_degenerate_params() {
    return HoradamParams{rational(), rational(), Rational(2), Rational(-1)};
  }

 private:
  std::mt19937_64 engine_;
};

std::string describe(const HoradamParams& params) {
  std::ostringstream out;
  out << "a=" << to_string(params.a) << " b=" << to_string(params.b)
      << " p=" << to_string(params.p) << " q=" << to_string(params.q);
  return out.str();
}

std::string mismatch(const HoradamParams& params, std::int64_t n,
                     const Rational& expected, const Rational& got) {
  std::ostringstream out;
  out << describe(params) << " n=" << n << ": expected " << to_string(expected)
      << ", got " << to_string(got);
  return out.str();
}

using ParamSource = HoradamParams (TrialRng::*)();

// partial_sum against a literal running sum of the recurrence.
CheckResult check_oracle(const std::string& name, ParamSource source,
                         const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{name, true, options.trials, ""};
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    const HoradamParams params = (rng.*source)();
    Rational prev = params.a;
    Rational curr = params.b;
    Rational running = params.a;
    for (std::int64_t n = 0; n <= options.max_n; ++n) {
      if (n == 1) {
        running += curr;
      } else if (n >= 2) {
        Rational next = params.p * curr + params.q * prev;
        running += next;
        prev = curr;
        curr = next;
      }
      const Rational closed = partial_sum(params, n);
      if (closed != running) {
        result.passed = false;
        result.counterexample = mismatch(params, n, running, closed);
        break;
      }
    }
  }
  return result;
}

CheckResult check_doubling(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"doubling_agreement", true, options.trials, ""};
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    const Rational p = rng.rational();
    const Rational q = rng.rational();
    for (std::int64_t n = 0; n <= options.max_n; ++n) {
      const FLPair slow = fl_iterative(p, q, n);
      const FLPair fast = fl_doubling(p, q, n);
      if (slow.f != fast.f || slow.l != fast.l) {
        result.passed = false;
        result.counterexample =
            mismatch(HoradamParams{Rational(0), Rational(1), p, q}, n, slow.f,
                     fast.f) +
            " (F or L disagrees between doubling and iteration)";
        break;
      }
    }
  }
  return result;
}

CheckResult check_basis(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"basis_decomposition", true, options.trials, ""};
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    HoradamParams params{rng.rational(), rng.rational(), rng.rational(),
                         rng.rational()};
    Rational prev = params.a;
    Rational curr = params.b;
    for (std::int64_t n = 0; n <= options.max_n; ++n) {
      Rational direct;
      if (n == 0) {
        direct = params.a;
      } else if (n == 1) {
        direct = params.b;
      } else {
        direct = params.p * curr + params.q * prev;
        prev = curr;
        curr = direct;
      }
      const Rational recombined = w_from_fl(params, fl_iterative(params.p, params.q, n));
      if (recombined != direct) {
        result.passed = false;
        result.counterexample = mismatch(params, n, direct, recombined);
        break;
      }
    }
  }
  return result;
}

CheckResult check_binet(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"binet_identity", true, options.trials, ""};
  const std::int64_t max_n = std::min<std::int64_t>(options.max_n, 50);
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    Rational p = rng.rational();
    Rational q = rng.rational();
    while (p * p + 4 * q == 0) {
      p = rng.rational();
      q = rng.rational();
    }
    const std::int64_t n = rng.uniform(0, max_n);
    const BinetCheckResult simple_roots = binet_check(p, q, n);
    if (simple_roots.repeated_root || !simple_roots.passed()) {
      result.passed = false;
      result.counterexample = describe(HoradamParams{Rational(0), Rational(1), p, q}) +
                              " n=" + std::to_string(n) + ": binet identity failed";
      break;
    }
    // Constructed repeated root: q = -p^2/4.
    Rational pp = rng.rational();
    if (pp == 0) pp = Rational(2);
    const Rational qq = -(pp * pp) / 4;
    const BinetCheckResult repeated = binet_check(pp, qq, n);
    if (!repeated.repeated_root || !repeated.l_identity_ok) {
      result.passed = false;
      result.counterexample = describe(HoradamParams{Rational(0), Rational(1), pp, qq}) +
                              " n=" + std::to_string(n) +
                              ": repeated-root handling failed";
      break;
    }
  }
  return result;
}

CheckResult check_recombination_generic(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"recombination_generic", true, options.trials, ""};
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    const HoradamParams params = rng.generic_params();
    const auto split = decompose_s(params);
    if (!(recombine(split) == gf_s(params))) {
      result.passed = false;
      result.counterexample = describe(params) + ": recombined split != S(z)";
      break;
    }
    const auto form = std::get<GenericSumForm>(decompose_sum(params).form);
    if (split[0].weight != form.c_const || split[1].weight != form.c_f ||
        split[2].weight != form.c_l) {
      result.passed = false;
      result.counterexample = describe(params) + ": split weights != sum coefficients";
      break;
    }
  }
  return result;
}

CheckResult check_recombination_degenerate(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"recombination_degenerate", true, options.trials, ""};
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    for (const HoradamParams& params :
         {rng.simple_degenerate_params(), rng.double_degenerate_params()}) {
      const auto split = decompose_s_degenerate(params);
      if (!(recombine(split) == gf_s(params))) {
        result.passed = false;
        result.counterexample = describe(params) + ": recombined split != S(z)";
        break;
      }
      const SumDecomposition decomposition = decompose_sum(params);
      if (const auto* simple =
              std::get_if<SimpleDegenerateSumForm>(&decomposition.form)) {
        if (split[0].weight != simple->c_linear ||
            split[1].weight != simple->c_const ||
            split[2].weight != simple->c_geom) {
          result.passed = false;
          result.counterexample =
              describe(params) + ": split weights != sum coefficients";
          break;
        }
      } else {
        // Weights (w0, w1) on 1/(1-z)^3, z/(1-z)^3 expand to the quadratic
        // w0 C(n+2,2) + w1 C(n+1,2).
        const auto& quad = std::get<DoubleDegenerateSumForm>(decomposition.form);
        const Rational& w0 = split[0].weight;
        const Rational& w1 = split[1].weight;
        if (quad.c_quad2 != (w0 + w1) / 2 || quad.c_quad1 != (3 * w0 + w1) / 2 ||
            quad.c_quad0 != w0) {
          result.passed = false;
          result.counterexample =
              describe(params) + ": split weights inconsistent with quadratic form";
          break;
        }
      }
    }
  }
  return result;
}

CheckResult check_telescoping(const VerifyOptions& options) {
  TrialRng rng(options.seed);
  CheckResult result{"telescoping", true, options.trials, ""};
  const std::int64_t half = std::max<std::int64_t>(1, options.max_n / 2);
  for (int trial = 0; trial < options.trials && result.passed; ++trial) {
    HoradamParams params;
    switch (trial % 3) {
      case 0: params = rng.generic_params(); break;
      case 1: params = rng.simple_degenerate_params(); break;
      default: params = rng.double_degenerate_params(); break;
    }
    for (int sample = 0; sample < 8; ++sample) {
      const std::int64_t n = rng.uniform(1, half);
      const std::int64_t m = rng.uniform(0, half);
      Rational expected = partial_sum(params, n + m) - partial_sum(params, n - 1);
      if (options.inject_fault && trial == 0 && sample == 0) expected += 1;
      const Rational ranged = range_sum(params, n, m);
      if (ranged != expected) {
        result.passed = false;
        std::ostringstream out;
        out << describe(params) << " n=" << n << " m=" << m << ": expected "
            << to_string(expected) << ", got " << to_string(ranged);
        result.counterexample = out.str();
        break;
      }
    }
  }
  return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.trials < 1) {
    throw std::domain_error("verification requires trials >= 1");
  }
  if (options.max_n < 2) {
    throw std::domain_error("verification requires max_n >= 2");
  }
  std::vector<CheckResult> results;
  results.push_back(check_oracle("oracle_generic", &TrialRng::generic_params, options));
  results.push_back(check_oracle("oracle_simple_degenerate",
                                 &TrialRng::simple_degenerate_params, options));
  results.push_back(check_oracle("oracle_double_degenerate",
                                 &TrialRng::double_degenerate_params, options));
  results.push_back(check_doubling(options));
  results.push_back(check_basis(options));
  results.push_back(check_binet(options));
  results.push_back(check_recombination_generic(options));
  results.push_back(check_recombination_degenerate(options));
  results.push_back(check_telescoping(options));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace horadam
