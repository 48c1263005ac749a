#pragma once

#include <cstdint>
#include <string_view>

#include "horadam/rational.hpp"

namespace horadam {

// Parameters of the sequence W_n: W_0 = a, W_1 = b,
// W_n = p W_{n-1} + q W_{n-2} for n >= 2.
struct HoradamParams {
  Rational a;
  Rational b;
  Rational p;
  Rational q;
};

// Case split on the factor 1 - p - q (the value of the recurrence
// denominator 1 - pz - qz^2 at z = 1):
//   generic            1 - p - q != 0
//   simple_degenerate  p + q = 1 and (p, q) != (2, -1)
//   double_degenerate  (p, q) = (2, -1)
enum class DegeneracyClass { generic, simple_degenerate, double_degenerate };

std::string_view to_string(DegeneracyClass cls);

DegeneracyClass classify(const HoradamParams& params);

// The basis pair (F_n, L_n) at a shared index. Both satisfy the recurrence
// x_n = p x_{n-1} + q x_{n-2}, seeded F_0 = 0, F_1 = 1 and L_0 = 2, L_1 = p.
// For integer p, q both components are integers.
struct FLPair {
  std::int64_t index = 0;
  Rational f;
  Rational l;
};

// W_n by n-1 recurrence steps. Negative n throws std::domain_error.
Rational w_iterative(const HoradamParams& params, std::int64_t n);

// (F_n, L_n) by simultaneous iteration.
FLPair fl_iterative(const Rational& p, const Rational& q, std::int64_t n);

// Same value as fl_iterative in O(log n) big multiplications, by binary
// descent on the pair (F_k, F_{k+1}):
//   F_{2k}   = F_k (2 F_{k+1} - p F_k)      [= F_k L_k]
//   F_{2k+1} = F_{k+1}^2 + q F_k^2
// and finally L_n = 2 F_{n+1} - p F_n.
FLPair fl_doubling(const Rational& p, const Rational& q, std::int64_t n);

// The decomposition of W in the F/L basis:
//   W_n = (b - ap/2) F_n + (a/2) L_n.
// fl must have been produced for the same (p, q).
Rational w_from_fl(const HoradamParams& params, const FLPair& fl);

}  // namespace horadam
