#pragma once

#include <cstdint>
#include <variant>

#include "horadam/core_sequences.hpp"
#include "horadam/rational.hpp"

namespace horadam {

// S_n = c_const + c_f F_n + c_l L_n
struct GenericSumForm {
  Rational c_const;
  Rational c_f;
  Rational c_l;
};

// S_n = c_const + c_linear (n+1) + c_geom geom_ratio^n, geom_ratio = -q
// (with 0^0 = 1 covering q = 0 at n = 0)
struct SimpleDegenerateSumForm {
  Rational c_const;
  Rational c_linear;
  Rational c_geom;
  Rational geom_ratio;
};

// S_n = c_quad2 n^2 + c_quad1 n + c_quad0
struct DoubleDegenerateSumForm {
  Rational c_quad2;
  Rational c_quad1;
  Rational c_quad0;
};

// Sum-free representation of the partial sums of one parameter set, in the
// template matching its degeneracy class.
struct SumDecomposition {
  DegeneracyClass degeneracy = DegeneracyClass::generic;
  std::variant<GenericSumForm, SimpleDegenerateSumForm, DoubleDegenerateSumForm>
      form;
};

// The literal sum W_0 + ... + W_n; 0 for n = -1 (empty sum). Throws
// std::domain_error for n < -1.
Rational sum_oracle(const HoradamParams& params, std::int64_t n);

// Exact coefficients of the class-appropriate closed form. Generic class:
//   c_const = (a - pa + b)/(1 - p - q)
//   c_f     = -(2qa - pqa + 2qb + pb)/(2(1 - p - q))
//   c_l     = -(qa + b)/(2(1 - p - q))
// Degenerate classes come from the partial-fraction split of S(z) over
// (1-z)^2 (1+qz), respectively (1-z)^3.
SumDecomposition decompose_sum(const HoradamParams& params);

// Closed-form S_n (fl_doubling supplies F_n, L_n in the generic class);
// S_{-1} = 0 by convention. Throws std::domain_error for n < -1.
Rational partial_sum(const HoradamParams& params, std::int64_t n);

// W_n + ... + W_{n+m} for n >= 1, m >= 0. In the generic class this is the
// constant-free form c_f (F_{n+m} - F_{n-1}) + c_l (L_{n+m} - L_{n-1});
// degenerate classes fall back to partial_sum(n+m) - partial_sum(n-1).
Rational range_sum(const HoradamParams& params, std::int64_t n, std::int64_t m);

}  // namespace horadam
