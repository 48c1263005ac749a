#pragma once

#include <cstddef>
#include <vector>

#include "horadam/core_sequences.hpp"
#include "horadam/polynomial.hpp"
#include "horadam/rational.hpp"

namespace horadam {

// Formal rational function N(z)/D(z) with D(0) != 0, so a power-series
// expansion at z = 0 exists. Never reduced to lowest terms; equality is by
// cross-multiplication (n1 d2 == n2 d1), not by coefficient comparison.
class RationalGF {
 public:
  // Throws std::domain_error ("NO_EXPANSION") when the denominator has a
  // zero constant term.
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalGF operator+(const RationalGF& x, const RationalGF& y);
  friend RationalGF operator*(const RationalGF& x, const RationalGF& y);
  friend RationalGF operator*(const Rational& scalar, const RationalGF& x);
  friend bool operator==(const RationalGF& x, const RationalGF& y);

 private:
  Polynomial num_;
  Polynomial den_;
};

// W(z) = sum W_k z^k = (a + z(b - pa)) / (1 - pz - qz^2)
RationalGF gf_w(const HoradamParams& params);

// F(z) = z / (1 - pz - qz^2)
RationalGF gf_f(const Rational& p, const Rational& q);

// L(z) = (2 - pz) / (1 - pz - qz^2)
RationalGF gf_l(const Rational& p, const Rational& q);

// S(z) = W(z) / (1 - z); denominator expands to
// 1 - (p+1)z + (p-q)z^2 + qz^3.
RationalGF gf_s(const HoradamParams& params);

// First `count` power-series coefficients at z = 0, by the linear recurrence
// the denominator induces: d_0 c_n = num_n - sum_{j>=1} d_j c_{n-j}.
std::vector<Rational> coefficients(const RationalGF& gf, std::size_t count);

struct WeightedTerm {
  RationalGF term;
  Rational weight;
};

// The three-term split of S(z) for the generic class:
//   weight (a - pa + b)/(1 - p - q)            on 1/(1-z)
//   weight -(2qa - pqa + 2qb + pb)/(2(1-p-q))  on F(z)
//   weight -(qa + b)/(2(1-p-q))                on L(z)
// Throws std::domain_error ("SINGULAR_SPLIT") for degenerate classes.
std::vector<WeightedTerm> decompose_s(const HoradamParams& params);

// Degenerate-class analogue over a fixed basis, solved by exact Gaussian
// elimination on the undetermined-coefficient system:
//   p + q = 1, (p,q) != (2,-1):  1/(1-z)^2, 1/(1-z), 1/(1+qz)
//   (p,q) = (2,-1):              1/(1-z)^3, z/(1-z)^3
// Throws std::domain_error ("USE_GENERIC_SPLIT") for the generic class.
std::vector<WeightedTerm> decompose_s_degenerate(const HoradamParams& params);

// Weighted sum of the terms over a common denominator.
RationalGF recombine(const std::vector<WeightedTerm>& terms);

}  // namespace horadam
