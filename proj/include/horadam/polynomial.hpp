#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "horadam/rational.hpp"

namespace horadam {

// Dense univariate polynomial over Rational, coefficient k belonging to z^k.
// Canonical form: trailing zero coefficients stripped; the zero polynomial is
// the empty coefficient sequence and reports degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Rational& scalar, const Polynomial& x);
  friend bool operator==(const Polynomial& x, const Polynomial& y) = default;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

}  // namespace horadam
