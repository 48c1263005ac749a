#pragma once

#include <cstdint>

#include "horadam/rational.hpp"

namespace horadam {

// Element u + v*sqrt(delta) of Q adjoined a square root of delta, represented
// componentwise. Arithmetic is closed:
//   (u1 + v1 r)(u2 + v2 r) = (u1 u2 + v1 v2 delta) + (u1 v2 + u2 v1) r.
// Both operands of any operation must carry the same delta. delta is kept
// as given (never factored); the single normalization is sqrt(0) = 0, so
// delta = 0 forces the radical part to 0. Comparison is componentwise.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational rational_part, Rational radical_part,
                  Rational discriminant);

  const Rational& rational_part() const { return u_; }
  const Rational& radical_part() const { return v_; }
  const Rational& discriminant() const { return delta_; }

  bool is_rational() const { return v_ == 0; }

  QuadraticNumber pow(std::uint64_t exponent) const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) = default;

 private:
  Rational u_;
  Rational v_;
  Rational delta_;
};

// Roots of X^2 - pX - q: (p +- sqrt(p^2 + 4q)) / 2, kept exact. When the
// discriminant vanishes both fields are the repeated root p/2.
struct CharacteristicRoots {
  QuadraticNumber plus;
  QuadraticNumber minus;
};

CharacteristicRoots characteristic_roots(const Rational& p, const Rational& q);

// Outcome of checking the closed forms
//   F_n = (lambda^n - mu^n) / (lambda - mu),   L_n = lambda^n + mu^n
// against the recurrence-defined values, in exact QuadraticNumber arithmetic.
// The F quotient is 0/0 at a repeated root, so that part is refused there.
struct BinetCheckResult {
  bool repeated_root = false;  // discriminant p^2 + 4q is zero
  bool f_identity_ok = false;  // meaningless when repeated_root
  bool l_identity_ok = false;

  bool passed() const {
    return l_identity_ok && (repeated_root || f_identity_ok);
  }
};

BinetCheckResult binet_check(const Rational& p, const Rational& q, std::int64_t n);

}  // namespace horadam
