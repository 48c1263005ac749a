#include "horadam/quadratic.hpp"

#include <stdexcept>
#include <utility>

#include "horadam/core_sequences.hpp"

namespace horadam {

namespace {

void require_same_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.discriminant() != y.discriminant()) {
    throw std::domain_error(
        "quadratic numbers with different discriminants cannot be combined");
  }
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational radical_part,
                                 Rational discriminant)
    : u_(std::move(rational_part)),
      v_(std::move(radical_part)),
      delta_(std::move(discriminant)) {
  if (delta_ == 0) v_ = 0;  // sqrt(0) = 0
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return QuadraticNumber(Rational(x.u_ + y.u_), Rational(x.v_ + y.v_), x.delta_);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return QuadraticNumber(Rational(x.u_ - y.u_), Rational(x.v_ - y.v_), x.delta_);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  Rational u = x.u_ * y.u_ + x.v_ * y.v_ * x.delta_;
  Rational v = x.u_ * y.v_ + y.u_ * x.v_;
  return QuadraticNumber(std::move(u), std::move(v), x.delta_);
}

QuadraticNumber QuadraticNumber::pow(std::uint64_t exponent) const {
  QuadraticNumber result(Rational(1), Rational(0), delta_);
  QuadraticNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CharacteristicRoots characteristic_roots(const Rational& p, const Rational& q) {
  Rational delta = p * p + 4 * q;
  Rational half_p = p / 2;
  Rational half(1, 2);
  half.canonicalize();
  return CharacteristicRoots{QuadraticNumber(half_p, half, delta),
                             QuadraticNumber(half_p, Rational(-half), delta)};
}

BinetCheckResult binet_check(const Rational& p, const Rational& q, std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("binet_check requires a non-negative index");
  }
  const FLPair fl = fl_iterative(p, q, n);
  const CharacteristicRoots roots = characteristic_roots(p, q);
  const Rational& delta = roots.plus.discriminant();
  const auto exponent = static_cast<std::uint64_t>(n);
  const QuadraticNumber lambda_n = roots.plus.pow(exponent);
  const QuadraticNumber mu_n = roots.minus.pow(exponent);

  BinetCheckResult result;
  result.repeated_root = (delta == 0);
  result.l_identity_ok =
      (lambda_n + mu_n == QuadraticNumber(fl.l, Rational(0), delta));
  if (!result.repeated_root) {
    const QuadraticNumber scaled_f =
        QuadraticNumber(fl.f, Rational(0), delta) * (roots.plus - roots.minus);
    result.f_identity_ok = (lambda_n - mu_n == scaled_f);
  }
  return result;
}

}  // namespace horadam
