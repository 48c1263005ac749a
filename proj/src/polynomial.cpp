#include "horadam/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace horadam {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  strip();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  strip();
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  std::vector<Rational> out(std::max(x.coeffs_.size(), y.coeffs_.size()),
                            Rational(0));
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) out[k] += x.coeffs_[k];
  for (std::size_t k = 0; k < y.coeffs_.size(); ++k) out[k] += y.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) {
  std::vector<Rational> out(std::max(x.coeffs_.size(), y.coeffs_.size()),
                            Rational(0));
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) out[k] += x.coeffs_[k];
  for (std::size_t k = 0; k < y.coeffs_.size(); ++k) out[k] -= y.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return Polynomial();
  std::vector<Rational> out(x.coeffs_.size() + y.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& scalar, const Polynomial& x) {
  std::vector<Rational> out;
  out.reserve(x.coeffs_.size());
  for (const Rational& c : x.coeffs_) out.emplace_back(scalar * c);
  return Polynomial(std::move(out));
}

}  // namespace horadam
