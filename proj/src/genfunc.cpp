#include "horadam/genfunc.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace horadam {

namespace {

// Solves A x = rhs exactly by Gauss-Jordan elimination. A has full column
// rank and the system is consistent (the fixed decomposition bases below
// guarantee both); anything else is a programming error.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) {
      throw std::logic_error("partial-fraction system is rank deficient");
    }
    std::swap(a[pivot], a[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    const Rational lead = a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] /= lead;
    rhs[rank] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= factor * a[rank][j];
      rhs[r] -= factor * rhs[rank];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (rhs[r] != 0) {
      throw std::logic_error("partial-fraction system is inconsistent");
    }
  }
  return std::vector<Rational>(rhs.begin(), rhs.begin() + static_cast<long>(cols));
}

Polynomial recurrence_denominator(const Rational& p, const Rational& q) {
  return Polynomial{Rational(1), Rational(-p), Rational(-q)};
}

}  // namespace

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coeff(0) == 0) {
    throw std::domain_error(
        "NO_EXPANSION: denominator constant term is zero, no power series at z = 0");
  }
}

RationalGF operator+(const RationalGF& x, const RationalGF& y) {
  return RationalGF(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalGF operator*(const RationalGF& x, const RationalGF& y) {
  return RationalGF(x.num_ * y.num_, x.den_ * y.den_);
}

RationalGF operator*(const Rational& scalar, const RationalGF& x) {
  return RationalGF(scalar * x.num_, x.den_);
}

bool operator==(const RationalGF& x, const RationalGF& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

RationalGF gf_w(const HoradamParams& params) {
  Polynomial numerator{params.a, Rational(params.b - params.p * params.a)};
  return RationalGF(std::move(numerator),
                    recurrence_denominator(params.p, params.q));
}

RationalGF gf_f(const Rational& p, const Rational& q) {
  return RationalGF(Polynomial{Rational(0), Rational(1)},
                    recurrence_denominator(p, q));
}

RationalGF gf_l(const Rational& p, const Rational& q) {
  return RationalGF(Polynomial{Rational(2), Rational(-p)},
                    recurrence_denominator(p, q));
}

RationalGF gf_s(const HoradamParams& params) {
  return gf_w(params) * RationalGF(Polynomial{Rational(1)},
                                   Polynomial{Rational(1), Rational(-1)});
}

std::vector<Rational> coefficients(const RationalGF& gf, std::size_t count) {
  const Polynomial& num = gf.numerator();
  const Polynomial& den = gf.denominator();
  if (den.coeff(0) == 0) {
    throw std::domain_error("NO_EXPANSION: denominator constant term is zero");
  }
  const Rational lead = den.coeff(0);
  const int den_degree = den.degree();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational c = num.coeff(n);
    for (int j = 1; j <= den_degree && static_cast<std::size_t>(j) <= n; ++j) {
      c -= den.coeff(static_cast<std::size_t>(j)) * out[n - static_cast<std::size_t>(j)];
    }
    out.emplace_back(c / lead);
  }
  return out;
}

std::vector<WeightedTerm> decompose_s(const HoradamParams& params) {
  if (classify(params) != DegeneracyClass::generic) {
    throw std::domain_error(
        "SINGULAR_SPLIT: 1 - p - q vanishes; use decompose_s_degenerate");
  }
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& p = params.p;
  const Rational& q = params.q;
  const Rational split = 1 - p - q;

  Rational weight_const = (a - p * a + b) / split;
  Rational weight_f = -(2 * q * a - p * q * a + 2 * q * b + p * b) / (2 * split);
  Rational weight_l = -(q * a + b) / (2 * split);

  std::vector<WeightedTerm> out;
  out.push_back({RationalGF(Polynomial{Rational(1)},
                            Polynomial{Rational(1), Rational(-1)}),
                 std::move(weight_const)});
  out.push_back({gf_f(p, q), std::move(weight_f)});
  out.push_back({gf_l(p, q), std::move(weight_l)});
  return out;
}

std::vector<WeightedTerm> decompose_s_degenerate(const HoradamParams& params) {
  const DegeneracyClass cls = classify(params);
  if (cls == DegeneracyClass::generic) {
    throw std::domain_error(
        "USE_GENERIC_SPLIT: 1 - p - q is nonzero; use decompose_s");
  }

  // Numerator of S(z), shared with W(z).
  const Polynomial target{params.a,
                          Rational(params.b - params.p * params.a)};

  // term i is num_i / den_i; cofactor_i = num_i * (D / den_i) where D is the
  // common denominator, built from factors rather than by division.
  std::vector<Polynomial> numerators;
  std::vector<Polynomial> denominators;
  std::vector<Polynomial> cofactors;

  const Polynomial one_minus_z{Rational(1), Rational(-1)};
  const Polynomial one{Rational(1)};
  if (cls == DegeneracyClass::simple_degenerate) {
    // p + q = 1 factors 1 - pz - qz^2 = (1-z)(1+qz), so D = (1-z)^2 (1+qz).
    const Polynomial one_plus_qz{Rational(1), params.q};
    const Polynomial one_minus_z_sq = one_minus_z * one_minus_z;
    numerators = {one, one, one};
    denominators = {one_minus_z_sq, one_minus_z, one_plus_qz};
    cofactors = {one_plus_qz, one_minus_z * one_plus_qz, one_minus_z_sq};
  } else {
    // (p,q) = (2,-1): 1 - pz - qz^2 = (1-z)^2, so D = (1-z)^3.
    const Polynomial one_minus_z_cubed = one_minus_z * one_minus_z * one_minus_z;
    const Polynomial z{Rational(0), Rational(1)};
    numerators = {one, z};
    denominators = {one_minus_z_cubed, one_minus_z_cubed};
    cofactors = {one, z};
  }

  // Undetermined coefficients: rows are the z^k coefficients of
  // sum_i w_i cofactor_i = target, for k < deg D.
  const std::size_t equation_count = 3;
  std::vector<std::vector<Rational>> matrix(
      equation_count, std::vector<Rational>(cofactors.size(), Rational(0)));
  std::vector<Rational> rhs(equation_count, Rational(0));
  for (std::size_t row = 0; row < equation_count; ++row) {
    for (std::size_t col = 0; col < cofactors.size(); ++col) {
      matrix[row][col] = cofactors[col].coeff(row);
    }
    rhs[row] = target.coeff(row);
  }
  const std::vector<Rational> weights = solve_exact(std::move(matrix), std::move(rhs));

  std::vector<WeightedTerm> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out.push_back({RationalGF(numerators[i], denominators[i]), weights[i]});
  }
  return out;
}

RationalGF recombine(const std::vector<WeightedTerm>& terms) {
  RationalGF acc(Polynomial{}, Polynomial{Rational(1)});
  for (const WeightedTerm& entry : terms) {
    acc = acc + entry.weight * entry.term;
  }
  return acc;
}

}  // namespace horadam
