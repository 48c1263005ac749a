#include "horadam/partial_sums.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace horadam {

namespace {

void require_sum_index(std::int64_t n) {
  if (n < -1) {
    throw std::domain_error("partial sums are defined for n >= -1, got " +
                            std::to_string(n));
  }
}

Rational evaluate_form(const SumDecomposition& decomposition,
                       const HoradamParams& params, std::int64_t n) {
  if (const auto* generic = std::get_if<GenericSumForm>(&decomposition.form)) {
    const FLPair fl = fl_doubling(params.p, params.q, n);
    return Rational(generic->c_const + generic->c_f * fl.f + generic->c_l * fl.l);
  }
  if (const auto* simple =
          std::get_if<SimpleDegenerateSumForm>(&decomposition.form)) {
    const Rational geometric =
        pow(simple->geom_ratio, static_cast<unsigned long>(n));
    return Rational(simple->c_const + simple->c_linear * Rational(n + 1) +
                    simple->c_geom * geometric);
  }
  const auto& quadratic = std::get<DoubleDegenerateSumForm>(decomposition.form);
  const Rational index(n);
  return Rational(quadratic.c_quad2 * index * index +
                  quadratic.c_quad1 * index + quadratic.c_quad0);
}

}  // namespace

Rational sum_oracle(const HoradamParams& params, std::int64_t n) {
  require_sum_index(n);
  if (n == -1) return Rational(0);
  Rational total = params.a;
  if (n == 0) return total;
  Rational prev = params.a;
  Rational curr = params.b;
  total += curr;
  for (std::int64_t k = 2; k <= n; ++k) {
    Rational next = params.p * curr + params.q * prev;
    total += next;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return total;
}

SumDecomposition decompose_sum(const HoradamParams& params) {
  const DegeneracyClass cls = classify(params);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& p = params.p;
  const Rational& q = params.q;

  switch (cls) {
    case DegeneracyClass::generic: {
      const Rational split = 1 - p - q;
      GenericSumForm form;
      form.c_const = (a - p * a + b) / split;
      form.c_f = -(2 * q * a - p * q * a + 2 * q * b + p * b) / (2 * split);
      form.c_l = -(q * a + b) / (2 * split);
      return SumDecomposition{cls, std::move(form)};
    }
    case DegeneracyClass::simple_degenerate: {
      // Partial fractions of S(z) over (1-z)^2 (1+qz), solved symbolically:
      //   S(z) = alpha/(1-z)^2 + beta/(1-z) + gamma/(1+qz)
      //   beta = (a-b)/(1+q)^2, alpha = a - (a-b)/(1+q), gamma = q beta.
      // 1 + q != 0 here: q = -1 with p + q = 1 is the (2,-1) class.
      const Rational one_plus_q = 1 + q;
      SimpleDegenerateSumForm form;
      form.c_const = (a - b) / (one_plus_q * one_plus_q);
      form.c_linear = a - (a - b) / one_plus_q;
      form.c_geom = q * form.c_const;
      form.geom_ratio = -q;
      return SumDecomposition{cls, std::move(form)};
    }
    case DegeneracyClass::double_degenerate: {
      // S(z) = (a + (b-2a)z)/(1-z)^3, so
      // S_n = a C(n+2,2) + (b-2a) C(n+1,2) = (b-a)/2 n^2 + (a+b)/2 n + a.
      DoubleDegenerateSumForm form;
      form.c_quad2 = (b - a) / 2;
      form.c_quad1 = (a + b) / 2;
      form.c_quad0 = a;
      return SumDecomposition{cls, std::move(form)};
    }
  }
  throw std::logic_error("unreachable degeneracy class");
}

Rational partial_sum(const HoradamParams& params, std::int64_t n) {
  require_sum_index(n);
  if (n == -1) return Rational(0);
  return evaluate_form(decompose_sum(params), params, n);
}

Rational range_sum(const HoradamParams& params, std::int64_t n, std::int64_t m) {
  if (n < 1) {
    throw std::domain_error("range sums require n >= 1, got " + std::to_string(n));
  }
  if (m < 0) {
    throw std::domain_error("range sums require m >= 0, got " + std::to_string(m));
  }
  const SumDecomposition decomposition = decompose_sum(params);
  if (const auto* generic = std::get_if<GenericSumForm>(&decomposition.form)) {
    // The constant terms of S_{n+m} - S_{n-1} cancel.
    const FLPair high = fl_doubling(params.p, params.q, n + m);
    const FLPair low = fl_doubling(params.p, params.q, n - 1);
    return Rational(generic->c_f * (high.f - low.f) +
                    generic->c_l * (high.l - low.l));
  }
  return Rational(partial_sum(params, n + m) - partial_sum(params, n - 1));
}

}  // namespace horadam
