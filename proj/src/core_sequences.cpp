#include "horadam/core_sequences.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace horadam {

namespace {

void require_index(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("sequence index must be non-negative, got " +
                            std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(DegeneracyClass cls) {
  switch (cls) {
    case DegeneracyClass::generic:
      return "generic";
    case DegeneracyClass::simple_degenerate:
      return "simple_degenerate";
    case DegeneracyClass::double_degenerate:
      return "double_degenerate";
  }
  return "unknown";
}

DegeneracyClass classify(const HoradamParams& params) {
  if (params.p + params.q != 1) return DegeneracyClass::generic;
  if (params.p == 2 && params.q == -1) return DegeneracyClass::double_degenerate;
  return DegeneracyClass::simple_degenerate;
}

Rational w_iterative(const HoradamParams& params, std::int64_t n) {
  require_index(n);
  if (n == 0) return params.a;
  Rational prev = params.a;
  Rational curr = params.b;
  for (std::int64_t k = 2; k <= n; ++k) {
    Rational next = params.p * curr + params.q * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

FLPair fl_iterative(const Rational& p, const Rational& q, std::int64_t n) {
  require_index(n);
  if (n == 0) return FLPair{0, Rational(0), Rational(2)};
  Rational f_prev(0), f(1);  // F_0, F_1
  Rational l_prev(2), l(p);  // L_0, L_1
  for (std::int64_t k = 2; k <= n; ++k) {
    Rational f_next = p * f + q * f_prev;
    Rational l_next = p * l + q * l_prev;
    f_prev = std::move(f);
    f = std::move(f_next);
    l_prev = std::move(l);
    l = std::move(l_next);
  }
  return FLPair{n, std::move(f), std::move(l)};
}

FLPair fl_doubling(const Rational& p, const Rational& q, std::int64_t n) {
  require_index(n);
  Rational f(0);  // F_k
  Rational g(1);  // F_{k+1}
  const auto bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n)));
  for (unsigned i = bits; i-- > 0;) {
    Rational f_even = f * (2 * g - p * f);      // F_{2k}
    Rational f_odd = g * g + q * (f * f);       // F_{2k+1}
    if ((static_cast<std::uint64_t>(n) >> i) & 1U) {
      g = p * f_odd + q * f_even;               // F_{2k+2}
      f = std::move(f_odd);
    } else {
      f = std::move(f_even);
      g = std::move(f_odd);
    }
  }
  Rational l = 2 * g - p * f;
  return FLPair{n, std::move(f), std::move(l)};
}

Rational w_from_fl(const HoradamParams& params, const FLPair& fl) {
  return Rational((params.b - params.a * params.p / 2) * fl.f +
                  (params.a / 2) * fl.l);
}

}  // namespace horadam
