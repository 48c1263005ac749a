#include "horadam/rational.hpp"

#include <stdexcept>

namespace horadam {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  Rational value{Integer(numerator), Integer(denominator)};
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto take_digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out.push_back(text[pos++]);
    }
    return pos > start;
  };

  std::string num_digits;
  if (!take_digits(num_digits)) return std::nullopt;

  std::string den_digits;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (!take_digits(den_digits)) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  Integer num(num_digits, 10);
  Integer den = den_digits.empty() ? Integer(1) : Integer(den_digits, 10);
  if (den == 0) return std::nullopt;
  if (negative) num = -num;

  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return out;  // canonical: powers preserve coprimality and den > 0
}

bool is_integer(const Rational& value) {
  return mpz_cmp_ui(mpq_denref(value.get_mpq_t()), 1) == 0;
}

}  // namespace horadam
