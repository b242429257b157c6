#include "freecum/rational.hpp"

#include <cctype>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("", "not a rational literal: '" + std::string(text) + "'");
  }
  Integer p{std::string(num[0] == '+' ? num.substr(1) : num)};
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("", "zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational pow(const Rational& value, unsigned exponent) {
  Rational result = 1;
  Rational base = value;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(std::int64_t n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) {
    const std::int64_t f = n - static_cast<std::int64_t>(i);
    if (f <= 0) return 0;
    r *= static_cast<long>(f);
  }
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

SqrtBounds sqrt_bounds(const Integer& n, unsigned digits) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root == n) return {Rational(root), Rational(root)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Integer scaled = n * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rational lo(s, scale);
  Rational hi(s + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace freecum
