#pragma once

// Exact arithmetic types shared by every module. All decisions in the
// library are taken on these; doubles only appear in reported approximations.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace freecum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer string. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational abs(const Rational& value);

/// value^exponent for exponent >= 0.
Rational pow(const Rational& value, unsigned exponent);

Integer factorial(unsigned n);

/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(std::int64_t n, unsigned k);

Integer binomial(unsigned n, unsigned k);

Integer catalan(unsigned n);

/// Rational bounds lo <= sqrt(n) <= hi with hi - lo <= 10^-digits
/// (lo == hi when n is a perfect square).
struct SqrtBounds {
  Rational lo;
  Rational hi;
};
SqrtBounds sqrt_bounds(const Integer& n, unsigned digits);

double to_double(const Rational& value);

}  // namespace freecum
