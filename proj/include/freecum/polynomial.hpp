#pragma once

// Dense polynomials with exact rational coefficients, lowest degree first,
// plus polynomials in (x, z) stored as polynomials in x over Q[z].

#include <string>
#include <utility>
#include <vector>

#include "freecum/rational.hpp"

namespace freecum {

class Polynomial {
 public:
  Polynomial() = default;
  /// coeffs[k] multiplies z^k; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// The monomial c * z^k.
  static Polynomial monomial(const Rational& c, int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^k, zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  Polynomial derivative() const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable, highest degree first, e.g. "3*z^4 + 22*z^3 - 5".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q * b + r with deg r < deg b. Throws DomainError
/// for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws DomainError when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Polynomial in x whose coefficients are polynomials in z.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  /// x_coeffs[i] multiplies x^i.
  explicit BiPolynomial(std::vector<Polynomial> x_coeffs);
  static BiPolynomial x();
  static BiPolynomial z();
  static BiPolynomial constant(const Rational& c);
  static BiPolynomial from_z(const Polynomial& p);

  int degree_x() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i as a polynomial in z.
  Polynomial coeff(int i) const;
  const std::vector<Polynomial>& x_coeffs() const noexcept { return coeffs_; }

  BiPolynomial derivative_x() const;
  BiPolynomial derivative_z() const;
  Rational evaluate(const Rational& x, const Rational& z) const;

  BiPolynomial& operator+=(const BiPolynomial& other);
  BiPolynomial& operator-=(const BiPolynomial& other);
  BiPolynomial& operator*=(const BiPolynomial& other);
  BiPolynomial& operator*=(const Rational& c);

  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(BiPolynomial a, const BiPolynomial& b) { return a *= b; }
  friend BiPolynomial operator*(BiPolynomial a, const Rational& c) { return a *= c; }
  friend BiPolynomial operator*(const Rational& c, BiPolynomial a) { return a *= c; }

  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

 private:
  void trim();
  std::vector<Polynomial> coeffs_;
};

/// Res_x(p, q) as the determinant of the Sylvester matrix, computed by
/// fraction-free (Bareiss) elimination over Q[z]. Throws DomainError when
/// either argument is zero or constant in x.
Polynomial resultant(const BiPolynomial& p, const BiPolynomial& q);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
/// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_count(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo;
  Rational hi;
  double approx = 0.0;
  /// Set on the smallest positive root (dominant-singularity candidate).
  bool dominant = false;
};

/// Every real root in (0, ∞), isolated by Sturm-count bisection with exact
/// rational endpoints and refined until hi - lo <= width. Ascending.
std::vector<RootInterval> isolate_positive_roots(const Polynomial& r, const Rational& width);

}  // namespace freecum
