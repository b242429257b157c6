#pragma once

// Truncated formal power series over Q and the operations needed to move
// between characteristic sequences and their generating functions.
//
// A PowerSeries of order M carries the coefficients c_0..c_M; every result
// is valid exactly up to the order it reports.

#include <vector>

#include "freecum/incidence.hpp"
#include "freecum/polynomial.hpp"
#include "freecum/rational.hpp"

namespace freecum {

class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(int order = 0);
  /// Order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, int order);
  /// The series z.
  static PowerSeries identity(int order);
  static PowerSeries from_polynomial(const Polynomial& p, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Drops coefficients above `order`, or pads with zeros.
  PowerSeries truncated(int order) const;
  /// Derivative; valid to order - 1.
  PowerSeries derivative() const;
  /// Multiplies by z, keeping the order.
  PowerSeries times_z() const;
  /// Divides by z (requires c_0 = 0); valid to order - 1.
  PowerSeries divided_by_z() const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// 1/f; requires f(0) != 0.
PowerSeries ps_reciprocal(const PowerSeries& f);

/// f(g(z)) to order min(f.order, g.order); requires g(0) = 0.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// h with f(h(z)) = z, by Newton iteration; requires f(0) = 0, f'(0) != 0.
PowerSeries ps_compositional_inverse(const PowerSeries& f);

/// The square root with constant term 1; requires f(0) = 1.
PowerSeries ps_sqrt(const PowerSeries& f);

/// φ_f(z) = Σ_{n≥1} f_n z^n to the given order (≤ f.order()).
PowerSeries characteristic_series(const MultiplicativeFunction& f, int order);
/// Inverse of characteristic_series; requires c_0 = 0.
MultiplicativeFunction from_characteristic_series(const PowerSeries& phi);

/// F_f(z) = φ_f^{<-1>}(z) / z to order M; needs f_1 = 1 and f known to M+1.
PowerSeries fourier(const MultiplicativeFunction& f, int order);

/// Given φ_g, the φ_f with φ_f(z(1 + φ_g(z))) = φ_g(z), i.e. f = g ⊠ μ.
PowerSeries solve_zeta_relation(const PowerSeries& phi_g);

/// Given φ_f, the unique φ_g with φ_f(z(1 + φ_g(z))) = φ_g(z), i.e.
/// g = f ⊠ ζ, by Newton iteration on truncated series.
PowerSeries zeta_convolution_series(const PowerSeries& phi_f);

/// g(x(z), z) with g's z-polynomials truncated to the order of x.
PowerSeries substitute(const BiPolynomial& g, const PowerSeries& x);

/// The series x(z) with x(0) = 0 and g(x(z), z) = 0 to order M, by Newton
/// iteration. Requires g(0,0) = 0 and ∂g/∂x(0,0) != 0.
PowerSeries ps_implicit_solve(const BiPolynomial& g, int order);

}  // namespace freecum
