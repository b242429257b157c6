#include "freecum/series.hpp"

#include <algorithm>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

// Newton steps double the number of correct coefficients; iterating to a
// fixed point is the stopping rule, the cap only guards against misuse.
constexpr int kMaxNewtonSteps = 64;

template <class Step>
PowerSeries newton_fixed_point(PowerSeries start, Step step, const char* what) {
  for (int i = 0; i < kMaxNewtonSteps; ++i) {
    auto next = step(start);
    if (next == start) return start;
    start = std::move(next);
  }
  throw SeriesError(std::string(what) + ": Newton iteration did not settle");
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a series needs at least the constant coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(int order) {
  PowerSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
  PowerSeries s(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) s[k] = p.coeff(k);
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = coeffs_[static_cast<std::size_t>(k)];
  return s;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries d(order() - 1);
  for (int k = 1; k <= order(); ++k) d[k - 1] = coeffs_[static_cast<std::size_t>(k)] * k;
  return d;
}

PowerSeries PowerSeries::times_z() const {
  PowerSeries s(order());
  for (int k = 1; k <= order(); ++k) s[k] = coeffs_[static_cast<std::size_t>(k - 1)];
  return s;
}

PowerSeries PowerSeries::divided_by_z() const {
  if (coeffs_[0] != 0) throw SeriesError("cannot divide by z: nonzero constant term");
  if (order() == 0) return PowerSeries(0);
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int m = std::min(a.order(), b.order());
  PowerSeries out(m);
  for (int i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries ps_reciprocal(const PowerSeries& f) {
  if (f[0] == 0) throw SeriesError("reciprocal of a series with zero constant term");
  PowerSeries r(f.order());
  const Rational inv = 1 / f[0];
  r[0] = inv;
  for (int k = 1; k <= f.order(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += f[j] * r[k - j];
    r[k] = -acc * inv;
  }
  return r;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  if (g[0] != 0) throw SeriesError("composition error: inner series has nonzero constant term");
  const int m = std::min(f.order(), g.order());
  const auto inner = g.truncated(m);
  PowerSeries acc = PowerSeries::constant(f[m], m);
  for (int k = m - 1; k >= 0; --k) {
    acc = acc * inner;
    acc[0] += f[k];
  }
  return acc;
}

PowerSeries ps_compositional_inverse(const PowerSeries& f) {
  if (f.order() < 1 || f[0] != 0 || f[1] == 0) {
    throw SeriesError("inversion error: need f(0) = 0 and f'(0) != 0");
  }
  const int m = f.order();
  const auto z = PowerSeries::identity(m);
  const auto df = f.derivative().truncated(m);
  PowerSeries start = z * Rational(1 / f[1]);
  auto h = newton_fixed_point(start, [&](const PowerSeries& h) {
    return h - (ps_compose(f, h) - z) * ps_reciprocal(ps_compose(df, h));
  }, "compositional inverse");
  if (ps_compose(f, h) != z) throw SeriesError("inversion error: f(h(z)) != z");
  return h;
}

PowerSeries ps_sqrt(const PowerSeries& f) {
  if (f[0] != 1) throw SeriesError("branch error: square root needs constant term 1");
  const Rational half(1, 2);
  return newton_fixed_point(PowerSeries::constant(1, f.order()), [&](const PowerSeries& s) {
    return (s + f * ps_reciprocal(s)) * half;
  }, "square root");
}

PowerSeries characteristic_series(const MultiplicativeFunction& f, int order) {
  if (order > f.order()) {
    throw OrderError("characteristic series of order " + std::to_string(order) + " needs f known to that order");
  }
  PowerSeries s(order);
  for (int n = 1; n <= order; ++n) s[n] = f[n];
  return s;
}

MultiplicativeFunction from_characteristic_series(const PowerSeries& phi) {
  if (phi[0] != 0) throw SeriesError("characteristic series must vanish at 0");
  return MultiplicativeFunction(std::vector<Rational>(phi.coeffs().begin() + 1, phi.coeffs().end()));
}

PowerSeries fourier(const MultiplicativeFunction& f, int order) {
  if (f.order() < 1 || f[1] != 1) throw SeriesError("normalization error: Fourier transform needs f_1 = 1");
  if (f.order() < order + 1) {
    throw OrderError("Fourier transform to order " + std::to_string(order) + " needs f known to order " +
                     std::to_string(order + 1));
  }
  return ps_compositional_inverse(characteristic_series(f, order + 1)).divided_by_z();
}

PowerSeries solve_zeta_relation(const PowerSeries& phi_g) {
  if (phi_g[0] != 0) throw SeriesError("solver error: φ_g must vanish at 0");
  const int m = phi_g.order();
  if (m == 0) return PowerSeries(0);
  const auto w = (PowerSeries::constant(1, m) + phi_g).times_z();
  return ps_compose(phi_g, ps_compositional_inverse(w));
}

PowerSeries zeta_convolution_series(const PowerSeries& phi_f) {
  if (phi_f[0] != 0) throw SeriesError("solver error: φ_f must vanish at 0");
  const int m = phi_f.order();
  const auto one = PowerSeries::constant(1, m);
  const auto dphi = phi_f.derivative().truncated(m);
  auto x = newton_fixed_point(PowerSeries(m), [&](const PowerSeries& x) {
    const auto w = (one + x).times_z();
    const auto residual = ps_compose(phi_f, w) - x;
    const auto slope = ps_compose(dphi, w).times_z() - one;
    return x - residual * ps_reciprocal(slope);
  }, "zeta relation");
  if (ps_compose(phi_f, (one + x).times_z()) != x) throw SeriesError("solver error: relation not satisfied");
  return x;
}

PowerSeries substitute(const BiPolynomial& g, const PowerSeries& x) {
  const int m = x.order();
  PowerSeries acc(m);
  for (int i = g.degree_x(); i >= 0; --i) {
    acc = acc * x + PowerSeries::from_polynomial(g.coeff(i), m);
  }
  return acc;
}

PowerSeries ps_implicit_solve(const BiPolynomial& g, int order) {
  if (order < 0) throw DomainError("implicit solve: negative order");
  if (g.evaluate(0, 0) != 0) throw SeriesError("solver error: g(0,0) != 0");
  const auto gx = g.derivative_x();
  if (gx.evaluate(0, 0) == 0) throw SeriesError("solver error: degenerate Jacobian ∂g/∂x(0,0) = 0");
  auto x = newton_fixed_point(PowerSeries(order), [&](const PowerSeries& x) {
    return x - substitute(g, x) * ps_reciprocal(substitute(gx, x));
  }, "implicit solve");
  if (substitute(g, x) != PowerSeries(order)) throw SeriesError("solver error: residual does not vanish");
  return x;
}

}  // namespace freecum
