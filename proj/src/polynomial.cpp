#include "freecum/polynomial.hpp"

#include <algorithm>

#include "freecum/errors.hpp"

namespace freecum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1 && k > 0;
    if (!unit) out += freecum::to_string(magnitude);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------

BiPolynomial::BiPolynomial(std::vector<Polynomial> x_coeffs) : coeffs_(std::move(x_coeffs)) { trim(); }

BiPolynomial BiPolynomial::x() { return BiPolynomial({Polynomial(), Polynomial::constant(1)}); }
BiPolynomial BiPolynomial::z() { return BiPolynomial({Polynomial::monomial(1, 1)}); }
BiPolynomial BiPolynomial::constant(const Rational& c) { return BiPolynomial({Polynomial::constant(c)}); }
BiPolynomial BiPolynomial::from_z(const Polynomial& p) { return BiPolynomial({p}); }

void BiPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial BiPolynomial::coeff(int i) const {
  if (i < 0 || i > degree_x()) return Polynomial();
  return coeffs_[static_cast<std::size_t>(i)];
}

BiPolynomial BiPolynomial::derivative_x() const {
  std::vector<Polynomial> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return BiPolynomial(std::move(d));
}

BiPolynomial BiPolynomial::derivative_z() const {
  std::vector<Polynomial> d;
  for (const auto& c : coeffs_) d.push_back(c.derivative());
  return BiPolynomial(std::move(d));
}

Rational BiPolynomial::evaluate(const Rational& x, const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->evaluate(z);
  return acc;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const BiPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Polynomial> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  trim();
  return *this;
}

Polynomial resultant(const BiPolynomial& p, const BiPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial");
  const int m = p.degree_x();
  const int n = q.degree_x();
  if (m == 0 && n == 0) throw DomainError("resultant needs a polynomial of positive degree in x");
  const int size = m + n;
  std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(size), std::vector<Polynomial>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) a[row][row + k] = p.coeff(m - k);
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) a[n + row][row + k] = q.coeff(n - k);
  }

  Rational sign = 1;
  Polynomial previous = Polynomial::constant(1);
  for (int k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = k + 1;
      while (pivot < size && a[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return Polynomial();
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
      }
      a[i][k] = Polynomial();
    }
    previous = a[k][k];
  }
  return a[size - 1][size - 1] * sign;
}

}  // namespace freecum
