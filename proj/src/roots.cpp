#include <algorithm>

#include "freecum/errors.hpp"
#include "freecum/polynomial.hpp"

namespace freecum {
namespace {

int sign_of(const Rational& v) { return sgn(v); }

Polynomial square_free_part(const Polynomial& p) {
  const auto g = gcd(p, p.derivative());
  return g.degree() <= 0 ? p : exact_divide(p, g);
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& at) {
  int changes = 0;
  int previous = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q.evaluate(at));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

void isolate(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi, const Rational& width,
             std::vector<RootInterval>& out) {
  const int count = sturm_count(chain, lo, hi);
  if (count == 0) return;
  if (count > 1) {
    const Rational mid = (lo + hi) / 2;
    isolate(chain, lo, mid, width, out);
    isolate(chain, mid, hi, width, out);
    return;
  }
  const auto& p = chain.front();
  Rational a = lo;
  Rational b = hi;
  if (p.evaluate(b) == 0) {
    a = b;
  } else {
    while (b - a > width) {
      const Rational mid = (a + b) / 2;
      if (p.evaluate(mid) == 0) {
        a = b = mid;
        break;
      }
      if (sturm_count(chain, a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
  }
  out.push_back({a, b, to_double(Rational((a + b) / 2)), false});
}

}  // namespace

// The chain is built on the square-free part, so sign-change counts are
// right-continuous at roots and count distinct roots in (a, b].
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<Polynomial> chain{square_free_part(p)};
  if (chain.front().degree() < 1) return chain;
  chain.push_back(chain.front().derivative());
  while (true) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sturm_count(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  if (b < a) throw DomainError("sturm_count: empty interval");
  return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RootInterval> isolate_positive_roots(const Polynomial& r, const Rational& width) {
  if (r.is_zero()) throw DomainError("isolate_positive_roots: zero polynomial");
  if (width <= 0) throw DomainError("isolate_positive_roots: width must be positive");
  std::vector<RootInterval> out;
  if (r.degree() < 1) return out;
  const auto chain = sturm_chain(r);
  const auto& p = chain.front();
  Rational bound = 0;
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, abs(Rational(p.coeff(k) / p.leading())));
  bound += 1;
  isolate(chain, Rational(0), bound, width, out);
  if (!out.empty()) out.front().dominant = true;
  return out;
}

}  // namespace freecum
