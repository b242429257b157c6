#include "freecum/bounds.hpp"

#include <cmath>
#include <numbers>

#include "freecum/errors.hpp"
#include "freecum/incidence.hpp"

namespace freecum {
namespace {

constexpr unsigned kSqrtDigits = 40;

void require_order(int max_n, int limit, const char* route) {
  if (max_n < 1) throw DomainError("sequence length must be positive");
  if (max_n > limit) {
    throw SizeLimitError(std::string(route) + " is limited to n ≤ " + std::to_string(limit));
  }
}

void require_parameter(int N) {
  if (N < 1) throw DomainError("the parameter N must be a positive integer");
}

bool without_singletons(const Partition& pi) { return !shape_predicates(pi).has_singleton; }

Rational abs_mobius_to_top(const Partition& pi) { return abs(mobius_nc(pi, Partition::coarsest(pi.size()))); }

std::vector<Rational> tail(const PowerSeries& s, int max_n) {
  return std::vector<Rational>(s.coeffs().begin() + 1, s.coeffs().begin() + 1 + max_n);
}

RealBounds bounds_of(const Rational& lo, const Rational& hi) {
  return {lo, hi, to_double(Rational((lo + hi) / 2))};
}

}  // namespace

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::a: return "a";
    case SequenceKind::atilde: return "atilde";
    case SequenceKind::b: return "b";
    case SequenceKind::btilde: return "btilde";
  }
  return "?";
}

SequenceKind parse_sequence_kind(const std::string& text) {
  if (text == "a") return SequenceKind::a;
  if (text == "atilde") return SequenceKind::atilde;
  if (text == "b") return SequenceKind::b;
  if (text == "btilde") return SequenceKind::btilde;
  throw ParseError("kind", "unknown sequence kind '" + text + "'");
}

std::vector<Rational> sequence_by_enumeration(SequenceKind kind, int max_n, int N) {
  require_order(max_n, kMaxEnumerationOrder, "enumeration");
  require_parameter(N);
  // b and b̃ weight each block by a or ã of its size, so those come first.
  const bool inner = kind == SequenceKind::b || kind == SequenceKind::btilde;
  const auto inner_values = inner ? sequence_by_enumeration(kind == SequenceKind::b ? SequenceKind::a
                                                                                    : SequenceKind::atilde,
                                                            max_n, 1)
                                  : std::vector<Rational>{};
  const MultiplicativeFunction weights(inner_values);
  std::vector<Rational> out;
  for (int n = 1; n <= max_n; ++n) {
    Rational total = 0;
    for_each_partition(n, Family::noncrossing, [&](const Partition& pi) {
      switch (kind) {
        case SequenceKind::a:
          total += abs_mobius_to_top(pi);
          break;
        case SequenceKind::atilde:
          if (without_singletons(pi)) total += abs_mobius_to_top(pi);
          break;
        case SequenceKind::b:
          if (without_singletons(pi)) total += pow(Rational(N), pi.block_count()) * mult_eval(weights, pi);
          break;
        case SequenceKind::btilde:
          total += pow(Rational(N), pi.block_count()) * mult_eval(weights, pi);
          break;
      }
    });
    out.push_back(total);
  }
  return out;
}

std::vector<Rational> sequence_by_series(SequenceKind kind, int max_n, int N) {
  require_order(max_n, kMaxSeriesOrder, "series route");
  require_parameter(N);
  const int m = max_n;
  const auto z = PowerSeries::identity(m);
  const auto one = PowerSeries::constant(1, m);
  switch (kind) {
    case SequenceKind::a: {
      const auto root = ps_sqrt(PowerSeries::from_polynomial(Polynomial({1, -6, 1}), m));
      return tail((one - z - root) * Rational(1, 2), max_n);
    }
    case SequenceKind::atilde:
      return tail(ps_implicit_solve(atilde_equation(), m), max_n);
    case SequenceKind::b: {
      const Rational n_(N);
      const auto root = ps_sqrt(PowerSeries::from_polynomial(Polynomial({1, -6, Rational(1 - 8 * N)}), m));
      const auto denominator = PowerSeries::constant(n_ + 2, m) + z * Rational(3 * N) + root * n_;
      return tail(ps_reciprocal(denominator) * Rational(2 * (N + 1)) - one, max_n);
    }
    case SequenceKind::btilde:
      return tail(ps_implicit_solve(btilde_equation(Rational(N)), m), max_n);
  }
  throw DomainError("unknown sequence kind");
}

SequenceReport sequence_report(SequenceKind kind, int max_n, int N) {
  SequenceReport report;
  report.kind = kind;
  report.N = (kind == SequenceKind::a || kind == SequenceKind::atilde) ? 1 : N;
  report.series = sequence_by_series(kind, max_n, N);
  const int enumerated = std::min(max_n, kMaxEnumerationOrder);
  report.enumeration = sequence_by_enumeration(kind, enumerated, N);
  for (int i = 0; i < enumerated; ++i) {
    if (report.enumeration[static_cast<std::size_t>(i)] != report.series[static_cast<std::size_t>(i)]) {
      report.match = false;
    }
  }
  return report;
}

BiPolynomial atilde_equation() {
  const auto y = BiPolynomial::x();
  const auto zz = BiPolynomial::z();
  const auto one = BiPolynomial::constant(1);
  return y * (one - y) * (one - y - zz) - zz * zz;
}

BiPolynomial btilde_equation(const Rational& N) {
  if (N <= 0) throw DomainError("the parameter N must be positive");
  const auto x = BiPolynomial::x();
  const auto zz = BiPolynomial::z();
  const auto one = BiPolynomial::constant(1);
  const auto s = x * Rational(1 / N);
  const auto shifted = x + one;
  return s * (one - s) * (one - s - zz * shifted) - zz * zz * shifted * shifted;
}

Polynomial quartic_factor(const Rational& N) {
  return Polynomial({-5, 8 - 2 * N, 32 + 26 * N - N * N, -4 + 16 * N + 10 * N * N, 4 * N * N * N - N * N});
}

Polynomial btilde_resultant(const Rational& N) {
  const auto g = btilde_equation(N);
  return resultant(g, g.derivative_x());
}

RealBounds khinchin_constant(int N) {
  if (N < 2) throw DomainError("the Khinchin constant 2N/(√N - 1) needs N ≥ 2");
  const auto s = sqrt_bounds(Integer(N), kSqrtDigits);
  const Rational numerator(2 * N);
  return bounds_of(numerator / (s.hi - 1), numerator / (s.lo - 1));
}

GrowthConstants growth_constants(int N) {
  require_parameter(N);
  GrowthConstants out;
  out.N = N;
  const auto roots = isolate_positive_roots(quartic_factor(Rational(N)), kRootWidth);
  if (roots.empty()) throw DomainError("the quartic factor has no positive root");
  out.z0 = {roots.front().lo, roots.front().hi, roots.front().approx};
  if (N >= 2) out.khinchin = khinchin_constant(N);

  // 1 - 6z + (1 - 8N) z²: discriminant 32(N + 1), positive root
  // (6 - √D) / (2(1 - 8N)), whose reciprocal is 2(8N - 1)/(√D - 6).
  const Rational a(1 - 8 * N);
  const Rational b(-6);
  const Integer discriminant = Integer(36) - 4 * Integer(1 - 8 * N);
  const auto s = sqrt_bounds(discriminant, kSqrtDigits);
  const Rational numerator = -2 * a;
  out.b_growth = bounds_of(numerator / (s.hi + b), numerator / (s.lo + b));

  if (N == 1) out.pisier = 3.0 * std::numbers::pi / (4.0 * out.z0.approx);
  return out;
}

NegativityReport negativity_check(int N, int grid) {
  if (N < 2) throw DomainError("negativity_check needs N ≥ 2");
  if (grid < 1) throw DomainError("negativity_check needs a positive grid size");
  NegativityReport report;
  report.N = N;
  // (1 - 1/√N)/(2√N) = (√N - 1)/(2N) increases with √N, so the upper
  // square-root bound gives an interval containing the exact one.
  const auto s = sqrt_bounds(Integer(N), kSqrtDigits);
  report.limit = (s.hi - 1) / (2 * N);

  const auto r = quartic_factor(Rational(N));
  const auto chain = sturm_chain(r);
  report.sturm_roots = (r.evaluate(0) == 0 ? 1 : 0) + sturm_count(chain, Rational(0), report.limit);
  for (int k = 0; k <= grid; ++k) {
    const Rational at = report.limit * k / grid;
    if (r.evaluate(at) >= 0) {
      report.grid_negative = false;
      report.grid_counterexample = at;
      break;
    }
  }
  report.certified = report.sturm_roots == 0 && report.grid_negative;

  const auto constants = growth_constants(N);
  report.z0 = constants.z0;
  report.khinchin = *constants.khinchin;
  report.khinchin_holds = 1 / report.z0.lo <= report.khinchin.lo;
  return report;
}

ElementaryBound elementary_bound(int j, int p, int N) {
  if (j < 1 || p < 1 || j > N || p > N) {
    throw DomainError("elementary_bound needs 1 ≤ j ≤ N and 1 ≤ p ≤ N");
  }
  Rational product = 1;
  for (int i = 0; i < p; ++i) product *= 1 - Rational(j) / (N - i);
  ElementaryBound out;
  out.lhs = 1 - product;
  out.rhs = Rational(p * j) / (N - p + 1);
  out.holds = out.lhs <= out.rhs;
  return out;
}

Rational IndexDistribution::total() const {
  Rational sum = 0;
  for (const auto& [h, w] : weights) sum += w;
  return sum;
}

namespace {

struct DeFinettiSetup {
  int p;
  int r;
  Partition rho_tilde;
};

DeFinettiSetup definetti_setup(const Partition& pi, const Partition& rho, int N) {
  if (pi.size() != rho.size()) throw DomainError("π and ρ must partition the same set");
  if (!is_noncrossing(rho)) throw DomainError("ρ must be noncrossing");
  if (!refines(pi, rho)) throw DomainError("ρ must lie above π");
  const int p = pi.block_count();
  if (N < p) throw DomainError("N must be at least the number of blocks of π");
  return {p, rho.block_count(), quotient(rho, pi)};
}

Rational injective_weight(int N, int p) { return Rational(1) / Rational(falling_factorial(N, static_cast<unsigned>(p))); }

Rational blockwise_weight(int N, const Partition& rho_tilde) {
  Rational w = 1;
  for (int size : rho_tilde.block_sizes()) w *= injective_weight(N, size);
  return w;
}

}  // namespace

DeFinettiDistributions psiN_distributions(const Partition& pi, const Partition& rho, int N) {
  const auto setup = definetti_setup(pi, rho, N);
  const int p = setup.p;
  long long tuples = 1;
  for (int i = 0; i < p; ++i) {
    tuples *= N;
    if (tuples > kMaxIndexTuples) throw SizeLimitError("index-function table exceeds the configured limit");
  }
  DeFinettiDistributions out;
  out.injective = {p, N, {}};
  out.blockwise = {p, N, {}};
  const Rational w1 = injective_weight(N, p);
  const Rational w2 = blockwise_weight(N, setup.rho_tilde);

  std::vector<int> h(static_cast<std::size_t>(p), 1);
  while (true) {
    bool injective = true;
    bool blockwise = true;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(j)]) continue;
        injective = false;
        if (setup.rho_tilde.same_block(i + 1, j + 1)) blockwise = false;
      }
    }
    if (injective) out.injective.weights.emplace(h, w1);
    if (blockwise) out.blockwise.weights.emplace(h, w2);
    int pos = p - 1;
    while (pos >= 0 && h[static_cast<std::size_t>(pos)] == N) h[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++h[static_cast<std::size_t>(pos)];
  }
  return out;
}

DeFinettiResult definetti_tv(const Partition& pi, const Partition& rho, int N) {
  const auto setup = definetti_setup(pi, rho, N);
  const int p = setup.p;
  const Rational w1 = injective_weight(N, p);
  const Rational w2 = blockwise_weight(N, setup.rho_tilde);
  DeFinettiResult out;
  out.p = p;
  out.r = setup.r;
  // Every h with kernel κ carries the same pair of weights, and there are
  // N(N-1)...(N-|κ|+1) of them.
  for_each_partition(p, Family::all, [&](const Partition& kappa) {
    const Rational v1 = kappa.is_finest() ? w1 : Rational(0);
    const Rational v2 = meet(kappa, setup.rho_tilde).is_finest() ? w2 : Rational(0);
    out.tv += Rational(falling_factorial(N, static_cast<unsigned>(kappa.block_count()))) * abs(Rational(v1 - v2));
  });
  out.bound = Rational((2 * setup.r - 1) * p * p) / (N - p + 1);
  out.holds = out.tv <= out.bound;
  return out;
}

}  // namespace freecum
