#pragma once

// The counting sequences behind the Khinchin estimates, their growth
// constants, the elementary product bound and the exact de Finetti
// symmetrization distributions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freecum/partition.hpp"
#include "freecum/polynomial.hpp"
#include "freecum/rational.hpp"
#include "freecum/series.hpp"

namespace freecum {

enum class SequenceKind { a, atilde, b, btilde };

std::string to_string(SequenceKind kind);
/// Throws ParseError for anything but a, atilde, b, btilde.
SequenceKind parse_sequence_kind(const std::string& text);

inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kMaxSeriesOrder = 64;

/// Values for n = 1..max_n by direct summation over NC_n. N is ignored for
/// a and ã. Throws SizeLimitError past kMaxEnumerationOrder.
std::vector<Rational> sequence_by_enumeration(SequenceKind kind, int max_n, int N);

/// Values for n = 1..max_n from generating functions. Throws
/// SizeLimitError past kMaxSeriesOrder.
std::vector<Rational> sequence_by_series(SequenceKind kind, int max_n, int N);

struct SequenceReport {
  SequenceKind kind = SequenceKind::a;
  int N = 1;
  std::vector<Rational> enumeration;  // empty when not computed
  std::vector<Rational> series;
  bool match = true;
};

/// Both routes, the enumeration only up to kMaxEnumerationOrder.
SequenceReport sequence_report(SequenceKind kind, int max_n, int N);

/// y(1 - y)(1 - y - z) - z² = 0, solved by the series of ã.
BiPolynomial atilde_equation();
/// g(x, z) = (x/N)(1 - x/N)(1 - x/N - z(x+1)) - z²(x+1)², solved by the
/// series of b̃.
BiPolynomial btilde_equation(const Rational& N);

/// The quartic factor r(z) of the discriminant of g with respect to x.
Polynomial quartic_factor(const Rational& N);
/// Res_x(g, ∂g/∂x) for the b̃ equation.
Polynomial btilde_resultant(const Rational& N);

/// A real number known by rational bounds (lo = hi when exact).
struct RealBounds {
  Rational lo;
  Rational hi;
  double approx = 0;
  bool exact() const { return lo == hi; }
};

struct GrowthConstants {
  int N = 1;
  RealBounds z0;
  std::optional<RealBounds> khinchin;  // absent for N = 1
  RealBounds b_growth;
  std::optional<double> pisier;        // N = 1 only
};

/// Width of the isolating interval for z0.
inline const Rational kRootWidth = Rational(1, Integer(1) << 100);

GrowthConstants growth_constants(int N);
/// 2√N / (1 - 1/√N) = 2N / (√N - 1). Throws DomainError for N < 2.
RealBounds khinchin_constant(int N);

struct NegativityReport {
  int N = 0;
  /// Rational upper bound for (1 - 1/√N)/(2√N); the checked interval is [0, limit].
  Rational limit;
  int sturm_roots = 0;
  bool grid_negative = true;
  std::optional<Rational> grid_counterexample;
  bool certified = false;
  RealBounds z0;
  RealBounds khinchin;
  /// 1/z0 ≤ khinchin, using the lower end of z0 and the lower bound of the constant.
  bool khinchin_holds = false;
};

/// Certifies by a Sturm count that r has no root on [0, limit], and checks
/// strict negativity on a grid of `grid` + 1 points. Throws DomainError for N < 2.
NegativityReport negativity_check(int N, int grid = 64);

struct ElementaryBound {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// 1 - ∏_{i<p}(1 - j/(N-i)) against pj/(N-p+1).
ElementaryBound elementary_bound(int j, int p, int N);

struct IndexDistribution {
  int p = 0;
  int N = 0;
  std::map<std::vector<int>, Rational> weights;  // values 1..N
  Rational total() const;
};

struct DeFinettiDistributions {
  IndexDistribution injective;   // d1
  IndexDistribution blockwise;   // d2
};

/// Explicit tables; feasible while N^p stays below this limit.
inline constexpr long long kMaxIndexTuples = 2'000'000;

/// Throws DomainError on violated preconditions and SizeLimitError when the
/// table would exceed kMaxIndexTuples.
DeFinettiDistributions psiN_distributions(const Partition& pi, const Partition& rho, int N);

struct DeFinettiResult {
  int p = 0;
  int r = 0;
  Rational tv;
  Rational bound;
  bool holds = false;
};

/// Σ_h |d1(h) - d2(h)| summed by kernel classes, against (2r-1)p²/(N-p+1).
DeFinettiResult definetti_tv(const Partition& pi, const Partition& rho, int N);

}  // namespace freecum
