#pragma once

// Moment-cumulant transforms over Π_n and NC_n, the Leonov-Shiryaev product
// formula, reduction of cumulants to alternating partitions, and the formal
// Brillinger expansion of conditioned cumulants.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "freecum/formal_combo.hpp"
#include "freecum/incidence.hpp"
#include "freecum/partition.hpp"
#include "freecum/rational.hpp"

namespace freecum {

/// Values indexed by partitions: either an explicit table or, in sequence
/// mode, the multiplicative extension φ_π = ∏_B m_{|B|} of m_1, m_2, ...
class PartitionValues {
 public:
  PartitionValues() = default;
  static PartitionValues sequence(std::vector<Rational> values);
  static PartitionValues table(std::map<Partition, Rational> entries);

  bool is_sequence() const noexcept { return sequence_mode_; }
  /// Sequence mode only: m_1..m_k.
  const std::vector<Rational>& sequence_values() const noexcept { return sequence_; }
  const std::map<Partition, Rational>& entries() const noexcept { return entries_; }

  /// Throws MissingDataError when the value is not determined.
  Rational value(const Partition& pi) const;
  void set(const Partition& pi, const Rational& value);

 private:
  bool sequence_mode_ = false;
  std::vector<Rational> sequence_;
  std::map<Partition, Rational> entries_;
};

using MomentAssignment = PartitionValues;
using CumulantTable = PartitionValues;

/// Σ_{σ ≤ π, σ in lattice} lookup(σ) μ(σ, π).
template <class Value, class Lookup>
Value mobius_transform(const Partition& pi, Family lattice, Lookup&& lookup) {
  Value total{};
  for (const auto& sigma : down_set(pi, lattice)) total += lookup(sigma) * mobius(sigma, pi, lattice);
  return total;
}

/// Σ_{σ ≤ π, σ in lattice} lookup(σ).
template <class Value, class Lookup>
Value zeta_transform(const Partition& pi, Family lattice, Lookup&& lookup) {
  Value total{};
  for (const auto& sigma : down_set(pi, lattice)) total += lookup(sigma);
  return total;
}

Rational moments_to_cumulants(const MomentAssignment& moments, const Partition& pi, Family lattice);
Rational cumulants_to_moments(const CumulantTable& cumulants, const Partition& pi, Family lattice);

/// Transforms for every partition of {1..n} in the lattice.
CumulantTable cumulant_table(const MomentAssignment& moments, int n, Family lattice);
MomentAssignment moment_table(const CumulantTable& cumulants, int n, Family lattice);

// ---------------------------------------------------------------------------
// Formal identities over φ_τ symbols.

using PhiCombo = FormalCombo<Partition>;

/// K_π with the variables multiplied in consecutive groups of the given
/// sizes, expanded into fine φ_τ symbols via φ_σ(products) = φ_{σ̃}(fine).
PhiCombo grouped_cumulant_expansion(const Partition& pi, std::span<const int> sizes);

struct ProductFormulaSides {
  PhiCombo lhs;
  PhiCombo rhs;
  /// The σ ∈ Π_n with σ ∨ 0̃ = π̃ contributing to the right-hand side.
  std::vector<Partition> summands;
};

/// Both sides of the Leonov-Shiryaev formula as combinations of φ_τ.
ProductFormulaSides product_formula_sides(const Partition& pi, std::span<const int> sizes);

/// A cumulant K_τ evaluated on variables grouped into consecutive products
/// of the given sizes.
struct GroupedCumulant {
  Partition partition;
  std::vector<int> sizes;

  friend bool operator==(const GroupedCumulant&, const GroupedCumulant&) = default;
  friend std::strong_ordering operator<=>(const GroupedCumulant& a, const GroupedCumulant& b) {
    if (auto c = a.partition <=> b.partition; c != 0) return c;
    return a.sizes <=> b.sizes;
  }
};
using CumulantCombo = FormalCombo<GroupedCumulant>;

/// One rewrite K_π = K_π̂(..., X_k X_{k+1}, ...) - Σ_ρ K_ρ.
struct ReductionStep {
  int k = 0;
  Partition merged;
  std::vector<Partition> corrections;
  int cn_before = 0;
  int cn_merged = 0;
  int cn_corrections_max = -1;
  /// cn(π̂) = cn(π) - 1 and cn(ρ) ≤ cn(π) - 1 for every correction.
  bool certified = false;
};

/// Throws DomainError unless k ∼_π k+1.
ReductionStep alternating_reduction(const Partition& pi, int k);

/// Repeats the rewrite at the smallest connected k until every term has an
/// alternating partition.
CumulantCombo reduce_to_alternating(const Partition& pi);

PhiCombo expand_cumulants(const CumulantCombo& combo);

// ---------------------------------------------------------------------------
// Brillinger formula. u[ρ, τ] (τ ≤ ρ) stands for φ_ρ∘ψ_τ; φ_π is u[π, π].

struct IntervalKey {
  Partition upper;
  Partition lower;

  friend bool operator==(const IntervalKey&, const IntervalKey&) = default;
  friend std::strong_ordering operator<=>(const IntervalKey& a, const IntervalKey& b) {
    if (auto c = a.upper <=> b.upper; c != 0) return c;
    return a.lower <=> b.lower;
  }
};
using UCombo = FormalCombo<IntervalKey>;

std::string to_string(const IntervalKey& key);

enum class BrillingerKind {
  conditioned_moment,      // φ_σ∘C^ψ_π
  cumulant_of_cumulants,   // C^φ_σ∘C^ψ_π
  total_cumulant,          // C^φ_n
};

/// φ_σ∘C^ψ_π = Σ_{τ ≤ π} u[σ, τ] μ(τ, π); requires π ≤ σ.
UCombo conditioned_moment(const Partition& sigma, const Partition& pi, Family lattice);
/// C^φ_σ∘C^ψ_π = Σ_{τ ≤ π} Σ_{π ≤ ρ ≤ σ} u[ρ, τ] μ(ρ, σ) μ(τ, π); requires π ≤ σ.
UCombo cumulant_of_cumulants(const Partition& sigma, const Partition& pi, Family lattice);
/// C^φ_n = Σ_π u[π, π] μ(π, 1̂_n).
UCombo total_cumulant(int n, Family lattice);

/// Dispatches on kind; args holds (σ, π) for the first two kinds and is
/// empty for the total cumulant.
UCombo brillinger_expand(BrillingerKind kind, std::span<const Partition> args, int n, Family lattice);

struct BrillingerReport {
  int n = 0;
  Family lattice = Family::noncrossing;
  /// C^φ_n - Σ_σ C^φ_n∘C^ψ_σ; empty when the identity holds.
  UCombo difference;
  std::size_t telescoping_checked = 0;
  std::size_t telescoping_failures = 0;
  std::size_t interval_sums_checked = 0;
  std::size_t interval_sum_failures = 0;

  bool passed() const {
    return difference.is_zero() && telescoping_failures == 0 && interval_sum_failures == 0;
  }
};

inline constexpr int kBrillingerMaxNoncrossing = 6;
inline constexpr int kBrillingerMaxSet = 5;

/// Verifies the expansion and its intermediate identities exhaustively.
/// Throws SizeLimitError past the ceilings above.
BrillingerReport brillinger_check(int n, Family lattice);

}  // namespace freecum
