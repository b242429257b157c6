#pragma once

// Möbius and zeta functions on Π_n and NC_n, multiplicative functions given
// by characteristic sequences, and the convolution of the reduced incidence
// algebra of NC.

#include <span>
#include <vector>

#include "freecum/partition.hpp"
#include "freecum/rational.hpp"

namespace freecum {

/// A multiplicative function on NC intervals, known through the finite
/// prefix f_1..f_M of its characteristic sequence.
class MultiplicativeFunction {
 public:
  MultiplicativeFunction() = default;
  /// characteristic[0] is f_1.
  explicit MultiplicativeFunction(std::vector<Rational> characteristic);

  static MultiplicativeFunction zeta(int order);
  /// Signed Catalan numbers (-1)^{n-1} C_{n-1}.
  static MultiplicativeFunction mobius(int order);
  static MultiplicativeFunction abs_mobius(int order);
  /// The unit: 1, 0, 0, ...
  static MultiplicativeFunction delta(int order);

  int order() const noexcept { return static_cast<int>(values_.size()); }

  /// f_n, 1-based. Throws OrderError past the known prefix.
  const Rational& operator[](int n) const;
  std::span<const Rational> characteristic() const noexcept { return values_; }

  /// Same sequence with f_1 replaced by 0 (the "no singletons" variant).
  MultiplicativeFunction without_singletons() const;
  MultiplicativeFunction scaled(const Rational& factor) const;
  MultiplicativeFunction truncated(int order) const;

  friend bool operator==(const MultiplicativeFunction&, const MultiplicativeFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// f_π = ∏ over blocks b of f_{|b|}.
Rational mult_eval(const MultiplicativeFunction& f, const Partition& pi);

/// μ_k = (-1)^{k-1} C_{k-1}, the NC Möbius value on [0̂_k, 1̂_k].
Rational nc_mobius_full(int k);

/// Π Möbius value on [0̂_k, 1̂_k], obtained from the defining recursion.
Rational set_mobius_full(int k);

/// Möbius function of NC_n on [σ, π]. The interval splits over the blocks
/// of π into upper intervals [σ|B, 1̂_B], and each of those is isomorphic to
/// [0̂, K(σ|B)] whose factors are read off the block sizes.
Rational mobius_nc(const Partition& sigma, const Partition& pi);

/// Möbius function of Π_n on [σ, π].
Rational mobius_set(const Partition& sigma, const Partition& pi);

Rational mobius(const Partition& sigma, const Partition& pi, Family lattice);

/// All σ ≤ π within the family (π itself must belong to it).
std::vector<Partition> down_set(const Partition& pi, Family lattice);
/// All τ ≥ π within the family.
std::vector<Partition> up_set(const Partition& pi, Family lattice);
/// All τ with σ ≤ τ ≤ π within the family.
std::vector<Partition> interval(const Partition& sigma, const Partition& pi, Family lattice);

/// Characteristic sequence of f ⊠ g to order M by direct lattice summation
/// Σ_{π ∈ NC_n} f_π g_{K(π)}.
MultiplicativeFunction convolve_nc(const MultiplicativeFunction& f, const MultiplicativeFunction& g, int order);

}  // namespace freecum
