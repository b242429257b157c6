#include "freecum/cumulants.hpp"

#include <algorithm>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

void require_in_lattice(const Partition& pi, Family lattice) {
  if (lattice == Family::noncrossing && !is_noncrossing(pi)) {
    throw DomainError("partition " + pi.to_string() + " is not noncrossing");
  }
}

int connected_neighbours(const Partition& pi) { return shape_predicates(pi).connected_neighbours; }

Partition pair_partition(int n, int k) {
  std::vector<Block> blocks{{k, k + 1}};
  for (int i = 1; i <= n; ++i) {
    if (i != k && i != k + 1) blocks.push_back({i});
  }
  return Partition::from_blocks(n, blocks);
}

void check_sizes(const Partition& pi, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != pi.size()) {
    throw DomainError("grouping needs one size per element");
  }
  for (int s : sizes) {
    if (s < 1) throw DomainError("group sizes must be positive");
  }
}

}  // namespace

PartitionValues PartitionValues::sequence(std::vector<Rational> values) {
  PartitionValues v;
  v.sequence_mode_ = true;
  v.sequence_ = std::move(values);
  return v;
}

PartitionValues PartitionValues::table(std::map<Partition, Rational> entries) {
  PartitionValues v;
  v.entries_ = std::move(entries);
  return v;
}

Rational PartitionValues::value(const Partition& pi) const {
  if (sequence_mode_) {
    Rational product = 1;
    for (int size : pi.block_sizes()) {
      if (size > static_cast<int>(sequence_.size())) {
        throw MissingDataError("no value of order " + std::to_string(size) + " (needed by " + pi.to_string() + ")");
      }
      product *= sequence_[static_cast<std::size_t>(size - 1)];
    }
    return product;
  }
  const auto it = entries_.find(pi);
  if (it == entries_.end()) throw MissingDataError("no value for partition " + pi.to_string());
  return it->second;
}

void PartitionValues::set(const Partition& pi, const Rational& value) {
  if (sequence_mode_) throw DomainError("cannot set individual entries of a sequence assignment");
  entries_[pi] = value;
}

Rational moments_to_cumulants(const MomentAssignment& moments, const Partition& pi, Family lattice) {
  require_in_lattice(pi, lattice);
  return mobius_transform<Rational>(pi, lattice, [&](const Partition& s) { return moments.value(s); });
}

Rational cumulants_to_moments(const CumulantTable& cumulants, const Partition& pi, Family lattice) {
  require_in_lattice(pi, lattice);
  return zeta_transform<Rational>(pi, lattice, [&](const Partition& s) { return cumulants.value(s); });
}

CumulantTable cumulant_table(const MomentAssignment& moments, int n, Family lattice) {
  auto out = CumulantTable::table({});
  for_each_partition(n, lattice, [&](const Partition& pi) { out.set(pi, moments_to_cumulants(moments, pi, lattice)); });
  return out;
}

MomentAssignment moment_table(const CumulantTable& cumulants, int n, Family lattice) {
  auto out = MomentAssignment::table({});
  for_each_partition(n, lattice, [&](const Partition& pi) { out.set(pi, cumulants_to_moments(cumulants, pi, lattice)); });
  return out;
}

PhiCombo grouped_cumulant_expansion(const Partition& pi, std::span<const int> sizes) {
  check_sizes(pi, sizes);
  PhiCombo out;
  for (const auto& sigma : down_set(pi, Family::all)) {
    out.add(induced_grouping(sigma, sizes), mobius_set(sigma, pi));
  }
  return out;
}

ProductFormulaSides product_formula_sides(const Partition& pi, std::span<const int> sizes) {
  check_sizes(pi, sizes);
  ProductFormulaSides out;
  out.lhs = grouped_cumulant_expansion(pi, sizes);
  const auto target = induced_grouping(pi, sizes);
  const auto fine_floor = induced_grouping(Partition::finest(pi.size()), sizes);
  const std::vector<int> ones(static_cast<std::size_t>(target.size()), 1);
  for_each_partition(target.size(), Family::all, [&](const Partition& sigma) {
    if (join(sigma, fine_floor) != target) return;
    out.summands.push_back(sigma);
    out.rhs += grouped_cumulant_expansion(sigma, ones);
  });
  return out;
}

ReductionStep alternating_reduction(const Partition& pi, int k) {
  const int n = pi.size();
  if (k < 1 || k >= n || !pi.same_block(k, k + 1)) {
    throw DomainError("alternating_reduction: " + std::to_string(k) + " and " + std::to_string(k + 1) +
                      " are not in a common block of " + pi.to_string());
  }
  ReductionStep step;
  step.k = k;
  step.merged = merge_neighbours(pi, k);
  step.cn_before = connected_neighbours(pi);
  step.cn_merged = connected_neighbours(step.merged);
  const auto nu = pair_partition(n, k);
  for (const auto& rho : down_set(pi, Family::all)) {
    if (rho == pi || join(rho, nu) != pi) continue;
    step.corrections.push_back(rho);
    step.cn_corrections_max = std::max(step.cn_corrections_max, connected_neighbours(rho));
  }
  step.certified = step.cn_merged == step.cn_before - 1 && step.cn_corrections_max <= step.cn_before - 1;
  return step;
}

CumulantCombo reduce_to_alternating(const Partition& pi) {
  CumulantCombo done;
  CumulantCombo work;
  work.add({pi, std::vector<int>(static_cast<std::size_t>(pi.size()), 1)}, Rational(1));
  while (!work.is_zero()) {
    // Largest connected-neighbour count first, so terms meeting again from
    // different branches are merged before they are rewritten.
    auto it = std::max_element(work.terms().begin(), work.terms().end(), [](const auto& a, const auto& b) {
      return connected_neighbours(a.first.partition) < connected_neighbours(b.first.partition);
    });
    const GroupedCumulant term = it->first;
    const Rational coefficient = it->second;
    work.add(term, Rational(-coefficient));

    const auto shape = shape_predicates(term.partition);
    if (shape.alternating) {
      done.add(term, coefficient);
      continue;
    }
    int k = 1;
    while (!term.partition.same_block(k, k + 1)) ++k;
    const auto step = alternating_reduction(term.partition, k);
    if (!step.certified) throw DomainError("reduction step failed to lower cn for " + term.partition.to_string());

    std::vector<int> merged_sizes = term.sizes;
    merged_sizes[static_cast<std::size_t>(k - 1)] += merged_sizes[static_cast<std::size_t>(k)];
    merged_sizes.erase(merged_sizes.begin() + k);
    work.add({step.merged, merged_sizes}, coefficient);
    for (const auto& rho : step.corrections) work.add({rho, term.sizes}, Rational(-coefficient));
  }
  return done;
}

PhiCombo expand_cumulants(const CumulantCombo& combo) {
  PhiCombo out;
  for (const auto& [term, coefficient] : combo.terms()) {
    out += grouped_cumulant_expansion(term.partition, term.sizes) * coefficient;
  }
  return out;
}

}  // namespace freecum
