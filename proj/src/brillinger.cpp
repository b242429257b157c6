#include <cstdint>
#include <unordered_map>

#include "freecum/cumulants.hpp"
#include "freecum/errors.hpp"

namespace freecum {
namespace {

void require_chain(const Partition& sigma, const Partition& pi, Family lattice) {
  if (sigma.size() != pi.size()) throw DomainError("partitions of different ground sets");
  if (lattice == Family::noncrossing && (!is_noncrossing(sigma) || !is_noncrossing(pi))) {
    throw DomainError("arguments must be noncrossing");
  }
  if (!refines(pi, sigma)) throw DomainError(pi.to_string() + " is not below " + sigma.to_string());
}

// The lattice with elements numbered, the order relation as a matrix and
// Möbius values on comparable pairs. u[ρ, τ] is keyed by the index pair.
class IndexedLattice {
 public:
  IndexedLattice(int n, Family lattice) : elements_(enumerate_partitions(n, lattice)) {
    const std::size_t size = elements_.size();
    for (std::size_t i = 0; i < size; ++i) index_.emplace(elements_[i], i);
    leq_.assign(size * size, false);
    mu_.assign(size * size, Rational(0));
    below_.resize(size);
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t i = 0; i < size; ++i) {
        if (!refines(elements_[i], elements_[j])) continue;
        leq_[i * size + j] = true;
        mu_[i * size + j] = mobius(elements_[i], elements_[j], lattice);
        below_[j].push_back(i);
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  const Partition& at(std::size_t i) const { return elements_[i]; }
  std::size_t index(const Partition& p) const { return index_.at(p); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  const Rational& mu(std::size_t i, std::size_t j) const { return mu_[i * size() + j]; }
  const std::vector<std::size_t>& below(std::size_t j) const { return below_[j]; }
  std::size_t top() const { return size() - 1; }

 private:
  std::vector<Partition> elements_;
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<bool> leq_;
  std::vector<Rational> mu_;
  std::vector<std::vector<std::size_t>> below_;
};

using Key = std::uint64_t;
using Terms = std::unordered_map<Key, Rational>;

Key key(std::size_t upper, std::size_t lower) { return (static_cast<Key>(upper) << 32) | lower; }

void accumulate(Terms& into, Key k, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = into.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) into.erase(it);
  }
}

void accumulate(Terms& into, const Terms& from, const Rational& scale = Rational(1)) {
  for (const auto& [k, v] : from) accumulate(into, k, v * scale);
}

Terms e1_terms(const IndexedLattice& L, std::size_t sigma, std::size_t pi) {
  Terms out;
  for (std::size_t tau : L.below(pi)) accumulate(out, key(sigma, tau), L.mu(tau, pi));
  return out;
}

Terms e2_terms(const IndexedLattice& L, std::size_t sigma, std::size_t pi) {
  Terms out;
  for (std::size_t rho : L.below(sigma)) {
    if (!L.leq(pi, rho)) continue;
    const Rational& outer = L.mu(rho, sigma);
    for (std::size_t tau : L.below(pi)) accumulate(out, key(rho, tau), outer * L.mu(tau, pi));
  }
  return out;
}

Terms cphi_terms(const IndexedLattice& L) {
  Terms out;
  for (std::size_t pi = 0; pi < L.size(); ++pi) accumulate(out, key(pi, pi), L.mu(pi, L.top()));
  return out;
}

UCombo to_combo(const IndexedLattice& L, const Terms& terms) {
  UCombo out;
  for (const auto& [k, v] : terms) {
    out.add({L.at(static_cast<std::size_t>(k >> 32)), L.at(static_cast<std::size_t>(k & 0xffffffffu))}, v);
  }
  return out;
}

}  // namespace

std::string to_string(const IntervalKey& key) {
  return "u[" + key.upper.to_string() + ";" + key.lower.to_string() + "]";
}

UCombo conditioned_moment(const Partition& sigma, const Partition& pi, Family lattice) {
  require_chain(sigma, pi, lattice);
  UCombo out;
  for (const auto& tau : down_set(pi, lattice)) out.add({sigma, tau}, mobius(tau, pi, lattice));
  return out;
}

UCombo cumulant_of_cumulants(const Partition& sigma, const Partition& pi, Family lattice) {
  require_chain(sigma, pi, lattice);
  const auto lower = down_set(pi, lattice);
  UCombo out;
  for (const auto& rho : interval(pi, sigma, lattice)) {
    const Rational outer = mobius(rho, sigma, lattice);
    for (const auto& tau : lower) out.add({rho, tau}, outer * mobius(tau, pi, lattice));
  }
  return out;
}

UCombo total_cumulant(int n, Family lattice) {
  const auto top = Partition::coarsest(n);
  UCombo out;
  for_each_partition(n, lattice, [&](const Partition& pi) { out.add({pi, pi}, mobius(pi, top, lattice)); });
  return out;
}

UCombo brillinger_expand(BrillingerKind kind, std::span<const Partition> args, int n, Family lattice) {
  if (kind == BrillingerKind::total_cumulant) {
    if (!args.empty()) throw DomainError("the total cumulant takes no partition arguments");
    return total_cumulant(n, lattice);
  }
  if (args.size() != 2) throw DomainError("expected the two partitions (σ, π)");
  if (args[0].size() != n) throw DomainError("partitions must be of {1.." + std::to_string(n) + "}");
  return kind == BrillingerKind::conditioned_moment ? conditioned_moment(args[0], args[1], lattice)
                                                    : cumulant_of_cumulants(args[0], args[1], lattice);
}

BrillingerReport brillinger_check(int n, Family lattice) {
  const int limit = lattice == Family::noncrossing ? kBrillingerMaxNoncrossing : kBrillingerMaxSet;
  if (n < 1) throw DomainError("brillinger_check needs n ≥ 1");
  if (n > limit) {
    throw SizeLimitError("brillinger_check is limited to n ≤ " + std::to_string(limit) + " on this lattice");
  }
  const IndexedLattice L(n, lattice);
  BrillingerReport report;
  report.n = n;
  report.lattice = lattice;

  Terms difference = cphi_terms(L);
  for (std::size_t sigma = 0; sigma < L.size(); ++sigma) {
    accumulate(difference, e2_terms(L, L.top(), sigma), Rational(-1));
  }
  report.difference = to_combo(L, difference);

  for (std::size_t pi = 0; pi < L.size(); ++pi) {
    Terms sum;
    for (std::size_t sigma : L.below(pi)) accumulate(sum, e1_terms(L, pi, sigma));
    ++report.telescoping_checked;
    if (sum.size() != 1 || !sum.contains(key(pi, pi)) || sum.at(key(pi, pi)) != 1) ++report.telescoping_failures;
  }

  // E1(σ, π) = Σ_{π ≤ ρ ≤ σ} E2(ρ, π), with E2(ρ, π) computed once per pair.
  std::unordered_map<Key, Terms> e2_cache;
  for (std::size_t sigma = 0; sigma < L.size(); ++sigma) {
    for (std::size_t pi : L.below(sigma)) {
      Terms sum = e1_terms(L, sigma, pi);
      for (std::size_t rho : L.below(sigma)) {
        if (!L.leq(pi, rho)) continue;
        auto [it, inserted] = e2_cache.try_emplace(key(rho, pi));
        if (inserted) it->second = e2_terms(L, rho, pi);
        accumulate(sum, it->second, Rational(-1));
      }
      ++report.interval_sums_checked;
      if (!sum.empty()) ++report.interval_sum_failures;
    }
  }
  return report;
}

}  // namespace freecum
