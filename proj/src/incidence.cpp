#include "freecum/incidence.hpp"

#include <array>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

constexpr int kTabulated = 64;

std::array<Rational, kTabulated + 1> tabulate_set_mobius() {
  // m_k = μ(0̂_k, 1̂_k) is fixed by Σ_{τ ∈ Π_k} μ(0̂_k, τ) = 0 for k ≥ 2,
  // with μ(0̂_k, τ) = ∏_B m_{|B|}. Grouping τ by the block holding element 1
  // gives T(r) = Σ_j C(r-1, j-1) m_j T(r-j) for that sum over Π_r.
  std::array<Rational, kTabulated + 1> m;
  std::array<Rational, kTabulated + 1> total;
  total[0] = 1;
  m[1] = 1;
  total[1] = 1;
  for (int k = 2; k <= kTabulated; ++k) {
    Rational partial = 0;
    for (int j = 1; j < k; ++j) partial += Rational(binomial(k - 1, j - 1)) * m[j] * total[k - j];
    m[k] = -partial;
    total[k] = partial + m[k];
  }
  return m;
}

// Builds every partition of {1..n} whose restriction to block b of `outer`
// is one of local[b] (each a partition of {1..|b|}).
std::vector<Partition> product_over_blocks(const Partition& outer, const std::vector<std::vector<Partition>>& local) {
  const auto blocks = outer.blocks();
  std::vector<Partition> out;
  std::vector<std::size_t> choice(blocks.size(), 0);
  for (const auto& options : local) {
    if (options.empty()) return out;
  }
  std::vector<int> labels(static_cast<std::size_t>(outer.size()));
  while (true) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& part = local[b][choice[b]];
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        labels[static_cast<std::size_t>(blocks[b][i] - 1)] = static_cast<int>(b) * 256 + part.rgs()[i];
      }
    }
    std::vector<int> relabel;
    std::vector<std::uint8_t> rgs;
    for (const int l : labels) {
      std::size_t idx = 0;
      while (idx < relabel.size() && relabel[idx] != l) ++idx;
      if (idx == relabel.size()) relabel.push_back(l);
      rgs.push_back(static_cast<std::uint8_t>(idx));
    }
    out.push_back(Partition::from_rgs(std::move(rgs)));

    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (++choice[b] < local[b].size()) break;
      choice[b] = 0;
      if (b == 0) return out;
    }
    if (blocks.empty()) return out;
  }
}

void require_member(const Partition& pi, Family lattice, const char* op) {
  if (lattice == Family::noncrossing && !is_noncrossing(pi)) {
    throw DomainError(std::string(op) + ": " + pi.to_string() + " is not noncrossing");
  }
}

}  // namespace

MultiplicativeFunction::MultiplicativeFunction(std::vector<Rational> characteristic)
    : values_(std::move(characteristic)) {}

MultiplicativeFunction MultiplicativeFunction::zeta(int order) {
  return MultiplicativeFunction(std::vector<Rational>(static_cast<std::size_t>(order), Rational(1)));
}

MultiplicativeFunction MultiplicativeFunction::mobius(int order) {
  std::vector<Rational> v;
  for (int k = 1; k <= order; ++k) v.push_back(nc_mobius_full(k));
  return MultiplicativeFunction(std::move(v));
}

MultiplicativeFunction MultiplicativeFunction::abs_mobius(int order) {
  std::vector<Rational> v;
  for (int k = 1; k <= order; ++k) v.push_back(Rational(catalan(static_cast<unsigned>(k - 1))));
  return MultiplicativeFunction(std::move(v));
}

MultiplicativeFunction MultiplicativeFunction::delta(int order) {
  std::vector<Rational> v(static_cast<std::size_t>(order), Rational(0));
  if (order > 0) v[0] = 1;
  return MultiplicativeFunction(std::move(v));
}

const Rational& MultiplicativeFunction::operator[](int n) const {
  if (n < 1 || n > order()) {
    throw OrderError("characteristic value f_" + std::to_string(n) + " requested, known to order " +
                     std::to_string(order()));
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

MultiplicativeFunction MultiplicativeFunction::without_singletons() const {
  auto copy = values_;
  if (!copy.empty()) copy[0] = 0;
  return MultiplicativeFunction(std::move(copy));
}

MultiplicativeFunction MultiplicativeFunction::scaled(const Rational& factor) const {
  auto copy = values_;
  for (auto& v : copy) v *= factor;
  return MultiplicativeFunction(std::move(copy));
}

MultiplicativeFunction MultiplicativeFunction::truncated(int order) const {
  if (order > this->order()) throw OrderError("cannot extend a characteristic sequence by truncation");
  return MultiplicativeFunction(std::vector<Rational>(values_.begin(), values_.begin() + order));
}

Rational mult_eval(const MultiplicativeFunction& f, const Partition& pi) {
  Rational result = 1;
  for (const int s : pi.block_sizes()) result *= f[s];
  return result;
}

Rational nc_mobius_full(int k) {
  if (k < 1) throw DomainError("Möbius value needs k >= 1");
  Rational c(catalan(static_cast<unsigned>(k - 1)));
  return k % 2 == 1 ? c : Rational(-c);
}

Rational set_mobius_full(int k) {
  static const auto table = tabulate_set_mobius();
  if (k < 1) throw DomainError("Möbius value needs k >= 1");
  if (k <= kTabulated) return table[static_cast<std::size_t>(k)];
  throw SizeLimitError("set Möbius value tabulated up to k=" + std::to_string(kTabulated));
}

Rational mobius_nc(const Partition& sigma, const Partition& pi) {
  require_member(sigma, Family::noncrossing, "mobius_nc");
  require_member(pi, Family::noncrossing, "mobius_nc");
  if (!refines(sigma, pi)) throw DomainError("mobius_nc: " + sigma.to_string() + " is not below " + pi.to_string());
  Rational result = 1;
  for (const auto& block : pi.blocks()) {
    const auto upper = kreweras(restrict_to(sigma, block));
    for (const int s : upper.block_sizes()) result *= nc_mobius_full(s);
  }
  return result;
}

Rational mobius_set(const Partition& sigma, const Partition& pi) {
  if (!refines(sigma, pi)) throw DomainError("mobius_set: " + sigma.to_string() + " is not below " + pi.to_string());
  Rational result = 1;
  for (const auto& block : pi.blocks()) result *= set_mobius_full(restrict_to(sigma, block).block_count());
  return result;
}

Rational mobius(const Partition& sigma, const Partition& pi, Family lattice) {
  return lattice == Family::noncrossing ? mobius_nc(sigma, pi) : mobius_set(sigma, pi);
}

std::vector<Partition> interval(const Partition& sigma, const Partition& pi, Family lattice) {
  require_member(sigma, lattice, "interval");
  require_member(pi, lattice, "interval");
  if (!refines(sigma, pi)) return {};
  // Within a block B of π, anything between σ|B and 1̂_B is a coarsening of
  // σ|B, i.e. a partition of σ|B's blocks. For NC each restriction must stay
  // noncrossing; π noncrossing makes that sufficient.
  std::vector<std::vector<Partition>> local;
  for (const auto& block : pi.blocks()) {
    const auto low = restrict_to(sigma, block);
    std::vector<Partition> options;
    const auto family = lattice == Family::noncrossing && low.is_finest() ? Family::noncrossing : Family::all;
    for_each_partition(low.block_count(), family, [&](const Partition& kappa) {
      std::vector<Block> merged(static_cast<std::size_t>(kappa.block_count()));
      for (int i = 0; i < low.size(); ++i) merged[kappa.rgs()[low.rgs()[i]]].push_back(i + 1);
      auto tau = Partition::from_blocks(low.size(), merged);
      if (lattice == Family::all || is_noncrossing(tau)) options.push_back(std::move(tau));
    }, kTabulated);
    local.push_back(std::move(options));
  }
  return product_over_blocks(pi, local);
}

std::vector<Partition> down_set(const Partition& pi, Family lattice) {
  return interval(Partition::finest(pi.size()), pi, lattice);
}

std::vector<Partition> up_set(const Partition& pi, Family lattice) {
  return interval(pi, Partition::coarsest(pi.size()), lattice);
}

MultiplicativeFunction convolve_nc(const MultiplicativeFunction& f, const MultiplicativeFunction& g, int order) {
  if (order < 1) throw DomainError("convolve_nc: order must be positive");
  if (f.order() < order || g.order() < order) {
    throw OrderError("convolve_nc: characteristics known to orders " + std::to_string(f.order()) + ", " +
                     std::to_string(g.order()) + " but order " + std::to_string(order) + " requested");
  }
  std::vector<Rational> out;
  for (int n = 1; n <= order; ++n) {
    Rational sum = 0;
    for_each_partition(n, Family::noncrossing, [&](const Partition& pi) {
      sum += mult_eval(f, pi) * mult_eval(g, kreweras(pi));
    });
    out.push_back(sum);
  }
  return MultiplicativeFunction(std::move(out));
}

}  // namespace freecum
