#pragma once

// Brute-force reference implementations used by the tests. None of these
// call into the library's algorithms; they work on plain block lists and
// follow the textbook definitions directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Blocks = std::vector<std::vector<int>>;  // sorted blocks, sorted by minimum

inline Blocks normalize(Blocks b) {
  for (auto& block : b) std::sort(block.begin(), block.end());
  std::sort(b.begin(), b.end());
  return b;
}

/// Every set partition of {1..n}, built by inserting each element into an
/// existing block or a new one.
inline std::vector<Blocks> set_partitions(int n) {
  std::vector<Blocks> out{{}};
  for (int e = 1; e <= n; ++e) {
    std::vector<Blocks> next;
    for (const auto& p : out) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].push_back(e);
        next.push_back(q);
      }
      auto q = p;
      q.push_back({e});
      next.push_back(q);
    }
    out = std::move(next);
  }
  for (auto& p : out) p = normalize(p);
  std::sort(out.begin(), out.end());
  return out;
}

/// No a < b < c < d with a, c in one block and b, d in another.
inline bool noncrossing(const Blocks& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      for (int a : p[x]) {
        for (int c : p[x]) {
          for (int b : p[y]) {
            for (int d : p[y]) {
              if (a < b && b < c && c < d) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

inline std::vector<Blocks> nc_partitions(int n) {
  std::vector<Blocks> out;
  for (auto& p : set_partitions(n)) {
    if (noncrossing(p)) out.push_back(p);
  }
  return out;
}

inline int block_index(const Blocks& p, int e) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::find(p[i].begin(), p[i].end(), e) != p[i].end()) return static_cast<int>(i);
  }
  return -1;
}

/// Every block of a lies inside one block of b.
inline bool finer(const Blocks& a, const Blocks& b) {
  for (const auto& block : a) {
    const int target = block_index(b, block.front());
    for (int e : block) {
      if (block_index(b, e) != target) return false;
    }
  }
  return true;
}

inline int element_count(const Blocks& p) {
  int n = 0;
  for (const auto& b : p) n += static_cast<int>(b.size());
  return n;
}

/// Nonempty pairwise intersections of blocks.
inline Blocks meet(const Blocks& a, const Blocks& b) {
  Blocks out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      std::vector<int> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      if (!common.empty()) out.push_back(common);
    }
  }
  return normalize(out);
}

/// Finest partition coarser than both, by repeated merging of overlapping blocks.
inline Blocks join(const Blocks& a, const Blocks& b) {
  std::vector<std::set<int>> groups;
  for (const auto& x : a) groups.emplace_back(x.begin(), x.end());
  for (const auto& x : b) groups.emplace_back(x.begin(), x.end());
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
        const bool overlap = std::any_of(groups[j].begin(), groups[j].end(),
                                         [&](int e) { return groups[i].count(e) > 0; });
        if (overlap) {
          groups[i].insert(groups[j].begin(), groups[j].end());
          groups.erase(groups.begin() + static_cast<long>(j));
          merged = true;
        }
      }
    }
  }
  Blocks out;
  for (const auto& g : groups) out.emplace_back(g.begin(), g.end());
  return normalize(out);
}

/// Möbius function of a finite poset from μ(x,x) = 1 and
/// μ(x,y) = -Σ_{x ≤ z < y} μ(x,z), memoized.
class PosetMobius {
 public:
  PosetMobius(std::vector<Blocks> elements, std::function<bool(const Blocks&, const Blocks&)> leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {}

  Q operator()(const Blocks& x, const Blocks& y) {
    if (!leq_(x, y)) return 0;
    if (x == y) return 1;
    const auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Q total = 0;
    for (const auto& z : elements_) {
      if (z != y && leq_(x, z) && leq_(z, y)) total += (*this)(x, z);
    }
    memo_[key] = -total;
    return -total;
  }

 private:
  std::vector<Blocks> elements_;
  std::function<bool(const Blocks&, const Blocks&)> leq_;
  std::map<std::pair<Blocks, Blocks>, Q> memo_;
};

/// Kreweras complement as the coarsest σ with π on the odd points and σ on
/// the even points of {1..2n} still noncrossing.
inline Blocks kreweras(const Blocks& pi) {
  const int n = element_count(pi);
  Blocks best;
  for (const auto& sigma : nc_partitions(n)) {
    Blocks both;
    for (const auto& b : pi) {
      std::vector<int> odd;
      for (int e : b) odd.push_back(2 * e - 1);
      both.push_back(odd);
    }
    for (const auto& b : sigma) {
      std::vector<int> even;
      for (int e : b) even.push_back(2 * e);
      both.push_back(even);
    }
    if (!noncrossing(both)) continue;
    if (best.empty() || sigma.size() < best.size()) best = sigma;
  }
  return best;
}

inline mpz_class bell(int n) {
  // Bell triangle.
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

inline mpz_class catalan(int n) {
  std::vector<mpz_class> c{1};
  for (int k = 1; k <= n; ++k) {
    mpz_class s = 0;
    for (int i = 0; i < k; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    c.push_back(s);
  }
  return c[static_cast<std::size_t>(n)];
}

/// Large Schröder numbers r_0, r_1, ... from
/// (k+2) r_{k+1} = 3(2k+1) r_k - (k-1) r_{k-1}.
inline std::vector<mpz_class> schroeder(int count) {
  std::vector<mpz_class> r{1, 2};
  for (int k = 1; static_cast<int>(r.size()) < count; ++k) {
    r.push_back((3 * (2 * k + 1) * r[static_cast<std::size_t>(k)] - (k - 1) * r[static_cast<std::size_t>(k - 1)]) / (k + 2));
  }
  r.resize(static_cast<std::size_t>(count));
  return r;
}

/// Coefficients c_0..c_m of a truncated series.
using Coeffs = std::vector<Q>;

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  const std::size_t m = std::min(a.size(), b.size());
  Coeffs out(m, Q(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Coeffs power(const Coeffs& a, int k) {
  Coeffs out(a.size(), Q(0));
  out[0] = 1;
  for (int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

inline Coeffs reciprocal(const Coeffs& a) {
  Coeffs r(a.size(), Q(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Q acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

/// Compositional inverse by Lagrange inversion:
/// [z^n] h = (1/n) [w^{n-1}] (w / f(w))^n.
inline Coeffs lagrange_inverse(const Coeffs& f) {
  const std::size_t m = f.size();
  Coeffs shifted(m, Q(0));  // f(w)/w
  for (std::size_t k = 1; k < m; ++k) shifted[k - 1] = f[k];
  const Coeffs ratio = reciprocal(shifted);  // w / f(w), valid to order m-2
  Coeffs h(m, Q(0));
  for (std::size_t n = 1; n < m; ++n) {
    h[n] = power(ratio, static_cast<int>(n))[n - 1] / Q(static_cast<long>(n));
  }
  return h;
}

/// Square root with constant term 1 by the coefficient recurrence.
inline Coeffs sqrt_series(const Coeffs& f) {
  Coeffs s(f.size(), Q(0));
  s[0] = 1;
  for (std::size_t n = 1; n < f.size(); ++n) {
    Q acc = f[n];
    for (std::size_t k = 1; k < n; ++k) acc -= s[k] * s[n - k];
    s[n] = acc / 2;
  }
  return s;
}

/// Resultant of two univariate polynomials (lowest degree first, no
/// trailing zeros) by the Euclidean remainder sequence.
inline Q euclid_resultant(Coeffs a, Coeffs b) {
  auto degree = [](const Coeffs& p) { return static_cast<int>(p.size()) - 1; };
  auto trim = [](Coeffs& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Q result = 1;
  while (degree(b) > 0) {
    // res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r), r = a mod b.
    Coeffs r = a;
    while (!r.empty() && degree(r) >= degree(b)) {
      const Q factor = r.back() / b.back();
      const int shift = degree(r) - degree(b);
      for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(shift)] -= factor * b[i];
      r.pop_back();
      trim(r);
    }
    if (r.empty()) return 0;
    if ((degree(a) * degree(b)) % 2 == 1) result = -result;
    for (int i = 0; i < degree(a) - degree(r); ++i) result *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
  // res(a, c) = c^{deg a} for a constant c.
  for (int i = 0; i < degree(a); ++i) result *= b.front();
  return result;
}

inline mpz_class falling(long n, int k) {
  mpz_class out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

/// Symmetrization of p labelled points as literal probability tables.
/// d1: a uniformly random injection [p] -> [N]. d2: independent uniformly
/// random injections on each group.
struct IndexTables {
  std::map<std::vector<int>, Q> d1;
  std::map<std::vector<int>, Q> d2;
};

inline void injections(int k, int N, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int v = 1; v <= N; ++v) {
    if (std::find(current.begin(), current.end(), v) != current.end()) continue;
    current.push_back(v);
    injections(k, N, current, out);
    current.pop_back();
  }
}

inline IndexTables symmetrizations(int p, const Blocks& groups, int N) {
  IndexTables t;
  std::vector<int> scratch;
  std::vector<std::vector<int>> all;
  injections(p, N, scratch, all);
  for (const auto& h : all) t.d1[h] += Q(1, static_cast<unsigned long>(all.size()));

  // Draw an injection per group; the product space is uniform.
  std::vector<std::vector<std::vector<int>>> per_group;
  for (const auto& g : groups) {
    std::vector<std::vector<int>> choices;
    scratch.clear();
    injections(static_cast<int>(g.size()), N, scratch, choices);
    per_group.push_back(choices);
  }
  std::size_t total = 1;
  for (const auto& c : per_group) total *= c.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> h(static_cast<std::size_t>(p), 0);
    std::size_t rest = code;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& pick = per_group[gi][rest % per_group[gi].size()];
      rest /= per_group[gi].size();
      for (std::size_t e = 0; e < groups[gi].size(); ++e) h[static_cast<std::size_t>(groups[gi][e] - 1)] = pick[e];
    }
    t.d2[h] += Q(1, static_cast<unsigned long>(total));
  }
  return t;
}

inline Q total_variation(const IndexTables& t) {
  std::set<std::vector<int>> keys;
  for (const auto& [h, w] : t.d1) keys.insert(h);
  for (const auto& [h, w] : t.d2) keys.insert(h);
  Q sum = 0;
  for (const auto& h : keys) {
    const Q a = t.d1.count(h) ? t.d1.at(h) : Q(0);
    const Q b = t.d2.count(h) ? t.d2.at(h) : Q(0);
    sum += abs(Q(a - b));
  }
  return sum;
}

/// Deterministic small rationals for fixtures.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Q rational(int range = 9) {
    const long num = static_cast<long>(engine_() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(range)) + 1;
    Q q(num, den);
    q.canonicalize();
    return q;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
