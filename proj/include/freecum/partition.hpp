#pragma once

// Set partitions of {1..n} and the noncrossing sublattice.
//
// A Partition is stored as its restricted-growth string: rgs[i] is the
// 0-based index of the block containing element i+1, blocks numbered by
// first appearance. That string is the canonical form; equality, ordering
// and hashing all go through it. Elements are 1-based in the public API.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freecum {

using Block = std::vector<int>;

class Partition {
 public:
  /// The partition of the empty set.
  Partition() = default;
  /// Validates the restricted-growth condition; throws DomainError.
  static Partition from_rgs(std::vector<std::uint8_t> rgs);
  /// Blocks may come in any order and need not be sorted; they must be
  /// nonempty, disjoint and cover {1..n}.
  static Partition from_blocks(int n, const std::vector<Block>& blocks);
  /// Parses the text form "1,3|2|4" (any block order accepted).
  static Partition parse(std::string_view text);

  /// The finest partition 0̂_n (all singletons).
  static Partition finest(int n);
  /// The coarsest partition 1̂_n (one block).
  static Partition coarsest(int n);

  int size() const noexcept { return static_cast<int>(rgs_.size()); }
  int block_count() const noexcept { return blocks_; }

  /// 0-based index of the block holding `element` (1-based).
  int block_of(int element) const { return rgs_.at(static_cast<std::size_t>(element - 1)); }
  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

  std::span<const std::uint8_t> rgs() const noexcept { return rgs_; }

  /// Blocks ordered by minimum, each ascending.
  std::vector<Block> blocks() const;
  std::vector<int> block_sizes() const;

  bool is_finest() const noexcept { return blocks_ == size(); }
  bool is_coarsest() const noexcept { return blocks_ == 1; }

  /// Bit-exact text form, e.g. "1,3|2|4".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Orders by ground-set size, then lexicographically by rgs.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  friend class PartitionStream;
  explicit Partition(std::vector<std::uint8_t> rgs);

  std::vector<std::uint8_t> rgs_;
  int blocks_ = 0;
};

struct IndexFunction {
  std::vector<int> values;  // h(1), ..., h(n)
};

enum class Family { all, noncrossing };

/// Default enumeration ceiling (Bell(14) ~ 1.9e8).
inline constexpr int kDefaultMaxEnumeration = 14;

/// Deterministic stream of the partitions of {1..n}, lexicographic in the
/// restricted-growth string. Single consumer.
class PartitionStream {
 public:
  PartitionStream(int n, Family family, int max_n = kDefaultMaxEnumeration);

  std::optional<Partition> next();

 private:
  bool prefix_ok(std::size_t length) const;
  bool fill_from(std::size_t position);

  int n_;
  Family family_;
  std::vector<std::uint8_t> rgs_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n, Family family,
                                            int max_n = kDefaultMaxEnumeration);

void for_each_partition(int n, Family family, const std::function<void(const Partition&)>& visit,
                        int max_n = kDefaultMaxEnumeration);

bool is_noncrossing(const Partition& pi);

/// Refinement order: every block of `a` lies inside a block of `b`.
bool refines(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

struct MeetJoin {
  Partition meet;
  Partition join;
  bool leq;
};
MeetJoin lattice_meet_join(const Partition& a, const Partition& b);

Partition kernel(const IndexFunction& h);
/// The index function sending each element to its block number (1-based).
IndexFunction canonical_index(const Partition& pi);

/// Kreweras complement on {1̄..n̄}, relabeled 1..n. Throws DomainError for
/// crossing input.
Partition kreweras(const Partition& pi);

/// Partition of {1..2n}: `a` on odd positions 2i-1, `b` on even positions 2i.
Partition interweave(const Partition& a, const Partition& b);

/// Identifies k and k+1 and relabels down to a partition of {1..n-1}.
Partition merge_neighbours(const Partition& pi, int k);

/// Replaces element i by an interval of length sizes[i-1]; block B of `pi`
/// becomes the union of the intervals of its elements.
Partition induced_grouping(const Partition& pi, std::span<const int> sizes);

/// Restriction of `pi` to `subset` (ascending), relabeled to {1..|subset|}.
Partition restrict_to(const Partition& pi, std::span<const int> subset);

/// Partition of the blocks of `fine` (numbered 1..|fine| by canonical order)
/// induced by `coarse`. Requires refines(fine, coarse).
Partition quotient(const Partition& coarse, const Partition& fine);

struct ShapeInfo {
  int connected_neighbours = 0;
  bool alternating = true;
  std::vector<int> singletons;
  bool has_singleton = false;
};
ShapeInfo shape_predicates(const Partition& pi);

/// profile[p] = number of blocks of size p; index 0 unused, length n+1.
std::vector<int> block_size_profile(const Partition& pi);

}  // namespace freecum

template <>
struct std::hash<freecum::Partition> {
  std::size_t operator()(const freecum::Partition& p) const noexcept;
};
