#include "freecum/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "freecum/errors.hpp"

namespace freecum {
namespace {

constexpr int kMaxGroundSet = 255;

template <class Labels>
std::vector<std::uint8_t> canonical_labels(const Labels& labels) {
  std::unordered_map<long long, std::uint8_t> relabel;
  std::vector<std::uint8_t> rgs;
  rgs.reserve(labels.size());
  for (const auto label : labels) {
    const auto key = static_cast<long long>(label);
    auto it = relabel.find(key);
    if (it == relabel.end()) {
      it = relabel.emplace(key, static_cast<std::uint8_t>(relabel.size())).first;
    }
    rgs.push_back(it->second);
  }
  return rgs;
}

// Stack discipline: an element that is not the first of its block must
// belong to the most recently opened block that is still open.
bool noncrossing_rgs(std::span<const std::uint8_t> rgs) {
  std::vector<int> last(rgs.size(), -1);
  for (std::size_t i = 0; i < rgs.size(); ++i) last[rgs[i]] = static_cast<int>(i);
  std::vector<std::uint8_t> stack;
  std::vector<bool> seen(rgs.size(), false);
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const auto b = rgs[i];
    if (!seen[b]) {
      seen[b] = true;
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    if (last[b] == static_cast<int>(i)) stack.pop_back();
  }
  return true;
}

void check_same_size(const Partition& a, const Partition& b, const char* op) {
  if (a.size() != b.size()) {
    throw DomainError(std::string(op) + ": ground sets differ (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Partition::Partition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
  blocks_ = rgs_.empty() ? 0 : 1 + *std::max_element(rgs_.begin(), rgs_.end());
}

Partition Partition::from_rgs(std::vector<std::uint8_t> rgs) {
  if (rgs.empty() || static_cast<int>(rgs.size()) > kMaxGroundSet) {
    throw DomainError("partition ground set size must be in 1.." + std::to_string(kMaxGroundSet));
  }
  int next = 0;
  for (const auto label : rgs) {
    if (label > next) throw DomainError("not a restricted-growth string");
    if (label == next) ++next;
  }
  return Partition(std::move(rgs));
}

Partition Partition::from_blocks(int n, const std::vector<Block>& blocks) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("partition ground set size out of range");
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (const int e : blocks[b]) {
      if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      if (label[static_cast<std::size_t>(e - 1)] != -1) {
        throw DomainError("element " + std::to_string(e) + " appears twice");
      }
      label[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (label[static_cast<std::size_t>(i)] == -1) {
      throw DomainError("element " + std::to_string(i + 1) + " not covered");
    }
  }
  return Partition(canonical_labels(label));
}

Partition Partition::parse(std::string_view text) {
  std::vector<Block> blocks;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto bar = std::min(text.find('|', pos), text.size());
    const auto block_text = text.substr(pos, bar - pos);
    Block block;
    std::size_t p = 0;
    while (p <= block_text.size()) {
      const auto comma = std::min(block_text.find(',', p), block_text.size());
      const auto item = block_text.substr(p, comma - p);
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          item.size() > 4) {
        throw ParseError("", "malformed partition '" + std::string(text) + "'");
      }
      const int e = std::stoi(std::string(item));
      block.push_back(e);
      n = std::max(n, e);
      p = comma + 1;
    }
    blocks.push_back(std::move(block));
    pos = bar + 1;
  }
  try {
    return from_blocks(n, blocks);
  } catch (const DomainError& e) {
    throw ParseError("", "invalid partition '" + std::string(text) + "': " + e.what());
  }
}

Partition Partition::finest(int n) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("partition ground set size out of range");
  std::vector<std::uint8_t> rgs(static_cast<std::size_t>(n));
  std::iota(rgs.begin(), rgs.end(), std::uint8_t{0});
  return Partition(std::move(rgs));
}

Partition Partition::coarsest(int n) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("partition ground set size out of range");
  return Partition(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

std::vector<Block> Partition::blocks() const {
  std::vector<Block> out(static_cast<std::size_t>(blocks_));
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
  for (const auto b : rgs_) ++sizes[b];
  return sizes;
}

std::string Partition::to_string() const {
  std::string out;
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out += '|';
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.rgs_.begin(), a.rgs_.end(), b.rgs_.begin(), b.rgs_.end());
}

// ---------------------------------------------------------------------------

PartitionStream::PartitionStream(int n, Family family, int max_n) : n_(n), family_(family) {
  if (n < 1 || n > max_n) {
    throw SizeLimitError("enumeration size n=" + std::to_string(n) + " outside 1.." + std::to_string(max_n));
  }
  rgs_.assign(static_cast<std::size_t>(n), 0);
}

bool PartitionStream::prefix_ok(std::size_t length) const {
  if (family_ == Family::all) return true;
  return noncrossing_rgs(std::span<const std::uint8_t>(rgs_.data(), length));
}

bool PartitionStream::fill_from(std::size_t position) {
  for (std::size_t j = position; j < rgs_.size(); ++j) {
    const int limit = j == 0 ? 0 : 1 + *std::max_element(rgs_.begin(), rgs_.begin() + static_cast<long>(j));
    bool placed = false;
    for (int v = 0; v <= limit && !placed; ++v) {
      rgs_[j] = static_cast<std::uint8_t>(v);
      placed = prefix_ok(j + 1);
    }
    if (!placed) return false;
  }
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_from(0)) {
      done_ = true;
      return std::nullopt;
    }
    return Partition(rgs_);
  }
  for (std::size_t i = rgs_.size(); i-- > 1;) {
    const int limit = 1 + *std::max_element(rgs_.begin(), rgs_.begin() + static_cast<long>(i));
    for (int v = rgs_[i] + 1; v <= limit; ++v) {
      rgs_[i] = static_cast<std::uint8_t>(v);
      if (prefix_ok(i + 1) && fill_from(i + 1)) return Partition(rgs_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> enumerate_partitions(int n, Family family, int max_n) {
  std::vector<Partition> out;
  PartitionStream stream(n, family, max_n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_partition(int n, Family family, const std::function<void(const Partition&)>& visit, int max_n) {
  PartitionStream stream(n, family, max_n);
  while (auto p = stream.next()) visit(*p);
}

// ---------------------------------------------------------------------------

bool is_noncrossing(const Partition& pi) { return noncrossing_rgs(pi.rgs()); }

bool refines(const Partition& a, const Partition& b) {
  check_same_size(a, b, "refines");
  std::vector<int> image(static_cast<std::size_t>(a.block_count()), -1);
  for (int i = 0; i < a.size(); ++i) {
    const auto ab = a.rgs()[i];
    const int bb = b.rgs()[i];
    if (image[ab] == -1) {
      image[ab] = bb;
    } else if (image[ab] != bb) {
      return false;
    }
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  check_same_size(a, b, "meet");
  std::vector<int> labels(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) labels[i] = a.rgs()[i] * 256 + b.rgs()[i];
  return Partition::from_rgs(canonical_labels(labels));
}

Partition join(const Partition& a, const Partition& b) {
  check_same_size(a, b, "join");
  const int n = a.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_a(static_cast<std::size_t>(a.block_count()), -1);
  std::vector<int> first_b(static_cast<std::size_t>(b.block_count()), -1);
  for (int i = 0; i < n; ++i) {
    for (auto [first, label] : {std::pair{&first_a, a.rgs()[i]}, std::pair{&first_b, b.rgs()[i]}}) {
      int& f = (*first)[label];
      if (f == -1) {
        f = i;
      } else {
        parent[find(i)] = find(f);
      }
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = find(i);
  return Partition::from_rgs(canonical_labels(labels));
}

MeetJoin lattice_meet_join(const Partition& a, const Partition& b) {
  return {meet(a, b), join(a, b), refines(a, b)};
}

Partition kernel(const IndexFunction& h) {
  if (h.values.empty()) throw DomainError("kernel: empty index function");
  return Partition::from_rgs(canonical_labels(h.values));
}

IndexFunction canonical_index(const Partition& pi) {
  IndexFunction h;
  for (const auto b : pi.rgs()) h.values.push_back(b + 1);
  return h;
}

// The blocks of pi, read as cycles in increasing order, give a permutation;
// K(pi) is the cycle decomposition of pi^{-1} composed with the long cycle
// (1 2 ... n).
Partition kreweras(const Partition& pi) {
  if (!is_noncrossing(pi)) throw DomainError("kreweras: partition " + pi.to_string() + " is crossing");
  const int n = pi.size();
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (const auto& block : pi.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int from = block[i] - 1;
      const int to = block[(i + 1) % block.size()] - 1;
      inverse[to] = from;
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next_label = 0;
  for (int start = 0; start < n; ++start) {
    if (labels[start] != -1) continue;
    for (int j = start; labels[j] == -1; j = inverse[(j + 1) % n]) labels[j] = next_label;
    ++next_label;
  }
  return Partition::from_rgs(canonical_labels(labels));
}

Partition interweave(const Partition& a, const Partition& b) {
  check_same_size(a, b, "interweave");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(2 * a.size()));
  for (int i = 0; i < a.size(); ++i) {
    labels.push_back(a.rgs()[i]);
    labels.push_back(1000 + b.rgs()[i]);
  }
  return Partition::from_rgs(canonical_labels(labels));
}

Partition merge_neighbours(const Partition& pi, int k) {
  const int n = pi.size();
  if (k < 1 || k >= n) throw DomainError("merge_neighbours: k=" + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  const int kb = pi.block_of(k);
  const int kb1 = pi.block_of(k + 1);
  std::vector<int> labels;
  for (int e = 1; e <= n; ++e) {
    if (e == k + 1) continue;
    int b = pi.block_of(e);
    if (b == kb1) b = kb;
    labels.push_back(b);
  }
  return Partition::from_rgs(canonical_labels(labels));
}

Partition induced_grouping(const Partition& pi, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != pi.size()) {
    throw DomainError("induced_grouping: " + std::to_string(sizes.size()) + " sizes for a partition of " +
                      std::to_string(pi.size()));
  }
  std::vector<std::uint8_t> rgs;
  for (int i = 0; i < pi.size(); ++i) {
    if (sizes[i] < 1) throw DomainError("induced_grouping: sizes must be positive");
    rgs.insert(rgs.end(), static_cast<std::size_t>(sizes[i]), pi.rgs()[i]);
  }
  return Partition::from_rgs(std::move(rgs));
}

Partition restrict_to(const Partition& pi, std::span<const int> subset) {
  std::vector<int> labels;
  for (const int e : subset) labels.push_back(pi.block_of(e));
  return Partition::from_rgs(canonical_labels(labels));
}

Partition quotient(const Partition& coarse, const Partition& fine) {
  if (!refines(fine, coarse)) throw DomainError("quotient: " + fine.to_string() + " does not refine " + coarse.to_string());
  std::vector<int> labels;
  for (const auto& block : fine.blocks()) labels.push_back(coarse.block_of(block.front()));
  return Partition::from_rgs(canonical_labels(labels));
}

ShapeInfo shape_predicates(const Partition& pi) {
  ShapeInfo info;
  for (int k = 1; k < pi.size(); ++k) {
    if (pi.same_block(k, k + 1)) ++info.connected_neighbours;
  }
  info.alternating = info.connected_neighbours == 0;
  for (const auto& block : pi.blocks()) {
    if (block.size() == 1) info.singletons.push_back(block.front());
  }
  std::sort(info.singletons.begin(), info.singletons.end());
  info.has_singleton = !info.singletons.empty();
  return info;
}

std::vector<int> block_size_profile(const Partition& pi) {
  std::vector<int> profile(static_cast<std::size_t>(pi.size()) + 1, 0);
  for (const int s : pi.block_sizes()) ++profile[s];
  return profile;
}

}  // namespace freecum

std::size_t std::hash<freecum::Partition>::operator()(const freecum::Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto b : p.rgs()) {
    h ^= b + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
