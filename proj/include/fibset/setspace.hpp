#pragma once

// Non-empty subsets of {1..n} as bitmasks, with the (s, i) labelling:
// s is the cardinality, i the 1-based lexicographic rank among s-subsets.

#include <bit>
#include <cstdint>
#include <algorithm>
#include <string>
#include <vector>

#include "fibset/errors.hpp"

namespace fibset {

// Adjacency tables are only ever materialized up to this ground-set size.
inline constexpr int kHardCap = 12;
// Largest ground set for which masks and counts are representable.
inline constexpr int kMaxGround = 62;

/// Bit j set <=> element j is in the subset, for j in 1..n. Bit 0 is unused.
struct SubsetId {
  std::uint64_t mask = 0;
  int n = 0;

  static SubsetId make(std::uint64_t mask, int n) {
    if (n < 1 || n > kMaxGround) throw DomainError("subset: ground size out of range");
    if (mask == 0) throw DomainError("subset: empty set is not a vertex");
    if ((mask & ~full_mask(n)) != 0) throw DomainError("subset: element outside 1..n");
    return SubsetId{mask, n};
  }

  static SubsetId from_elements(const std::vector<int>& elements, int n) {
    std::uint64_t m = 0;
    for (int e : elements) {
      if (e < 1 || e > n) throw DomainError("subset: element outside 1..n");
      m |= std::uint64_t{1} << e;
    }
    return make(m, n);
  }

  static constexpr std::uint64_t full_mask(int n) {
    return ((std::uint64_t{1} << n) - 1) << 1;
  }

  int size() const { return std::popcount(mask); }
  bool contains(int e) const { return e >= 1 && e <= n && ((mask >> e) & 1U) != 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const SubsetId&, const SubsetId&) = default;
};

struct VertexLabel {
  int s = 0;
  std::uint64_t i = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

  std::string str() const { return "v_{" + std::to_string(s) + "," + std::to_string(i) + "}"; }
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  }
  return r;
}

inline std::uint64_t subset_count(int n) {
  if (n < 1 || n > kMaxGround) throw DomainError("subset_count: n out of range");
  return (std::uint64_t{1} << n) - 1;
}

// Number of non-empty subsets with fewer than s elements: the dense index of
// label (s, 1).
inline std::uint64_t class_offset(int n, int s) {
  std::uint64_t off = 0;
  for (int t = 1; t < s; ++t) off += binomial(n, t);
  return off;
}

inline VertexLabel label_of(SubsetId subset) {
  const int n = subset.n;
  const int s = subset.size();
  std::uint64_t rank = 0;
  int prev = 0;
  int pos = 1;
  for (int e : subset.elements()) {
    // Tuples that agree so far but put a smaller value at this position.
    for (int x = prev + 1; x < e; ++x) rank += binomial(n - x, s - pos);
    prev = e;
    ++pos;
  }
  return {s, rank + 1};
}

inline SubsetId subset_of(int s, std::uint64_t i, int n) {
  if (n < 1 || n > kMaxGround) throw DomainError("subset_of: n out of range");
  if (s < 1 || s > n) throw DomainError("subset_of: cardinality out of range");
  if (i < 1 || i > binomial(n, s)) throw DomainError("subset_of: rank out of range");
  std::uint64_t rest = i - 1;
  std::uint64_t mask = 0;
  int x = 1;
  for (int pos = 1; pos <= s; ++pos) {
    for (;; ++x) {
      const std::uint64_t block = binomial(n - x, s - pos);
      if (rest < block) break;
      rest -= block;
    }
    mask |= std::uint64_t{1} << x;
    ++x;
  }
  return SubsetId{mask, n};
}

inline std::uint64_t dense_index(SubsetId subset) {
  const auto label = label_of(subset);
  return class_offset(subset.n, label.s) + label.i - 1;
}

/// All 2^n - 1 non-empty subsets ordered by (s, i).
inline std::vector<SubsetId> enumerate_subsets(int n, int cap = kHardCap) {
  if (n < 1) throw DomainError("enumerate_subsets: n must be >= 1");
  if (n > cap || n > kHardCap) {
    throw CapacityError("enumerate_subsets: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kHardCap)));
  }
  std::vector<SubsetId> out;
  out.reserve(subset_count(n));
  std::vector<int> comb;
  for (int s = 1; s <= n; ++s) {
    comb.resize(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) comb[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
      std::uint64_t m = 0;
      for (int e : comb) m |= std::uint64_t{1} << e;
      out.push_back(SubsetId{m, n});
      int j = s - 1;
      while (j >= 0 && comb[static_cast<std::size_t>(j)] == n - s + j + 1) --j;
      if (j < 0) break;
      ++comb[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < s; ++t) {
        comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
  }
  return out;
}

/// Dense-index lookup for every mask over {1..n}, built once per n.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(int n) : n_(n), index_(std::size_t{1} << (n + 1), kNone) {
    const auto subsets = enumerate_subsets(n);
    for (std::size_t v = 0; v < subsets.size(); ++v) index_[subsets[v].mask] = v;
  }

  std::size_t operator()(std::uint64_t mask) const {
    if (mask >= index_.size() || index_[mask] == kNone) {
      throw DomainError("SubsetIndexer: mask is not a non-empty subset of 1..n");
    }
    return index_[mask];
  }

  int n() const { return n_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  int n_;
  std::vector<std::size_t> index_;
};

}  // namespace fibset
