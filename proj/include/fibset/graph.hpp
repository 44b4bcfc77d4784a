#pragma once

// Multigraph with loop counts and a simple-graph type for popped graphs.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibset/errors.hpp"
#include "fibset/setspace.hpp"

namespace fibset {

using Vertex = std::size_t;

/// Loop-free, multiplicity-free undirected graph stored as bitset rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t order)
      : order_(order), words_((order + 63) / 64), bits_(order * words_, 0) {}

  std::size_t order() const { return order_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw DomainError("SimpleGraph: loops are not allowed");
    set_bit(u, v);
    set_bit(v, u);
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return ((bits_[u * words_ + v / 64] >> (v % 64)) & 1U) != 0;
  }

  const std::uint64_t* row(Vertex v) const { return bits_.data() + v * words_; }

  std::size_t degree(Vertex v) const {
    check(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(v)[w]));
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t m = row(v)[w]; m != 0; m &= m - 1) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
      }
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= order_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Undirected multigraph: eps(u, v) parallel edges for u != v, loops(v) loops.
///
/// Multiplicities live in a packed lower-triangular table, so memory is
/// O(order^2) regardless of how many parallel edges there are. Vertices may
/// carry the subset they stand for; generators fill this in.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t order)
      : order_(order), eps_(order * (order > 0 ? order - 1 : 0) / 2, 0), loops_(order, 0) {}

  std::size_t order() const { return order_; }

  std::uint32_t eps(Vertex u, Vertex v) const {
    check(u);
    check(v);
    if (u == v) return 0;
    return eps_[slot(u, v)];
  }

  std::uint32_t loops(Vertex v) const {
    check(v);
    return loops_[v];
  }

  void set_eps(Vertex u, Vertex v, std::uint32_t m) {
    check(u);
    check(v);
    if (u == v) throw DomainError("MultiGraph: use set_loops for u == v");
    eps_[slot(u, v)] = m;
  }

  void set_loops(Vertex v, std::uint32_t m) {
    check(v);
    loops_[v] = m;
  }

  void set_meta(std::vector<SubsetId> meta) {
    if (!meta.empty() && meta.size() != order_) throw DomainError("MultiGraph: meta size mismatch");
    meta_ = std::move(meta);
  }
  bool has_meta() const { return !meta_.empty(); }
  const std::vector<SubsetId>& meta() const { return meta_; }

  std::string vertex_name(Vertex v) const {
    check(v);
    return has_meta() ? label_of(meta_[v]).str() : std::to_string(v);
  }

  const std::vector<std::uint32_t>& loop_table() const { return loops_; }

  // Packed slot for u != v; row v holds columns u < v.
  static std::size_t slot(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
  }
  const std::vector<std::uint32_t>& packed_eps() const { return eps_; }
  std::vector<std::uint32_t>& packed_eps_mut() { return eps_; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.order_ == b.order_ && a.eps_ == b.eps_ && a.loops_ == b.loops_;
  }

 private:
  void check(Vertex v) const {
    if (v >= order_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }

  std::size_t order_ = 0;
  std::vector<std::uint32_t> eps_;
  std::vector<std::uint32_t> loops_;
  std::vector<SubsetId> meta_;
};

struct GraphSize {
  std::uint64_t edge_count = 0;
  std::uint64_t loop_count = 0;

  friend bool operator==(const GraphSize&, const GraphSize&) = default;
};

// Loops contribute 2, parallel edges their multiplicity.
inline std::uint64_t degree(const MultiGraph& g, Vertex v) {
  std::uint64_t d = 2 * static_cast<std::uint64_t>(g.loops(v));
  for (Vertex u = 0; u < g.order(); ++u) d += g.eps(u, v);
  return d;
}

inline std::vector<std::uint64_t> degrees(const MultiGraph& g) {
  std::vector<std::uint64_t> d(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) d[v] = 2 * static_cast<std::uint64_t>(g.loops(v));
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const auto m = g.packed_eps()[MultiGraph::slot(u, v)];
      d[u] += m;
      d[v] += m;
    }
  }
  return d;
}

inline GraphSize size(const MultiGraph& g) {
  GraphSize s;
  for (auto m : g.packed_eps()) s.edge_count += m;
  for (auto l : g.loop_table()) s.loop_count += l;
  return s;
}

inline std::vector<Vertex> neighborhood(const MultiGraph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v && g.eps(u, v) > 0) out.push_back(u);
  }
  return out;
}

inline std::uint64_t eps_sum_at(const MultiGraph& g, Vertex v) {
  std::uint64_t s = 0;
  for (Vertex u : neighborhood(g, v)) s += g.eps(v, u);
  return s;
}

/// Drops loops and collapses every parallel class to a single edge.
inline SimpleGraph popped(const MultiGraph& g) {
  SimpleGraph out(g.order());
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (g.packed_eps()[MultiGraph::slot(u, v)] > 0) out.add_edge(u, v);
    }
  }
  return out;
}

// Multiplicity-1 multigraph with the same adjacency.
inline MultiGraph as_multigraph(const SimpleGraph& g) {
  MultiGraph out(g.order());
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) out.set_eps(u, v, 1);
    }
  }
  return out;
}

inline std::optional<Vertex> find_vertex(const MultiGraph& g, VertexLabel label) {
  if (!g.has_meta()) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label_of(g.meta()[v]) == label) return v;
  }
  return std::nullopt;
}

inline SimpleGraph induced_without(const SimpleGraph& g, Vertex removed) {
  SimpleGraph out(g.order() - 1);
  auto map = [removed](Vertex v) { return v < removed ? v : v - 1; };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == removed) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u != removed && u < v) out.add_edge(map(u), map(v));
    }
  }
  return out;
}

}  // namespace fibset
