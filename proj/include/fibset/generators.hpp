#pragma once

// Builders for the Fibonacci-sum graph, the set-graph, the Fibonacci-sum
// set-graph and the set-graph of a host graph.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "fibset/errors.hpp"
#include "fibset/graph.hpp"
#include "fibset/numseq.hpp"
#include "fibset/setspace.hpp"

namespace fibset {

/// How a cross pair (a, b), a in A_u, b in A_v, is counted between two
/// distinct subsets. Strict skips a == b; Inclusive counts it when 2a is a
/// member. Loops are the same under both: unordered pairs of distinct
/// elements inside one subset.
enum class EdgeSemantics { Strict, Inclusive };

inline std::string_view to_string(EdgeSemantics sem) {
  return sem == EdgeSemantics::Strict ? "strict" : "inclusive";
}

inline SumSequence fibonacci_for(int n) {
  return SumSequence::fibonacci(2 * static_cast<std::uint64_t>(std::max(n, 1)));
}

namespace detail {

// partners[a]: mask of b in 1..n, b != a, such that a and b are joined.
// self[a]: whether a joins with itself across two subsets.
struct PartnerTable {
  int n = 0;
  std::array<std::uint64_t, kMaxGround + 2> partners{};
  std::array<bool, kMaxGround + 2> self{};
};

inline PartnerTable sum_partners(int n, const SumSequence& seq, EdgeSemantics sem) {
  seq.require_ground(n);
  PartnerTable t;
  t.n = n;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (b != a && seq.contains(static_cast<std::uint64_t>(a + b))) {
        t.partners[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      }
    }
    t.self[static_cast<std::size_t>(a)] =
        sem == EdgeSemantics::Inclusive && seq.contains(2 * static_cast<std::uint64_t>(a));
  }
  return t;
}

inline std::uint32_t cross_count(const PartnerTable& t, std::uint64_t a_mask, std::uint64_t b_mask) {
  std::uint32_t m = 0;
  for (std::uint64_t rest = a_mask; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<std::size_t>(std::countr_zero(rest));
    m += static_cast<std::uint32_t>(std::popcount(t.partners[a] & b_mask));
    if (t.self[a] && ((b_mask >> a) & 1U) != 0) ++m;
  }
  return m;
}

inline std::uint32_t inner_count(const PartnerTable& t, std::uint64_t mask) {
  std::uint32_t twice = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<std::size_t>(std::countr_zero(rest));
    twice += static_cast<std::uint32_t>(std::popcount(t.partners[a] & mask));
  }
  return twice / 2;
}

// Rows are independent, so blocks of rows go to separate threads.
inline MultiGraph build_subset_multigraph(const PartnerTable& t, int cap) {
  auto subsets = enumerate_subsets(t.n, cap);
  const std::size_t order = subsets.size();
  MultiGraph g(order);
  auto& eps = g.packed_eps_mut();

  auto fill_rows = [&](std::size_t from, std::size_t to) {
    for (std::size_t v = from; v < to; ++v) {
      const std::size_t base = v * (v - 1) / 2;
      for (std::size_t u = 0; u < v; ++u) {
        eps[base + u] = cross_count(t, subsets[u].mask, subsets[v].mask);
      }
    }
  };

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (order < 512 || hw == 1) {
    fill_rows(1, order);
  } else {
    // Row v costs ~v, so split on equal triangle area.
    std::vector<std::size_t> cuts{1};
    for (unsigned w = 1; w < hw; ++w) {
      const double frac = static_cast<double>(w) / hw;
      cuts.push_back(std::max(cuts.back(), static_cast<std::size_t>(order * std::sqrt(frac))));
    }
    cuts.push_back(order);
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w + 1 < cuts.size(); ++w) {
      workers.emplace_back(fill_rows, cuts[w], cuts[w + 1]);
    }
  }

  for (std::size_t v = 0; v < order; ++v) g.set_loops(v, inner_count(t, subsets[v].mask));
  g.set_meta(std::move(subsets));
  return g;
}

}  // namespace detail

/// Number of ordered pairs (a, b) in A x B with a + b in seq (a != b under
/// Strict). Symmetric in A and B.
inline std::uint32_t pair_multiplicity(SubsetId a, SubsetId b, const SumSequence& seq,
                                       EdgeSemantics sem) {
  if (a.n != b.n) throw DomainError("pair_multiplicity: subsets over different ground sets");
  if (a == b) throw DomainError("pair_multiplicity: subsets must be distinct");
  seq.require_ground(a.n);
  std::uint32_t m = 0;
  for (int x : a.elements()) {
    for (int y : b.elements()) {
      if (x == y && sem == EdgeSemantics::Strict) continue;
      if (seq.contains(static_cast<std::uint64_t>(x + y))) ++m;
    }
  }
  return m;
}

inline std::uint32_t loop_count(SubsetId a, const SumSequence& seq) {
  seq.require_ground(a.n);
  const auto el = a.elements();
  std::uint32_t l = 0;
  for (std::size_t p = 0; p < el.size(); ++p) {
    for (std::size_t q = p + 1; q < el.size(); ++q) {
      if (seq.contains(static_cast<std::uint64_t>(el[p] + el[q]))) ++l;
    }
  }
  return l;
}

/// Vertex j - 1 stands for the integer j.
inline SimpleGraph gen_fib_sum_graph(int n, const SumSequence& seq) {
  if (n < 1) throw DomainError("gen_fib_sum_graph: n must be >= 1");
  seq.require_ground(n);
  SimpleGraph g(static_cast<std::size_t>(n));
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      if (seq.contains(static_cast<std::uint64_t>(i + j))) {
        g.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
      }
    }
  }
  return g;
}

inline SimpleGraph gen_set_graph(int n, int cap = kHardCap) {
  const auto subsets = enumerate_subsets(n, cap);
  SimpleGraph g(subsets.size());
  for (Vertex v = 1; v < subsets.size(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if ((subsets[u].mask & subsets[v].mask) != 0) g.add_edge(u, v);
    }
  }
  return g;
}

inline MultiGraph gen_fib_sum_set_graph(int n, const SumSequence& seq, EdgeSemantics sem,
                                        int cap = kHardCap) {
  if (n < 1) throw DomainError("gen_fib_sum_set_graph: n must be >= 1");
  if (n > cap || n > kHardCap) {
    throw CapacityError("gen_fib_sum_set_graph: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kHardCap)));
  }
  return detail::build_subset_multigraph(detail::sum_partners(n, seq, sem), cap);
}

/// Set-graph of a host graph: element j of a subset is host vertex j - 1;
/// an element pair is joined when the host vertices are adjacent. Both
/// semantics coincide because the host has no loops.
inline MultiGraph gen_set_graph_of_graph(const SimpleGraph& host, EdgeSemantics /*sem*/,
                                         int cap = kHardCap) {
  const int n = static_cast<int>(host.order());
  if (n < 1) throw DomainError("gen_set_graph_of_graph: host must have a vertex");
  if (n > cap || n > kHardCap) throw CapacityError("gen_set_graph_of_graph: host too large");
  detail::PartnerTable t;
  t.n = n;
  for (int a = 1; a <= n; ++a) {
    for (Vertex u : host.neighbors(static_cast<Vertex>(a - 1))) {
      t.partners[static_cast<std::size_t>(a)] |= std::uint64_t{1} << (u + 1);
    }
  }
  return detail::build_subset_multigraph(t, cap);
}

/// Builds the graph for n + 1 from the graph for n: copy G_n onto the
/// subsets without n + 1, a second copy onto A + {n+1}, then add every pair
/// that involves the new element. The result is checked against direct
/// generation unless `cross_check` is false.
inline MultiGraph gen_doubling_step(const MultiGraph& g_n, int n, const SumSequence& seq,
                                    EdgeSemantics sem, bool cross_check = true) {
  if (n < 1 || n + 1 > kHardCap) throw CapacityError("gen_doubling_step: n out of range");
  if (g_n.order() != subset_count(n)) throw DomainError("gen_doubling_step: g_n has wrong order");
  seq.require_ground(n + 1);

  const auto old_subsets = g_n.has_meta() ? g_n.meta() : enumerate_subsets(n);
  const int m = n + 1;
  const std::uint64_t top = std::uint64_t{1} << m;
  const SubsetIndexer index(m);

  auto joins = [&](int x, int y) { return seq.contains(static_cast<std::uint64_t>(x + y)); };
  // Elements of A that pair with the new element.
  auto with_new = [&](std::uint64_t mask) {
    std::uint32_t c = 0;
    for (std::uint64_t r = mask; r != 0; r &= r - 1) c += joins(std::countr_zero(r), m) ? 1 : 0;
    return c;
  };
  // Elements a of A with a + a a member (Inclusive diagonal term).
  auto doubled = [&](std::uint64_t mask) {
    std::uint32_t c = 0;
    if (sem != EdgeSemantics::Inclusive) return c;
    for (std::uint64_t r = mask; r != 0; r &= r - 1) {
      const int a = std::countr_zero(r);
      c += joins(a, a) ? 1 : 0;
    }
    return c;
  };
  const std::uint32_t new_self = (sem == EdgeSemantics::Inclusive && joins(m, m)) ? 1U : 0U;

  MultiGraph g(subset_count(m));
  const std::size_t single = index(top);
  const std::size_t old_order = g_n.order();
  std::vector<std::size_t> lo(old_order), hi(old_order);
  std::vector<std::uint32_t> c(old_order);
  for (Vertex v = 0; v < old_order; ++v) {
    lo[v] = index(old_subsets[v].mask);
    hi[v] = index(old_subsets[v].mask | top);
    c[v] = with_new(old_subsets[v].mask);
  }

  for (Vertex v = 0; v < old_order; ++v) {
    // Step 1: the two copies carry G_n's loops, the lifted copy gains pairs with n+1.
    g.set_loops(lo[v], g_n.loops(v));
    g.set_loops(hi[v], g_n.loops(v) + c[v]);
    // A vs A + {n+1}: ordered pairs inside A, plus A's partners of n+1.
    g.set_eps(lo[v], hi[v], 2 * g_n.loops(v) + doubled(old_subsets[v].mask) + c[v]);
    g.set_eps(single, lo[v], c[v]);
    g.set_eps(single, hi[v], c[v] + new_self);
    for (Vertex u = 0; u < v; ++u) {
      const std::uint32_t e = g_n.eps(u, v);
      g.set_eps(lo[u], lo[v], e);
      // Step 2: cross edges between the copies.
      g.set_eps(lo[u], hi[v], e + c[u]);
      g.set_eps(hi[u], lo[v], e + c[v]);
      g.set_eps(hi[u], hi[v], e + c[u] + c[v] + new_self);
    }
  }
  g.set_meta(enumerate_subsets(m));

  if (cross_check && !(g == gen_fib_sum_set_graph(m, seq, sem))) {
    throw ConsistencyError("gen_doubling_step: result differs from direct generation at n=" +
                           std::to_string(m));
  }
  return g;
}

}  // namespace fibset
