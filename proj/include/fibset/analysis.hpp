#pragma once

// Invariants of generated graphs and budgeted exact solvers.
//
// Hamiltonicity, cliques and colourings are always computed on the simple
// (popped) adjacency. Exponential searches consume one unit of budget per
// node expansion and report "unknown" instead of a guess when it runs out.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "fibset/errors.hpp"
#include "fibset/generators.hpp"
#include "fibset/graph.hpp"
#include "fibset/numseq.hpp"

namespace fibset {

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits row_of(const SimpleGraph& g, Vertex v) {
    Bits b(g.order());
    std::copy_n(g.row(v), b.w_.size(), b.w_.begin());
    return b;
  }

  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return ((w_[i / 64] >> (i % 64)) & 1U) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    }
    return n_;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += static_cast<std::size_t>(std::popcount(w_[k] & o.w_[k]));
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      for (std::uint64_t m = w_[k]; m != 0; m &= m - 1) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(m)));
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class Budget {
 public:
  explicit Budget(std::int64_t limit) : limit_(limit) {
    if (limit <= 0) throw DomainError("solver budget must be positive");
  }
  bool spend() {
    if (used_ >= static_cast<std::uint64_t>(limit_)) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

 private:
  std::int64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

inline std::vector<Bits> rows_of(const SimpleGraph& g) {
  std::vector<Bits> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(Bits::row_of(g, v));
  return rows;
}

// Component of `start` restricted to `allowed`.
inline Bits reach(const std::vector<Bits>& rows, Vertex start, const Bits& allowed) {
  Bits seen(rows.size());
  seen.set(start);
  Bits frontier = seen;
  while (!frontier.none()) {
    Bits next(rows.size());
    frontier.for_each([&](std::size_t v) { next = next | rows[v]; });
    next = (next & allowed).minus(seen);
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

}  // namespace detail

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// ---------------------------------------------------------------------------
// Connectivity, pendants, parity

inline bool is_connected(const SimpleGraph& g) {
  if (g.order() <= 1) return true;
  const auto rows = detail::rows_of(g);
  detail::Bits all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.set(v);
  return detail::reach(rows, 0, all).count() == g.order();
}

inline bool is_connected(const MultiGraph& g) { return is_connected(popped(g)); }

// Degree exactly 1. Isolated vertices are not pendant and a loop alone gives 2.
inline std::vector<Vertex> pendant_vertices(const MultiGraph& g) {
  std::vector<Vertex> out;
  const auto d = degrees(g);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d[v] == 1) out.push_back(v);
  }
  return out;
}

inline std::optional<Vertex> first_odd_degree(const MultiGraph& g) {
  const auto d = degrees(g);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d[v] % 2 != 0) return v;
  }
  return std::nullopt;
}

inline bool all_degrees_even(const MultiGraph& g) { return !first_odd_degree(g).has_value(); }

// Even degrees and every vertex that has an edge (loops included) in one
// component. The edgeless graph has the empty circuit.
inline bool is_eulerian(const MultiGraph& g) {
  const auto d = degrees(g);
  if (std::any_of(d.begin(), d.end(), [](std::uint64_t x) { return x % 2 != 0; })) return false;
  detail::Bits active(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d[v] > 0) active.set(v);
  }
  if (active.none()) return true;
  const auto rows = detail::rows_of(popped(g));
  return detail::reach(rows, active.first(), active).count() == active.count();
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles

enum class SearchStatus { Found, None, Unknown };

struct HamiltonResult {
  SearchStatus status = SearchStatus::Unknown;
  std::vector<Vertex> cycle;  // closing edge back to cycle.front() implied
  std::uint64_t expansions = 0;
};

inline bool is_hamiltonian_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() != g.order() || cycle.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : cycle) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  if (cycle.size() == 1) return true;
  if (cycle.size() == 2) return false;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (!g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace detail {

class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, Budget& budget)
      : g_(g), rows_(rows_of(g)), unvisited_(g.order()), budget_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex v = 1; v < g_.order(); ++v) unvisited_.set(v);
    path_.push_back(0);
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // Every unvisited vertex still needs two usable neighbours: unvisited ones
  // or the two path ends.
  bool viable() const {
    Bits usable = unvisited_;
    usable.set(path_.front());
    usable.set(path_.back());
    bool ok = true;
    unvisited_.for_each([&](std::size_t w) {
      if (ok && rows_[w].count_and(usable) < 2) ok = false;
    });
    return ok;
  }

  bool extend() {
    if (!budget_.spend()) return false;
    const Vertex end = path_.back();
    if (path_.size() == g_.order()) return g_.adjacent(end, path_.front());
    if (!viable()) return false;

    std::vector<std::pair<std::size_t, Vertex>> order;
    (rows_[end] & unvisited_).for_each([&](std::size_t w) {
      order.emplace_back(rows_[w].count_and(unvisited_), w);
    });
    std::sort(order.begin(), order.end());
    for (auto [_, w] : order) {
      path_.push_back(w);
      unvisited_.reset(w);
      if (extend()) return true;
      unvisited_.set(w);
      path_.pop_back();
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<Bits> rows_;
  Bits unvisited_;
  std::vector<Vertex> path_;
  Budget& budget_;
};

}  // namespace detail

/// Backtracking search from vertex 0 with fewest-onward-neighbours ordering
/// and a two-usable-neighbours prune. K_1 counts as Hamiltonian.
inline HamiltonResult hamiltonian_cycle(const SimpleGraph& g, std::int64_t budget = kDefaultBudget) {
  detail::Budget b(budget);
  HamiltonResult r;
  if (g.order() == 0) {
    r.status = SearchStatus::None;
    return r;
  }
  if (g.order() == 1) {
    r.status = SearchStatus::Found;
    r.cycle = {0};
    return r;
  }
  if (g.order() == 2) {
    r.status = SearchStatus::None;
    return r;
  }
  detail::HamiltonSearch search(g, b);
  auto cycle = search.run();
  r.expansions = b.used();
  if (cycle) {
    if (!is_hamiltonian_cycle(g, *cycle)) throw ConsistencyError("hamiltonian_cycle: invalid cycle");
    r.status = SearchStatus::Found;
    r.cycle = std::move(*cycle);
  } else {
    r.status = b.exhausted() ? SearchStatus::Unknown : SearchStatus::None;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Loop sequences

// Sorted multiset of loop counts.
inline std::vector<std::uint32_t> loop_sequence(const MultiGraph& g) {
  auto s = g.loop_table();
  std::sort(s.begin(), s.end());
  return s;
}

// Same multiset for G^F_{A^(n)} without building adjacency; usable past the
// materialization cap.
inline std::vector<std::uint32_t> loop_sequence_by_counting(int n, const SumSequence& seq) {
  if (n < 1 || n > 24) throw DomainError("loop_sequence_by_counting: n out of range");
  const auto t = detail::sum_partners(n, seq, EdgeSemantics::Strict);
  std::vector<std::uint32_t> out;
  out.reserve(subset_count(n));
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(detail::inner_count(t, m << 1));
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices attaining the maximum loop count.
inline std::vector<Vertex> max_loop_vertices(const MultiGraph& g) {
  std::vector<Vertex> out;
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.empty() || g.loops(v) > best) {
      best = g.loops(v);
      out = {v};
    } else if (g.loops(v) == best) {
      out.push_back(v);
    }
  }
  return out;
}

/// Edge counts of the Fibonacci-sum graphs on {1..m}, m = 1..n.
struct LoopValueList {
  int n = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
  bool contains(std::uint64_t x) const {
    return std::find(values.begin(), values.end(), x) != values.end();
  }
};

// Counted pair by pair, each value cross-checked against the closed form.
inline LoopValueList loop_value_list(int n) {
  if (n < 1) throw DomainError("loop_value_list: n must be >= 1");
  const auto seq = fibonacci_for(n);
  LoopValueList out{n, {}};
  std::uint64_t count = 0;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i < m; ++i) {
      if (seq.contains(static_cast<std::uint64_t>(i + m))) ++count;
    }
    if (count != closed_form_edge_count(static_cast<std::uint64_t>(m))) {
      throw ConsistencyError("loop_value_list: closed form disagrees at m=" + std::to_string(m));
    }
    out.values.push_back(count);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bipartiteness, cliques, colourings

inline bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (vs[a] == vs[b] || !g.adjacent(vs[a], vs[b])) return false;
    }
  }
  return true;
}

inline bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (colors[u] == colors[v]) return false;
    }
  }
  return true;
}

struct CliqueResult {
  std::optional<std::size_t> number;  // empty when the budget ran out
  std::vector<Vertex> clique;         // best clique found
  std::uint64_t expansions = 0;
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting, pruned by a greedy colouring bound on
// the candidate set.
class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, Budget& budget) : rows_(rows_of(g)), budget_(budget) {}

  void run() {
    Bits p(rows_.size());
    for (Vertex v = 0; v < rows_.size(); ++v) p.set(v);
    expand(p, Bits(rows_.size()));
  }

  std::vector<Vertex> best;

 private:
  std::size_t colour_bound(Bits p) const {
    std::size_t colours = 0;
    while (!p.none()) {
      ++colours;
      Bits q = p;
      while (!q.none()) {
        const auto v = q.first();
        q = q.minus(rows_[v]);
        q.reset(v);
        p.reset(v);
      }
    }
    return colours;
  }

  void expand(Bits p, Bits x) {
    if (!budget_.spend()) return;
    if (current_.size() > best.size()) best = current_;
    if (p.none()) return;
    if (current_.size() + colour_bound(p) <= best.size()) return;

    std::size_t pivot = 0, pivot_cover = 0;
    bool have_pivot = false;
    (p | x).for_each([&](std::size_t u) {
      const auto c = p.count_and(rows_[u]);
      if (!have_pivot || c > pivot_cover) {
        pivot = u;
        pivot_cover = c;
        have_pivot = true;
      }
    });

    const Bits branch = p.minus(rows_[pivot]);
    std::vector<std::size_t> order;
    branch.for_each([&](std::size_t v) { order.push_back(v); });
    for (std::size_t v : order) {
      current_.push_back(v);
      expand(p & rows_[v], x & rows_[v]);
      current_.pop_back();
      if (budget_.exhausted()) return;
      p.reset(v);
      x.set(v);
      if (current_.size() + p.count() <= best.size()) return;
    }
  }

  std::vector<Bits> rows_;
  std::vector<Vertex> current_;
  Budget& budget_;
};

}  // namespace detail

inline CliqueResult clique_number(const SimpleGraph& g, std::int64_t budget = kDefaultBudget) {
  detail::Budget b(budget);
  CliqueResult r;
  if (g.order() == 0) {
    r.number = 0;
    return r;
  }
  detail::CliqueSearch search(g, b);
  search.run();
  r.expansions = b.used();
  r.clique = search.best;
  if (!is_clique(g, r.clique)) throw ConsistencyError("clique_number: invalid clique");
  if (!b.exhausted()) r.number = r.clique.size();
  return r;
}

// Order of a largest induced complete subgraph keeping loops and parallel
// edges; equal to the clique number of the popped graph.
inline CliqueResult eared_clique_number(const MultiGraph& g, std::int64_t budget = kDefaultBudget) {
  return clique_number(popped(g), budget);
}

struct ColoringResult {
  std::optional<std::size_t> number;  // empty when the budget ran out
  std::vector<std::size_t> colors;    // best proper colouring found
  std::size_t lower_bound = 0;
  std::uint64_t expansions = 0;
};

namespace detail {

// Saturation-ordered backtracking for a k-colouring. A vertex may only open
// the next unused colour, which removes colour-permutation symmetry.
class ColoringSearch {
 public:
  ColoringSearch(const SimpleGraph& g, Budget& budget)
      : g_(g), nbrs_(g.order()), budget_(budget) {
    for (Vertex v = 0; v < g.order(); ++v) nbrs_[v] = g.neighbors(v);
  }

  std::optional<std::vector<std::size_t>> run(std::size_t k) {
    k_ = k;
    colors_.assign(g_.order(), kNone);
    sat_.assign(g_.order(), std::vector<int>(k, 0));
    if (solve(0, 0)) return colors_;
    return std::nullopt;
  }

  // DSATUR greedy colouring, used for the upper bound.
  static std::vector<std::size_t> greedy(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> colors(n, kNone);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n + 1, false));
    std::vector<std::size_t> sat(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex pick = n;
      for (Vertex v = 0; v < n; ++v) {
        if (colors[v] != kNone) continue;
        if (pick == n || sat[v] > sat[pick] || (sat[v] == sat[pick] && g.degree(v) > g.degree(pick))) {
          pick = v;
        }
      }
      std::size_t c = 0;
      while (seen[pick][c]) ++c;
      colors[pick] = c;
      for (Vertex u : g.neighbors(pick)) {
        if (!seen[u][c]) {
          seen[u][c] = true;
          ++sat[u];
        }
      }
    }
    return colors;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t saturation(Vertex v) const {
    return static_cast<std::size_t>(
        std::count_if(sat_[v].begin(), sat_[v].end(), [](int c) { return c > 0; }));
  }

  bool solve(std::size_t coloured, std::size_t used) {
    if (!budget_.spend()) return false;
    if (coloured == g_.order()) return true;
    Vertex pick = g_.order();
    std::size_t pick_sat = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colors_[v] != kNone) continue;
      const auto s = saturation(v);
      if (pick == g_.order() || s > pick_sat ||
          (s == pick_sat && nbrs_[v].size() > nbrs_[pick].size())) {
        pick = v;
        pick_sat = s;
      }
    }
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (sat_[pick][c] > 0) continue;
      colors_[pick] = c;
      for (Vertex u : nbrs_[pick]) ++sat_[u][c];
      if (solve(coloured + 1, std::max(used, c + 1))) return true;
      for (Vertex u : nbrs_[pick]) --sat_[u][c];
      colors_[pick] = kNone;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<std::vector<Vertex>> nbrs_;
  Budget& budget_;
  std::size_t k_ = 0;
  std::vector<std::size_t> colors_;
  std::vector<std::vector<int>> sat_;
};

}  // namespace detail

/// Exact chromatic number: lower bound from the clique solver, upper bound
/// from greedy DSATUR, then k-colourability tested upward from the lower
/// bound. The clique search and the colouring search share one budget.
inline ColoringResult chromatic_number(const SimpleGraph& g, std::int64_t budget = kDefaultBudget) {
  ColoringResult r;
  if (g.order() == 0) {
    r.number = 0;
    return r;
  }
  const auto clique = clique_number(g, budget);
  r.lower_bound = clique.clique.size();
  r.expansions = clique.expansions;
  r.colors = detail::ColoringSearch::greedy(g);
  if (!is_proper_coloring(g, r.colors)) throw ConsistencyError("chromatic_number: invalid greedy colouring");
  const std::size_t upper = *std::max_element(r.colors.begin(), r.colors.end()) + 1;
  if (clique.number && *clique.number == upper) {
    r.number = upper;
    return r;
  }
  const auto remaining = budget - static_cast<std::int64_t>(clique.expansions);
  if (remaining <= 0) return r;
  detail::Budget b(remaining);
  detail::ColoringSearch search(g, b);
  for (std::size_t k = std::max<std::size_t>(r.lower_bound, 1); k < upper; ++k) {
    auto colors = search.run(k);
    if (colors) {
      if (!is_proper_coloring(g, *colors)) throw ConsistencyError("chromatic_number: invalid colouring");
      r.colors = std::move(*colors);
      r.number = k;
      r.expansions += b.used();
      return r;
    }
    if (b.exhausted()) {
      r.expansions += b.used();
      return r;
    }
  }
  r.expansions += b.used();
  r.number = upper;
  return r;
}

}  // namespace fibset
