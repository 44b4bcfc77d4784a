#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fibset/analysis.hpp"
#include "oracles.hpp"

using namespace fibset;

namespace {
MultiGraph fss(int n, EdgeSemantics sem) { return gen_fib_sum_set_graph(n, fibonacci_for(n), sem); }
Vertex at(const MultiGraph& g, int s, int i) { return *find_vertex(g, {s, static_cast<std::uint64_t>(i)}); }
constexpr auto kStrict = EdgeSemantics::Strict;
constexpr auto kInclusive = EdgeSemantics::Inclusive;

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

oracle::Adjacency adjacency(const SimpleGraph& g) {
  oracle::Adjacency a(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u = 0; u < g.order(); ++u) a[u][v] = u != v && g.adjacent(u, v);
  }
  return a;
}
}  // namespace

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(fss(3, kStrict)));
  EXPECT_TRUE(is_connected(fss(3, kInclusive)));
  EXPECT_FALSE(is_connected(MultiGraph(2)));
  EXPECT_TRUE(is_connected(fss(5, kStrict)));
  EXPECT_TRUE(is_connected(SimpleGraph(1)));
  SimpleGraph two_parts(130);
  two_parts.add_edge(0, 129);
  EXPECT_FALSE(is_connected(two_parts));
}

TEST(Pendants, Examples) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(pendant_vertices(fss(n, kStrict)).empty());
    EXPECT_TRUE(pendant_vertices(fss(n, kInclusive)).empty());
  }
  EXPECT_EQ(pendant_vertices(as_multigraph(path(2))), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(pendant_vertices(MultiGraph(1)).empty());
  MultiGraph looped(2);
  looped.set_loops(0, 1);
  EXPECT_TRUE(pendant_vertices(looped).empty());
}

TEST(Parity, Examples) {
  const auto strict = fss(3, kStrict);
  EXPECT_TRUE(all_degrees_even(strict));
  EXPECT_EQ(degrees(strict), (std::vector<std::uint64_t>{4, 8, 4, 12, 8, 12, 16}));
  const auto inc = fss(3, kInclusive);
  EXPECT_FALSE(all_degrees_even(inc));
  ASSERT_TRUE(first_odd_degree(inc).has_value());
  EXPECT_EQ(*first_odd_degree(inc), at(inc, 1, 1));
  EXPECT_EQ(degree(inc, at(inc, 1, 1)), 7u);
  EXPECT_TRUE(all_degrees_even(MultiGraph(1)));
}

TEST(Eulerian, Examples) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(is_eulerian(fss(n, kStrict))) << n;
  EXPECT_FALSE(is_eulerian(fss(3, kInclusive)));
  EXPECT_TRUE(is_eulerian(MultiGraph(1)));
  // Even degrees everywhere, but a looped vertex sits apart from a 2-cycle.
  MultiGraph split(3);
  split.set_eps(0, 1, 2);
  split.set_loops(2, 1);
  EXPECT_TRUE(all_degrees_even(split));
  EXPECT_FALSE(is_eulerian(split));
  // Isolated vertices do not matter.
  MultiGraph with_isolated(3);
  with_isolated.set_eps(0, 1, 2);
  EXPECT_TRUE(is_eulerian(with_isolated));
}

TEST(Hamiltonian, Examples) {
  for (auto sem : {kStrict, kInclusive}) {
    const auto p = popped(fss(3, sem));
    const auto r = hamiltonian_cycle(p, 100000);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.cycle.size(), 7u);
    EXPECT_TRUE(is_hamiltonian_cycle(p, r.cycle));
  }
  EXPECT_EQ(hamiltonian_cycle(path(3), 1000).status, SearchStatus::None);
  const auto five = popped(fss(5, kStrict));
  const auto r5 = hamiltonian_cycle(five);
  ASSERT_EQ(r5.status, SearchStatus::Found);
  EXPECT_EQ(r5.cycle.size(), 31u);
  EXPECT_TRUE(is_hamiltonian_cycle(five, r5.cycle));
}

TEST(Hamiltonian, BudgetAndTrivialOrders) {
  EXPECT_THROW(hamiltonian_cycle(path(3), 0), DomainError);
  EXPECT_EQ(hamiltonian_cycle(SimpleGraph(1), 1).status, SearchStatus::Found);
  EXPECT_EQ(hamiltonian_cycle(path(2), 1).status, SearchStatus::None);
  // Petersen graph: no Hamiltonian cycle; one expansion cannot decide it.
  SimpleGraph petersen(10);
  for (Vertex v = 0; v < 5; ++v) {
    petersen.add_edge(v, (v + 1) % 5);
    petersen.add_edge(v, v + 5);
    petersen.add_edge(v + 5, (v + 2) % 5 + 5);
  }
  EXPECT_EQ(hamiltonian_cycle(petersen, 1).status, SearchStatus::Unknown);
  EXPECT_EQ(hamiltonian_cycle(petersen).status, SearchStatus::None);
}

TEST(Hamiltonian, AgreesWithPermutationOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = random_graph(rng, n, 0.5);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool exists = false;
    do {
      exists = is_hamiltonian_cycle(g, perm);
    } while (!exists && std::next_permutation(perm.begin() + 1, perm.end()));
    const auto r = hamiltonian_cycle(g);
    ASSERT_NE(r.status, SearchStatus::Unknown);
    ASSERT_EQ(r.status == SearchStatus::Found, exists);
  }
}

TEST(LoopSequence, Examples) {
  EXPECT_EQ(loop_sequence(fss(3, kInclusive)), (std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 2}));
  EXPECT_EQ(loop_sequence(as_multigraph(path(4))), (std::vector<std::uint32_t>{0, 0, 0, 0}));
  const auto four = loop_sequence(fss(4, kStrict));
  for (std::uint32_t x : {0u, 1u, 2u, 3u}) EXPECT_TRUE(std::binary_search(four.begin(), four.end(), x));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(loop_sequence_by_counting(n, fibonacci_for(n)), loop_sequence(fss(n, kStrict)));
}

TEST(LoopValueList, Examples) {
  const auto l = loop_value_list(21);
  EXPECT_EQ(l.values, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 14, 15, 16, 17, 18, 19, 21, 23, 25, 26}));
  for (std::uint64_t x : {6u, 11u, 13u, 20u, 22u}) EXPECT_FALSE(l.contains(x));
  EXPECT_EQ(loop_value_list(1).values, (std::vector<std::uint64_t>{0}));
  for (int m = 1; m <= 21; ++m) EXPECT_EQ(static_cast<long>(l.at(m)), oracle::fib_pair_count(m));
  EXPECT_TRUE(std::is_sorted(l.values.begin(), l.values.end()));
}

TEST(MaxLoop, UniqueFullSetVertex) {
  for (int n = 1; n <= 7; ++n) {
    const auto g = fss(n, kStrict);
    const auto top = max_loop_vertices(g);
    ASSERT_EQ(top.size(), 1u) << n;
    EXPECT_EQ(top[0], at(g, n, 1));
    EXPECT_EQ(g.loops(top[0]), closed_form_edge_count(static_cast<std::uint64_t>(n)));
  }
}

TEST(Bipartite, Examples) {
  for (int n = 2; n <= 20; ++n) EXPECT_TRUE(is_bipartite(gen_fib_sum_graph(n, fibonacci_for(n)))) << n;
  EXPECT_FALSE(is_bipartite(popped(fss(3, kStrict))));
  EXPECT_TRUE(is_bipartite(SimpleGraph(1)));
}

TEST(Clique, Examples) {
  EXPECT_EQ(clique_number(popped(fss(3, kInclusive))).number, 6u);
  EXPECT_EQ(clique_number(popped(fss(3, kStrict))).number, 5u);
  EXPECT_EQ(clique_number(SimpleGraph(1)).number, 1u);
  EXPECT_EQ(eared_clique_number(fss(3, kInclusive)).number, 6u);
  EXPECT_EQ(eared_clique_number(fss(3, kStrict)).number, 5u);
  EXPECT_EQ(eared_clique_number(MultiGraph(1)).number, 1u);
  const auto r = clique_number(popped(fss(3, kInclusive)));
  EXPECT_TRUE(is_clique(popped(fss(3, kInclusive)), r.clique));
}

TEST(Clique, BudgetExhaustionIsUnknown) {
  std::mt19937_64 rng(5);
  const auto g = random_graph(rng, 60, 0.8);
  const auto r = clique_number(g, 3);
  EXPECT_FALSE(r.number.has_value());
  EXPECT_TRUE(is_clique(g, r.clique));
  EXPECT_THROW(clique_number(g, 0), DomainError);
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(popped(fss(3, kStrict))).number, 5u);
  EXPECT_EQ(chromatic_number(popped(fss(3, kInclusive))).number, 6u);
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(chromatic_number(gen_fib_sum_graph(n, fibonacci_for(n))).number, 2u);
  EXPECT_EQ(chromatic_number(SimpleGraph(1)).number, 1u);
  EXPECT_EQ(chromatic_number(SimpleGraph(0)).number, 0u);
}

TEST(Chromatic, BudgetExhaustionIsUnknown) {
  // Mycielski graph of C5 (Groetzsch): triangle-free, chi = 4; the clique bound
  // is 2, so a tiny budget cannot close the gap.
  SimpleGraph g(11);
  for (Vertex v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);
    g.add_edge(v + 5, (v + 1) % 5);
    g.add_edge(v + 5, (v + 4) % 5);
    g.add_edge(v + 5, 10);
  }
  EXPECT_EQ(chromatic_number(g).number, 4u);
  const auto r = chromatic_number(g, 20);
  EXPECT_FALSE(r.number.has_value());
  EXPECT_TRUE(is_proper_coloring(g, r.colors));
}

TEST(Solvers, AgreeWithExhaustiveOraclesOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const auto adj = adjacency(g);
    const auto omega = clique_number(g);
    const auto chi = chromatic_number(g);
    ASSERT_TRUE(omega.number && chi.number);
    ASSERT_EQ(static_cast<int>(*omega.number), oracle::clique_number(adj));
    ASSERT_EQ(static_cast<int>(*chi.number), oracle::chromatic_number(adj));
    ASSERT_GE(*chi.number, *omega.number);
    ASSERT_TRUE(is_proper_coloring(g, chi.colors));
  }
}
