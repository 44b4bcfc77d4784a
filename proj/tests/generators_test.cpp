#include <gtest/gtest.h>

#include <random>

#include "fibset/generators.hpp"
#include "oracles.hpp"

using namespace fibset;

namespace {
SubsetId S(std::vector<int> e, int n = 3) { return SubsetId::from_elements(e, n); }
const auto kF = SumSequence::fibonacci(24);

void expect_matches_oracle(const MultiGraph& g, const oracle::Table& t) {
  ASSERT_EQ(g.order(), t.subsets.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    ASSERT_EQ(g.meta()[v].elements(), t.subsets[v]);
    ASSERT_EQ(g.loops(v), static_cast<std::uint32_t>(t.loops[v]));
    for (Vertex u = 0; u < v; ++u) ASSERT_EQ(g.eps(u, v), static_cast<std::uint32_t>(t.eps[u][v])) << u << "," << v;
  }
}
}  // namespace

TEST(PairMultiplicity, Examples) {
  EXPECT_EQ(pair_multiplicity(S({1, 2}), S({1, 2, 3}), kF, EdgeSemantics::Inclusive), 4u);
  EXPECT_EQ(pair_multiplicity(S({1, 2}), S({1, 3}), kF, EdgeSemantics::Inclusive), 3u);
  EXPECT_EQ(pair_multiplicity(S({1, 2}), S({1, 3}), kF, EdgeSemantics::Strict), 2u);
  EXPECT_EQ(pair_multiplicity(S({3}), S({1, 3}), kF, EdgeSemantics::Strict), 0u);
  EXPECT_EQ(pair_multiplicity(S({3}), S({1, 3}), kF, EdgeSemantics::Inclusive), 0u);
}

TEST(PairMultiplicity, Errors) {
  EXPECT_THROW(pair_multiplicity(S({1}), S({1}), kF, EdgeSemantics::Strict), DomainError);
  EXPECT_THROW(pair_multiplicity(S({1}), S({2}), SumSequence::fibonacci(5), EdgeSemantics::Strict), BoundError);
  EXPECT_THROW(pair_multiplicity(S({1}), S({2}, 4), kF, EdgeSemantics::Strict), DomainError);
}

TEST(PairMultiplicity, SymmetricOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto seq = fibonacci_for(n);
    const std::uint64_t full = SubsetId::full_mask(n);
    const auto a = SubsetId::make((rng() & full) | (std::uint64_t{1} << (1 + rng() % n)), n);
    const auto b = SubsetId::make((rng() & full) | (std::uint64_t{1} << (1 + rng() % n)), n);
    if (a == b) continue;
    for (auto sem : {EdgeSemantics::Strict, EdgeSemantics::Inclusive}) {
      ASSERT_EQ(pair_multiplicity(a, b, seq, sem), pair_multiplicity(b, a, seq, sem));
    }
    ASSERT_GE(pair_multiplicity(a, b, seq, EdgeSemantics::Inclusive), pair_multiplicity(a, b, seq, EdgeSemantics::Strict));
  }
}

TEST(LoopCount, Examples) {
  EXPECT_EQ(loop_count(S({1, 2, 3}), kF), 2u);
  EXPECT_EQ(loop_count(S({1}), kF), 0u);
  EXPECT_EQ(loop_count(S({1, 2, 3, 4}, 4), kF), 3u);
  EXPECT_THROW(loop_count(S({1}), SumSequence::fibonacci(3)), BoundError);
}

TEST(FibSumGraph, Examples) {
  const auto p3 = gen_fib_sum_graph(3, kF);
  EXPECT_EQ(p3.edge_count(), 2u);
  EXPECT_TRUE(p3.adjacent(0, 1));
  EXPECT_TRUE(p3.adjacent(1, 2));
  EXPECT_EQ(gen_fib_sum_graph(1, kF).order(), 1u);
  EXPECT_EQ(gen_fib_sum_graph(1, kF).edge_count(), 0u);
  EXPECT_EQ(gen_fib_sum_graph(8, kF).edge_count(), 8u);
  EXPECT_EQ(static_cast<long>(gen_fib_sum_graph(8, kF).edge_count()), oracle::fib_pair_count(8));
}

TEST(SetGraph, Examples) {
  EXPECT_EQ(gen_set_graph(3).edge_count(), 15u);
  EXPECT_EQ(gen_set_graph(1).order(), 1u);
  const auto p = gen_set_graph(2);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_FALSE(p.adjacent(0, 1));
  EXPECT_THROW(gen_set_graph(8, 7), CapacityError);
}

TEST(FibSumSetGraph, MatchesDefinitionOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (bool inc : {false, true}) {
      const auto g = gen_fib_sum_set_graph(n, fibonacci_for(n), inc ? EdgeSemantics::Inclusive : EdgeSemantics::Strict);
      expect_matches_oracle(g, oracle::fib_sum_set(n, inc));
    }
  }
}

TEST(FibSumSetGraph, SmallCases) {
  const auto one = gen_fib_sum_set_graph(1, kF, EdgeSemantics::Inclusive);
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one.loops(0), 0u);
  for (auto sem : {EdgeSemantics::Strict, EdgeSemantics::Inclusive}) {
    const auto two = gen_fib_sum_set_graph(2, kF, sem);
    EXPECT_EQ(two.eps(0, 1), 1u);
    EXPECT_EQ(two.eps(0, 2), sem == EdgeSemantics::Strict ? 1u : 2u);
    EXPECT_EQ(two.eps(1, 2), 1u);
    EXPECT_EQ(two.loops(2), 1u);
  }
}

TEST(FibSumSetGraph, Errors) {
  EXPECT_THROW(gen_fib_sum_set_graph(3, SumSequence::fibonacci(5), EdgeSemantics::Strict), BoundError);
  EXPECT_THROW(gen_fib_sum_set_graph(8, fibonacci_for(8), EdgeSemantics::Strict, 7), CapacityError);
  EXPECT_THROW(gen_fib_sum_set_graph(13, fibonacci_for(13), EdgeSemantics::Strict), CapacityError);
  EXPECT_THROW(gen_fib_sum_set_graph(0, kF, EdgeSemantics::Strict), DomainError);
}

// The threaded fill kicks in at order >= 512.
TEST(FibSumSetGraph, ThreadedFillAgreesWithPairKernel) {
  const int n = 10;
  const auto seq = fibonacci_for(n);
  const auto g = gen_fib_sum_set_graph(n, seq, EdgeSemantics::Inclusive);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    const Vertex u = rng() % g.order(), v = rng() % g.order();
    if (u == v) continue;
    ASSERT_EQ(g.eps(u, v), pair_multiplicity(g.meta()[u], g.meta()[v], seq, EdgeSemantics::Inclusive));
  }
  for (Vertex v = 0; v < g.order(); v += 17) ASSERT_EQ(g.loops(v), loop_count(g.meta()[v], seq));
}

TEST(FibSumSetGraph, StrictDegreeClosedForm) {
  for (int n = 2; n <= 7; ++n) {
    const auto g = gen_fib_sum_set_graph(n, fibonacci_for(n), EdgeSemantics::Strict);
    const auto d = degrees(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      ASSERT_EQ(static_cast<long>(d[v]), oracle::strict_degree_closed_form(g.meta()[v].elements(), n));
    }
  }
}

TEST(FibSumSetGraph, SemanticsDifferOnlyOnSharedDoublingElements) {
  for (int n = 1; n <= 6; ++n) {
    const auto seq = fibonacci_for(n);
    const auto s = gen_fib_sum_set_graph(n, seq, EdgeSemantics::Strict);
    const auto i = gen_fib_sum_set_graph(n, seq, EdgeSemantics::Inclusive);
    for (Vertex v = 0; v < s.order(); ++v) {
      ASSERT_EQ(s.loops(v), i.loops(v));
      for (Vertex u = 0; u < v; ++u) {
        const std::uint64_t shared = s.meta()[u].mask & s.meta()[v].mask;
        bool doubling = false;
        for (int a : SubsetId{shared, n}.elements()) doubling |= seq.contains(2 * static_cast<std::uint64_t>(a));
        ASSERT_GE(i.eps(u, v), s.eps(u, v));
        ASSERT_EQ(i.eps(u, v) != s.eps(u, v), doubling);
      }
    }
  }
}

TEST(SetGraphOfGraph, Examples) {
  const auto k1 = gen_set_graph_of_graph(SimpleGraph(1), EdgeSemantics::Strict);
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_EQ(size(k1), (GraphSize{0, 0}));

  SimpleGraph p2(2);
  p2.add_edge(0, 1);
  const auto g = gen_set_graph_of_graph(p2, EdgeSemantics::Strict);
  ASSERT_EQ(g.order(), 3u);
  EXPECT_EQ(g.eps(0, 1), 1u);
  EXPECT_EQ(g.eps(0, 2), 1u);
  EXPECT_EQ(g.eps(1, 2), 1u);
  EXPECT_EQ(g.loops(2), 1u);
  EXPECT_EQ(gen_set_graph_of_graph(p2, EdgeSemantics::Inclusive), g);

  const auto empty = gen_set_graph_of_graph(SimpleGraph(2), EdgeSemantics::Strict);
  EXPECT_EQ(empty.order(), 3u);
  EXPECT_EQ(size(empty), (GraphSize{0, 0}));
}

// Using the Fibonacci-sum graph as host recovers the Strict set-graph.
TEST(SetGraphOfGraph, FibSumHostGivesStrictSetGraph) {
  for (int n = 1; n <= 6; ++n) {
    const auto seq = fibonacci_for(n);
    EXPECT_EQ(gen_set_graph_of_graph(gen_fib_sum_graph(n, seq), EdgeSemantics::Strict),
              gen_fib_sum_set_graph(n, seq, EdgeSemantics::Strict));
  }
}

TEST(DoublingStep, EqualsDirectGeneration) {
  for (int n = 1; n <= 5; ++n) {
    const auto seq = fibonacci_for(n + 1);
    for (auto sem : {EdgeSemantics::Strict, EdgeSemantics::Inclusive}) {
      const auto g = gen_fib_sum_set_graph(n, seq, sem);
      const auto next = gen_doubling_step(g, n, seq, sem, false);
      EXPECT_EQ(next, gen_fib_sum_set_graph(n + 1, seq, sem)) << n;
      EXPECT_NO_THROW(gen_doubling_step(g, n, seq, sem));
    }
  }
}

TEST(DoublingStep, RejectsWrongInput) {
  const auto seq = fibonacci_for(4);
  EXPECT_THROW(gen_doubling_step(MultiGraph(5), 3, seq, EdgeSemantics::Strict), DomainError);
  auto g = gen_fib_sum_set_graph(3, seq, EdgeSemantics::Strict);
  g.set_loops(0, 9);
  EXPECT_THROW(gen_doubling_step(g, 3, seq, EdgeSemantics::Strict), ConsistencyError);
}

TEST(LucasSequence, GeneratesWithOtherSums) {
  const auto seq = SumSequence::lucas(8);
  const auto g = gen_fib_sum_set_graph(3, seq, EdgeSemantics::Strict);
  // Lucas members up to 6: 1, 2, 3, 4. Pairs in {1,2,3}: 1+2, 1+3.
  EXPECT_EQ(g.loops(g.order() - 1), 2u);
  EXPECT_EQ(gen_fib_sum_graph(3, seq).edge_count(), 2u);
}
