#include <gtest/gtest.h>

#include <set>

#include "fibset/verify.hpp"

using namespace fibset;

namespace {
const ClaimReport& find(const std::vector<ClaimReport>& rs, std::string_view id, int n, EdgeSemantics sem) {
  for (const auto& r : rs) {
    if (r.claim_id == id && r.n == n && r.semantics == sem) return r;
  }
  throw std::runtime_error("missing report");
}

SuiteOptions range(int from, int to) {
  SuiteOptions o;
  o.n_from = from;
  o.n_to = to;
  return o;
}
}  // namespace

TEST(Suite, ThreeStrictAndInclusive) {
  const auto rs = run_suite(range(3, 3));
  EXPECT_EQ(find(rs, "THM_2_7", 3, EdgeSemantics::Strict).status, ClaimStatus::Pass);
  const auto& inc = find(rs, "THM_2_7", 3, EdgeSemantics::Inclusive);
  EXPECT_EQ(inc.status, ClaimStatus::Fail);
  EXPECT_EQ(inc.witness, "v_{1,1} degree 7");
  EXPECT_FALSE(deviates(inc));
  EXPECT_EQ(find(rs, "PROP_2_9", 3, EdgeSemantics::Inclusive).detail, "19 <= 6 + 15 (strict)");
  EXPECT_EQ(find(rs, "PROP_2_9_PROOF_VALUES", 3, EdgeSemantics::Inclusive).status, ClaimStatus::Pass);
  EXPECT_EQ(find(rs, "FIG_2_GOLDEN", 3, EdgeSemantics::Inclusive).status, ClaimStatus::Pass);
  EXPECT_EQ(find(rs, "FIG_2_GOLDEN", 3, EdgeSemantics::Strict).status, ClaimStatus::Fail);
  EXPECT_EQ(find(rs, "OMEGA_POPPED", 3, EdgeSemantics::Strict).detail, "omega = 5");
  EXPECT_EQ(find(rs, "CHI_POPPED", 3, EdgeSemantics::Inclusive).detail, "chi = 6, omega = 6");
  EXPECT_EQ(std::count_if(rs.begin(), rs.end(), deviates), 0);
}

TEST(Suite, CompleteAndOrdered) {
  const auto rs = run_suite(range(1, 4));
  EXPECT_EQ(rs.size(), kClaimIds.size() * 4 * 2);
  std::set<std::tuple<std::string, int, EdgeSemantics>> seen;
  for (const auto& r : rs) {
    EXPECT_TRUE(seen.emplace(r.claim_id, r.n, r.semantics).second);
    if (r.status == ClaimStatus::Fail) {
      EXPECT_FALSE(r.witness.empty()) << r.claim_id;
    }
  }
  EXPECT_EQ(rs.front().claim_id, "ORDER_SIZE");
  EXPECT_EQ(rs.back().claim_id, "CHI_POPPED");
}

TEST(Suite, Deterministic) {
  auto opt = range(1, 5);
  const auto a = run_suite(opt);
  opt.parallel = false;
  const auto b = run_suite(opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].claim_id, b[k].claim_id);
    EXPECT_EQ(a[k].n, b[k].n);
    EXPECT_EQ(a[k].status, b[k].status);
    EXPECT_EQ(a[k].witness, b[k].witness);
    EXPECT_EQ(a[k].detail, b[k].detail);
  }
}

TEST(Suite, NOneAllPass) {
  for (const auto& r : run_suite(range(1, 1))) {
    EXPECT_TRUE(r.status == ClaimStatus::Pass || r.status == ClaimStatus::NotApplicable) << r.claim_id;
  }
}

TEST(Suite, AboveCapUsesCountingOrSkips) {
  auto opt = range(9, 9);
  opt.materialize_cap = 7;
  opt.semantics = {EdgeSemantics::Strict};
  const auto rs = run_suite(opt);
  EXPECT_EQ(find(rs, "THM_2_6", 9, EdgeSemantics::Strict).status, ClaimStatus::Pass);
  EXPECT_EQ(find(rs, "LEM_2_4", 9, EdgeSemantics::Strict).status, ClaimStatus::Pass);
  EXPECT_EQ(find(rs, "THM_2_5", 9, EdgeSemantics::Strict).status, ClaimStatus::Pass);
  EXPECT_EQ(find(rs, "THM_2_7", 9, EdgeSemantics::Strict).status, ClaimStatus::SkippedBudget);
  EXPECT_EQ(find(rs, "COR_2_3", 9, EdgeSemantics::Strict).status, ClaimStatus::SkippedBudget);
}

TEST(Suite, TinyBudgetSkipsRatherThanFails) {
  auto opt = range(4, 4);
  opt.budget = 2;
  for (const auto& r : run_suite(opt)) {
    if (r.claim_id == "COR_2_3" || r.claim_id == "OMEGA_POPPED" || r.claim_id == "CHI_POPPED") {
      EXPECT_EQ(r.status, ClaimStatus::SkippedBudget) << r.claim_id;
    }
  }
}

TEST(Expectation, Table) {
  EXPECT_EQ(expectation("THM_2_7", EdgeSemantics::Strict), Expectation::Pass);
  EXPECT_EQ(expectation("THM_2_7", EdgeSemantics::Inclusive), Expectation::Unasserted);
  EXPECT_EQ(expectation("COR_2_8", EdgeSemantics::Inclusive), Expectation::Unasserted);
  EXPECT_EQ(expectation("FIG_2_GOLDEN", EdgeSemantics::Strict), Expectation::Unasserted);
  EXPECT_EQ(expectation("PROP_2_9_PROOF_VALUES", EdgeSemantics::Inclusive), Expectation::Pass);
  EXPECT_EQ(expectation("PROP_2_9", EdgeSemantics::Inclusive), Expectation::Pass);
}

TEST(Prop29, SmallCases) {
  const auto inc = check_prop_2_9(3, EdgeSemantics::Inclusive);
  EXPECT_EQ(inc.status, ClaimStatus::Pass);
  EXPECT_EQ(inc.detail, "19 <= 6 + 15 (strict)");
  const auto strict = check_prop_2_9(3, EdgeSemantics::Strict);
  EXPECT_EQ(strict.status, ClaimStatus::Pass);
  EXPECT_EQ(strict.detail, "18 <= 6 + 12 (equality)");
  EXPECT_EQ(check_prop_2_9(1, EdgeSemantics::Strict).detail, "0 <= 0 + 0 (equality)");
  const auto v = prop_2_9_values(gen_fib_sum_set_graph(3, fibonacci_for(3), EdgeSemantics::Inclusive), 3);
  EXPECT_EQ(v.popped_without_full, 13u);
}

// The displayed inequality fails from n = 4 on; the report carries the numbers.
TEST(Prop29, CounterexampleAtFour) {
  const auto r = check_prop_2_9(4, EdgeSemantics::Strict);
  EXPECT_EQ(r.status, ClaimStatus::Fail);
  EXPECT_EQ(r.witness, "92 > 14 + 42");
  EXPECT_TRUE(deviates(r));
  EXPECT_EQ(check_prop_2_9(4, EdgeSemantics::Inclusive).witness, "96 > 14 + 56");
}

TEST(Figure2, MismatchNamesPair) {
  auto g = gen_fib_sum_set_graph(3, fibonacci_for(3), EdgeSemantics::Inclusive);
  EXPECT_EQ(figure2_mismatch(g), "");
  g.set_eps(3, 6, 9);
  EXPECT_EQ(figure2_mismatch(g), "eps(v_{2,1},v_{3,1})=9 drawn 4");
}
