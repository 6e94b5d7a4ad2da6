#include <gtest/gtest.h>

#include "qcg/generators.hpp"
#include "qcg/metrics.hpp"

namespace qcg {
namespace {

TEST(Ratio, LowestTermsAndRendering) {
  EXPECT_EQ(Ratio::of(10, 4), Ratio::of(5, 2));
  EXPECT_EQ(Ratio::of(10, 4).num(), 5u);
  EXPECT_EQ(Ratio::of(10, 4).den(), 2u);
  EXPECT_EQ(Ratio::of(10, 4).str(), "5/2");
  EXPECT_EQ(Ratio::of(6, 3).str(), "2");
  EXPECT_DOUBLE_EQ(Ratio::of(1, 4).to_double(), 0.25);
  EXPECT_TRUE(Ratio::infinity().is_infinite());
  EXPECT_EQ(Ratio::infinity().str(), "inf");
}

TEST(SocialOptimum, Fixtures) {
  EXPECT_EQ(social_optimum(gen_xor()), Cost(1));
  EXPECT_EQ(social_optimum(gen_exp_ne(3)), Cost(7));
  EXPECT_EQ(social_optimum(gen_infinite_ne()), Cost(2));
  EXPECT_EQ(social_optimum(gen_pos(5)), Cost(1));
}

TEST(PosPoa, NoEquilibrium) {
  const MetricsReport r = pos_poa(gen_xor());
  EXPECT_FALSE(r.has_ne);
  EXPECT_FALSE(r.pos);
  EXPECT_FALSE(r.poa);
}

TEST(PosPoa, ExpNeIsEfficient) {
  const MetricsReport r = pos_poa(gen_exp_ne(3));
  EXPECT_TRUE(r.has_ne);
  EXPECT_EQ(r.best_ne_util, Cost(7));
  EXPECT_EQ(r.worst_ne_util, Cost(7));
  EXPECT_EQ(r.unbounded, Unboundedness::kNone);
  EXPECT_EQ(r.pos, Ratio::of(1, 1));
  EXPECT_EQ(r.poa, Ratio::of(1, 1));
  EXPECT_TRUE(r.poa_is_lower_bound);
}

TEST(PosPoa, InfiniteNeIsPumpable) {
  const MetricsReport r = pos_poa(gen_infinite_ne());
  EXPECT_EQ(r.social_optimum, Cost(2));
  EXPECT_EQ(r.pos, Ratio::of(1, 1));
  EXPECT_EQ(r.unbounded, Unboundedness::kPump);
  EXPECT_EQ(r.poa, Ratio::infinity());
  EXPECT_FALSE(r.poa_is_lower_bound);
  ASSERT_TRUE(r.pump);
}

TEST(PosPoa, PosGameGrowsWithW) {
  for (std::uint64_t w : {1u, 5u, 40u}) {
    const MetricsReport r = pos_poa(gen_pos(w));
    EXPECT_EQ(r.social_optimum, Cost(1));
    EXPECT_EQ(r.pos, Ratio::of(2 * w, 1)) << w;
    EXPECT_EQ(r.poa, Ratio::infinity());
  }
}

TEST(Pump, WitnessIsConsistent) {
  const Game g = gen_infinite_ne();
  const auto analysis = analyze_equilibria(g);
  bool capped = true;
  const auto pump = detect_pump(analysis, 10'000, &capped);
  ASSERT_TRUE(pump);
  EXPECT_FALSE(capped);
  EXPECT_TRUE(pump_is_valid(analysis.egame, analysis.punish, pump->base, pump->position, pump->cycle));
  EXPECT_TRUE(check_ne(analysis.egame, pump->base, analysis.punish).is_ne);
  EXPECT_TRUE(check_ne(analysis.egame, pump->pumped, analysis.punish).is_ne);
  EXPECT_GT(utility(outcome_cost(analysis.egame, pump->pumped)), utility(outcome_cost(analysis.egame, pump->base)));
  EXPECT_TRUE(utility(outcome_cost(analysis.egame, pump->pumped)).is_finite());
}

TEST(Pump, NoneForExpNe) {
  const auto analysis = analyze_equilibria(gen_exp_ne(2));
  bool capped = true;
  EXPECT_FALSE(detect_pump(analysis, 10'000, &capped));
  EXPECT_FALSE(capped);
}

TEST(Pump, InvalidInsertionIsRejected) {
  const auto analysis = analyze_equilibria(gen_infinite_ne());
  ASSERT_FALSE(analysis.frontier.empty());
  const Lasso& base = analysis.frontier.front().witness;
  // the t self-loop sits after both players reached, so it adds nothing
  EXPECT_FALSE(pump_is_valid(analysis.egame, analysis.punish, base, base.prefix.size(), base.cycle));
}

}  // namespace
}  // namespace qcg
