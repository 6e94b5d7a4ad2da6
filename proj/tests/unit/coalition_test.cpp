#include <gtest/gtest.h>

#include <random>

#include "qcg/coalition.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/generators.hpp"
#include "random_games.hpp"

namespace qcg {
namespace {

TEST(CoalitionValues, ZeroOnTargets) {
  for (const auto& [name, g] : testing::fixture_games())
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      const ValueMap v = coalition_values(g.arena(), a);
      for (StateId s : g.targets(a)) EXPECT_EQ(v.values[s], Cost{}) << name;
    }
}

TEST(CoalitionValues, ExpNeLastStage) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Game g = gen_exp_ne(n);
    const ValueMap v = coalition_values(g.arena(), 0);
    EXPECT_EQ(v.values[n], Cost(std::uint64_t{1} << n)) << n;
  }
}

TEST(CoalitionValues, XorIsZeroForBothPlayers) {
  const Game g = gen_xor();
  EXPECT_EQ(coalition_values(g.arena(), 0).values, (std::vector<Cost>{Cost(0), Cost(0)}));
  EXPECT_EQ(coalition_values(g.arena(), 1).values, (std::vector<Cost>{Cost(0), Cost(0)}));
}

TEST(CoalitionValues, InfiniteWhereCoalitionCanBlock) {
  const Game g = gen_infinite_ne();
  const ValueMap v = coalition_values(g.arena(), 0);
  EXPECT_EQ(v.values[0], kInfinity);
  EXPECT_EQ(v.values[1], Cost{});
  EXPECT_EQ(v.values[2], kInfinity);
}

TEST(PunishingStrategy, ExpNePicksA) {
  const Game g = gen_exp_ne(2);
  const ValueMap v = coalition_values(g.arena(), 0);
  const PunishmentTable t = punishing_strategy(g.arena(), v);
  EXPECT_EQ(t.deviator, 0u);
  EXPECT_EQ(t.move(g.arena(), 2)[1], 0u);
  EXPECT_EQ(best_response_cost(g.arena(), t, 2), Cost(4));
}

TEST(PunishingStrategy, TiesGoToFirstAction) {
  const Game g = gen_xor();
  const PunishmentTable t = punishing_strategy(g.arena(), coalition_values(g.arena(), 0));
  EXPECT_EQ(t.move(g.arena(), 0)[1], 0u);
  EXPECT_EQ(t.move(g.arena(), 1)[1], 0u);
}

TEST(BestResponse, ZeroAtTargetAndInfiniteWhenBlocked) {
  const Game g = gen_infinite_ne();
  const PunishmentTable t = punishing_strategy(g.arena(), coalition_values(g.arena(), 0));
  EXPECT_EQ(best_response_cost(g.arena(), t, 1), Cost{});
  EXPECT_EQ(best_response_cost(g.arena(), t, 0), kInfinity);
}

void check_trace(const Arena& arena, PlayerId a) {
  ValueIterationTrace trace;
  const ValueMap v = coalition_values(arena, a, &trace);
  ASSERT_GE(trace.iterates.size(), 1u);
  const auto& t0 = trace.iterates.front();
  for (StateId s = 0; s < arena.num_states(); ++s)
    EXPECT_EQ(t0[s], arena.is_target(a, s) ? Cost{} : kInfinity);
  EXPECT_LE(trace.iterates.size() - 1, arena.num_states());
  for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i)
    for (StateId s = 0; s < arena.num_states(); ++s) EXPECT_LE(trace.iterates[i + 1][s], trace.iterates[i][s]);
  EXPECT_EQ(trace.iterates.back(), v.values);
  for (StateId s = 0; s < arena.num_states(); ++s)
    if (arena.is_target(a, s)) EXPECT_EQ(v.values[s], Cost{});
}

TEST(ValueIteration, MonotoneAndConvergesWithinStateCount) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    testing::RandomGameParams params;
    params.players = 1 + i % 3;
    params.max_states = 5;
    params.min_actions = 1;
    params.max_actions = 3;
    const Game g = testing::random_game(rng, params);
    for (PlayerId a = 0; a < params.players; ++a) check_trace(g.arena(), a);
  }
}

TEST(ValueIteration, PunishingStrategyAttainsTheValue) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    testing::RandomGameParams params;
    params.players = 1 + i % 3;
    params.max_states = 5;
    const Game g = testing::random_game(rng, params);
    for (PlayerId a = 0; a < params.players; ++a) {
      const ValueMap v = coalition_values(g.arena(), a);
      const auto br = best_response_costs(g.arena(), punishing_strategy(g.arena(), v));
      EXPECT_EQ(br, v.values);
    }
  }
}

TEST(LiftValues, ZeroOnceReached) {
  const Game g = gen_exp_ne(2);
  const ExpandedGame eg = expand(g);
  const auto lifted = lift_values(all_coalition_values(g.arena()), eg);
  for (StateId x = 0; x < eg.num_states(); ++x)
    for (PlayerId a = 0; a < 2; ++a) {
      const auto& l = eg.label(x);
      EXPECT_EQ(lifted[a].values[x], l.reached.contains(a) ? Cost{} : coalition_values(g.arena(), a).values[l.base]);
    }
}

TEST(LiftValues, AgreesWithValuesComputedOnTheExpandedGame) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    testing::RandomGameParams params;
    params.players = 2 + i % 2;
    const Game g = testing::random_game(rng, params);
    const ExpandedGame eg = expand(g);
    const auto lifted = lift_values(all_coalition_values(g.arena()), eg);
    for (PlayerId a = 0; a < params.players; ++a) EXPECT_EQ(coalition_values(eg.arena(), a).values, lifted[a].values);
  }
}

}  // namespace
}  // namespace qcg
