#include <gtest/gtest.h>

#include <random>

#include "qcg/errors.hpp"
#include "qcg/generators.hpp"
#include "qcg/oracle.hpp"
#include "random_games.hpp"

namespace qcg {
namespace {

std::vector<CostVector> costs_of(const std::vector<FrontierEntry>& entries) {
  std::vector<CostVector> out;
  for (const auto& e : entries) out.push_back(e.cost);
  return out;
}

TEST(OracleCoalition, MatchesFixtures) {
  for (const auto& [name, g] : testing::fixture_games())
    for (PlayerId a = 0; a < g.num_players(); ++a)
      EXPECT_EQ(oracle_coalition_values(g.arena(), a).values, coalition_values(g.arena(), a).values) << name;
}

TEST(OracleCoalition, StrategyCap) {
  OracleOptions options;
  options.strategy_cap = 3;
  EXPECT_THROW(oracle_coalition_values(gen_exp_ne(3).arena(), 0, options), CapExceeded);
}

TEST(OracleFrontier, MatchesFixtures) {
  for (const auto& [name, g] : testing::fixture_games())
    EXPECT_EQ(costs_of(oracle_ne_po(g)), costs_of(compute_ne_po(g))) << name;
}

TEST(OracleFrontier, WitnessesAreEquilibria) {
  const Game g = gen_exp_ne(2);
  const ExpandedGame eg = expand(g);
  const auto punish = lift_values(all_coalition_values(g.arena()), eg);
  for (const auto& e : oracle_ne_po(g)) {
    EXPECT_TRUE(check_ne(eg, e.witness, punish).is_ne);
    EXPECT_EQ(outcome_cost(eg, e.witness), e.cost);
  }
}

TEST(OracleFrontier, PathCap) {
  OracleOptions options;
  options.path_cap = 2;
  EXPECT_THROW(oracle_ne_po(gen_exp_ne(3), options), CapExceeded);
}

TEST(OracleDecision, Partition) {
  EXPECT_TRUE(oracle_partition({{1, 1}}));
  EXPECT_TRUE(oracle_partition({{3, 1, 1, 2, 2, 1}}));
  EXPECT_FALSE(oracle_partition({{1, 2}}));
  EXPECT_FALSE(oracle_partition({{5}}));
  EXPECT_THROW(oracle_partition({std::vector<std::uint64_t>(21, 1)}), CapExceeded);
}

TEST(OracleDecision, Sat) {
  CnfFormula sat{1, {Clause{Literal{0, false}, Literal{0, false}, Literal{0, false}}}};
  EXPECT_TRUE(oracle_sat(sat));
  CnfFormula unsat = sat;
  unsat.clauses.push_back(Clause{Literal{0, true}, Literal{0, true}, Literal{0, true}});
  EXPECT_FALSE(oracle_sat(unsat));
  EXPECT_TRUE(oracle_decision(DecisionInstance{sat}));
  CnfFormula big{17, {}};
  EXPECT_THROW(oracle_sat(big), CapExceeded);
}

TEST(OracleDecision, HamPath) {
  EXPECT_TRUE(oracle_hampath({Digraph{3, {{0, 1}, {1, 2}}}, 0}));
  EXPECT_FALSE(oracle_hampath({Digraph{3, {{0, 1}, {1, 2}}}, 1}));
  EXPECT_FALSE(oracle_hampath({Digraph{2, {}}, 0}));
  EXPECT_TRUE(oracle_hampath({Digraph{1, {}}, 0}));
  EXPECT_THROW(oracle_hampath({Digraph{9, {}}, 0}), CapExceeded);
}

TEST(OracleCoalition, MatchesValueIterationOnRandomGames) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    testing::RandomGameParams params;
    params.players = 2 + i % 2;
    params.max_states = 4;
    const Game g = testing::random_game(rng, params);
    for (PlayerId a = 0; a < params.players; ++a)
      EXPECT_EQ(oracle_coalition_values(g.arena(), a).values, coalition_values(g.arena(), a).values);
  }
}

}  // namespace
}  // namespace qcg
