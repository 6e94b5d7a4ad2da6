#include <gtest/gtest.h>

#include <random>

#include "qcg/coalition.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/generators.hpp"
#include "qcg/parser.hpp"
#include "random_games.hpp"

namespace qcg {
namespace {

const PlayerSet kBoth(0b11);

StateId find(const ExpandedGame& eg, StateId base, PlayerSet reached) {
  auto x = eg.find(ExpandedState{base, reached});
  EXPECT_TRUE(x.has_value());
  return x.value_or(0);
}

TEST(Expand, InfiniteNeGame) {
  const Game g = gen_infinite_ne();
  const ExpandedGame eg = expand(g);
  // s, t and the sink that catches mismatched profiles.
  EXPECT_EQ(eg.num_states(), 3u);
  EXPECT_EQ(eg.label(eg.initial()), (ExpandedState{0, PlayerSet{}}));
  const StateId t = find(eg, 1, kBoth);
  const std::size_t bb = g.arena().profiles().index(std::vector<ActionId>{1, 1});
  EXPECT_EQ(eg.arena().successor(eg.initial(), bb), t);
  EXPECT_EQ(eg.arena().cost_vector(eg.initial(), bb), (CostVector{Cost(1), Cost(1)}));
  EXPECT_EQ(eg.arena().cost_vector(t, bb), (CostVector{Cost(0), Cost(0)}));
}

TEST(Expand, ExpNeWithOneStage) {
  const ExpandedGame eg = expand(gen_exp_ne(1));
  EXPECT_EQ(eg.num_states(), 3u);
  find(eg, 0, PlayerSet{});
  find(eg, 1, PlayerSet{});
  find(eg, 2, kBoth);
}

TEST(Expand, InitialStateInEveryTarget) {
  const Game g = parse_game(R"(players p q
actions p: a b
actions q: a
state s init target: p q
state u
trans s [a,*] -> u cost [4,5]
trans s [*,*] -> s cost [1,1]
trans u [*,*] -> s cost [3,3]
)");
  const ExpandedGame eg = expand(g);
  EXPECT_EQ(eg.label(eg.initial()).reached, kBoth);
  for (StateId x = 0; x < eg.num_states(); ++x) {
    EXPECT_EQ(eg.label(x).reached, kBoth);
    for (std::size_t p = 0; p < eg.arena().num_profiles(); ++p)
      EXPECT_EQ(eg.arena().cost_vector(x, p), (CostVector{Cost(0), Cost(0)}));
  }
}

TEST(Expand, TargetsOfExpandedArenaAreReachedSets) {
  const ExpandedGame eg = expand(gen_exp_ne(2));
  for (StateId x = 0; x < eg.num_states(); ++x) EXPECT_EQ(eg.arena().targets_at(x), eg.label(x).reached);
}

std::vector<ValueMap> punishment(const ExpandedGame& eg, const Game& g) {
  return lift_values(all_coalition_values(g.arena()), eg);
}

TEST(SafeRestrict, AllWinnersKeepsEverything) {
  const Game g = gen_exp_ne(2);
  const ExpandedGame eg = expand(g);
  const auto r = safe_restrict(eg, kBoth, punishment(eg, g));
  EXPECT_EQ(r.num_transitions(), eg.num_states() * eg.arena().num_profiles());
  for (StateId x = 0; x < eg.num_states(); ++x) EXPECT_TRUE(r.reachable[x]);
}

TEST(SafeRestrict, XorWithOneWinnerIsEmpty) {
  const Game g = gen_xor();
  const ExpandedGame eg = expand(g);
  EXPECT_TRUE(safe_restrict(eg, PlayerSet(0b01), punishment(eg, g)).empty());
  EXPECT_TRUE(safe_restrict(eg, PlayerSet(0b10), punishment(eg, g)).empty());
}

TEST(SafeRestrict, InfiniteNeWithNoWinners) {
  const Game g = gen_infinite_ne();
  const ExpandedGame eg = expand(g);
  const auto r = safe_restrict(eg, PlayerSet{}, punishment(eg, g));
  // only the (a,a) loop at s keeps both players inside the infinite region
  EXPECT_EQ(r.safe_profiles[eg.initial()], (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.num_transitions(), 1u);
  EXPECT_TRUE(r.reachable[eg.initial()]);
}

TEST(SafeRestrict, SafeTransitionsSatisfyDefinition) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    testing::RandomGameParams params;
    params.players = 2 + i % 2;
    const Game g = testing::random_game(rng, params);
    const ExpandedGame eg = expand(g);
    const auto punish = punishment(eg, g);
    const auto& space = eg.arena().profiles();
    for (std::uint32_t w = 0; w < (1u << params.players); ++w) {
      const PlayerSet winners(w);
      const auto r = safe_restrict(eg, winners, punish);
      for (StateId x = 0; x < eg.num_states(); ++x) {
        if (!r.reachable[x]) continue;
        for (std::size_t p = 0; p < space.num_profiles(); ++p) {
          bool safe = true;
          for (PlayerId a : winners.complement(params.players).members())
            for (ActionId act = 0; act < space.alphabet_size(a); ++act)
              if (punish[a].values[eg.arena().successor(x, space.deviate(p, a, act))].is_finite()) safe = false;
          const auto& kept = r.safe_profiles[x];
          EXPECT_EQ(std::find(kept.begin(), kept.end(), p) != kept.end(), safe);
        }
      }
    }
  }
}

TEST(Expand, ReachedSetsGrowAndCostsMatchFirstVisit) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    testing::RandomGameParams params;
    params.players = 1 + i % 3;
    params.max_states = 5;
    const Game g = testing::random_game(rng, params);
    const Arena& base = g.arena();
    const ExpandedGame eg = expand(g);
    const std::size_t k = params.players;

    StateId v = base.initial();
    StateId x = eg.initial();
    CostVector expanded(k), direct(k);
    PlayerSet visited = base.targets_at(v);
    std::uniform_int_distribution<std::size_t> pick(0, base.num_profiles() - 1);
    for (int step = 0; step < 12; ++step) {
      const std::size_t p = pick(rng);
      for (PlayerId a = 0; a < k; ++a) {
        expanded[a] += eg.arena().cost(x, p, a);
        if (!visited.contains(a)) direct[a] += base.cost(v, p, a);
      }
      const StateId x2 = eg.arena().successor(x, p);
      v = base.successor(v, p);
      visited = visited | base.targets_at(v);
      EXPECT_TRUE(eg.label(x).reached.is_subset_of(eg.label(x2).reached));
      x = x2;
      EXPECT_EQ(eg.label(x).base, v);
      EXPECT_EQ(eg.label(x).reached, visited);
    }
    EXPECT_EQ(expanded, direct);
  }
}

}  // namespace
}  // namespace qcg
