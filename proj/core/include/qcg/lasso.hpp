#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcg/arena.hpp"
#include "qcg/cost.hpp"
#include "qcg/player_set.hpp"

namespace qcg {

class ExpandedGame;
class Game;
struct ValueMap;

/// One transition of an outcome in the expanded game: the source state and
/// the profile index played there. The target is implied by the arena.
struct Step {
  StateId state = 0;
  std::size_t profile = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A finite prefix followed by a simple cycle, both over expanded states.
/// The first step of the cycle starts where the prefix ends (or at the
/// initial state when the prefix is empty), and the last cycle step returns
/// to that state.
struct Lasso {
  std::vector<Step> prefix;
  std::vector<Step> cycle;

  /// prefix followed by `unrollings` copies of the cycle.
  std::vector<Step> unrolled(std::size_t unrollings = 1) const;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// Throws InputError unless the lasso starts at the initial state, is
/// continuous, and has a nonempty simple cycle closing on itself.
void validate_lasso(const ExpandedGame& egame, const Lasso& lasso);

/// Players whose targets are visited (the reached set on the cycle).
PlayerSet lasso_winners(const ExpandedGame& egame, const Lasso& lasso);

/// Cost of the infinite outcome prefix . cycle^omega: per player, the sum of
/// cost* until its target is first visited, or infinity if never.
CostVector outcome_cost(const ExpandedGame& egame, const Lasso& lasso);

/// A base-game step as written in lasso files.
struct BaseStep {
  StateId state = 0;
  ActionProfile profile;
};

/// Replays base-game steps through the expanded game. Throws InputError if a
/// step's state disagrees with the replayed position or the cycle does not
/// close in the expanded game.
Lasso lasso_from_base(const Game& game, const ExpandedGame& egame, std::span<const BaseStep> prefix,
                      std::span<const BaseStep> cycle);

/// Inverse of lasso_from_base.
std::pair<std::vector<BaseStep>, std::vector<BaseStep>> lasso_to_base(const ExpandedGame& egame, const Lasso& lasso);

/// "s -(a,b)-> t ..." rendering, for diagnostics.
std::string describe_lasso(const Game& game, const ExpandedGame& egame, const Lasso& lasso);

}  // namespace qcg
