#pragma once

#include <cstddef>
#include <vector>

#include "qcg/arena.hpp"
#include "qcg/cost.hpp"

namespace qcg {

class ExpandedGame;

/// Punishment values C_p(u): the largest cost of player p (until it first
/// visits its target) that the coalition of all other players can guarantee
/// from u. Infinite entries mark states from which the coalition can keep p
/// away from its target forever.
struct ValueMap {
  PlayerId player = 0;
  std::vector<Cost> values;  // per state

  friend bool operator==(const ValueMap&, const ValueMap&) = default;
};

/// Iterates of the value iteration, T_0 .. T_k, with T_k == T_{k+1}.
struct ValueIterationTrace {
  std::vector<std::vector<Cost>> iterates;
};

/// Min-max value iteration
///
///     T_0(v)     = 0 on F(p), inf elsewhere
///     T_{i+1}(v) = max_{coalition move b} min_{a in Act_p} cost_p(v,a,b) + T_i(delta(v,a,b))
///
/// with target states frozen at 0. Runs until T_{i+1} == T_i, which happens
/// within |V| rounds; throws std::logic_error if it does not.
ValueMap coalition_values(const Arena& arena, PlayerId player, ValueIterationTrace* trace = nullptr);

/// coalition_values for every player.
std::vector<ValueMap> all_coalition_values(const Arena& arena);

/// Lifts base-game values to the expanded game: C*_p((v,S)) is 0 when p is in
/// S and C_p(v) otherwise.
ValueMap lift_values(const ValueMap& base, const ExpandedGame& egame);
std::vector<ValueMap> lift_values(const std::vector<ValueMap>& base, const ExpandedGame& egame);

/// Memoryless coalition strategy against a deviating player: for every state,
/// the joint move of everyone except the deviator, encoded as a profile index
/// whose deviator digit is zero.
struct PunishmentTable {
  PlayerId deviator = 0;
  std::vector<std::size_t> coalition_move;  // per state

  /// The move as a full profile; the deviator's entry is 0 and meaningless.
  ActionProfile move(const Arena& arena, StateId s) const { return arena.profiles().decode(coalition_move[s]); }
};

/// Picks, at every state, the coalition move attaining the outer max of the
/// fixpoint equation. Ties go to the smallest profile index, i.e. the
/// earliest-declared actions. Target states get the all-first move.
PunishmentTable punishing_strategy(const Arena& arena, const ValueMap& values);

/// Cost for the deviator of the cheapest path to its target once the
/// coalition is fixed to `table` (Dijkstra on the one-player graph).
Cost best_response_cost(const Arena& arena, const PunishmentTable& table, StateId from);
std::vector<Cost> best_response_costs(const Arena& arena, const PunishmentTable& table);

}  // namespace qcg
