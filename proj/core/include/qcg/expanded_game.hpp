#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qcg/arena.hpp"
#include "qcg/player_set.hpp"

namespace qcg {

class Game;
struct ValueMap;

/// A state of the F-expanded game: a base state plus the players that have
/// already visited their targets.
struct ExpandedState {
  StateId base = 0;
  PlayerSet reached;

  friend auto operator<=>(const ExpandedState&, const ExpandedState&) = default;
};

/// The F-expanded game restricted to the states reachable from
/// (v0, {players targeting v0}). Its arena carries cost* (zero for players
/// already in `reached` of the source) and targets F*_p = {(v,S) : p in S}.
class ExpandedGame {
 public:
  ExpandedGame(Arena arena, std::vector<ExpandedState> labels);

  const Arena& arena() const noexcept { return arena_; }
  std::size_t num_states() const noexcept { return labels_.size(); }
  std::size_t num_players() const noexcept { return arena_.num_players(); }
  StateId initial() const noexcept { return arena_.initial(); }

  const ExpandedState& label(StateId s) const { return labels_[s]; }
  const std::vector<ExpandedState>& labels() const noexcept { return labels_; }
  std::optional<StateId> find(const ExpandedState& state) const;

 private:
  Arena arena_;
  std::vector<ExpandedState> labels_;
  std::unordered_map<std::uint64_t, StateId> index_;
};

/// Builds the reachable part of the F-expanded game. The reached set grows
/// with the *target* of each transition: (v,S) --a--> (v', S u {p : v' in F_p}).
/// Throws CapExceeded beyond 2^24 transitions.
ExpandedGame expand(const Arena& base);
ExpandedGame expand(const Game& game);

/// Transitions of an expanded game that are safe for a winner set W: for
/// every player p outside W and every profile differing from the chosen one
/// at most in p's action, the punishment value of p at the successor is
/// infinite. Only states reachable from the initial state through safe
/// transitions are kept.
struct SafeRestriction {
  PlayerSet winners;
  std::vector<std::vector<std::size_t>> safe_profiles;  // per expanded state
  std::vector<bool> reachable;                          // per expanded state

  std::size_t num_transitions() const;
  bool empty() const { return num_transitions() == 0; }
};

/// `punish[p]` are the punishment values of player p over expanded states.
SafeRestriction safe_restrict(const ExpandedGame& egame, PlayerSet winners, std::span<const ValueMap> punish);

}  // namespace qcg
