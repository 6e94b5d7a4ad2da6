#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcg/arena.hpp"
#include "qcg/cost.hpp"
#include "qcg/player_set.hpp"

namespace qcg {

/// Per-player action or wildcard (nullopt).
using ActionPattern = std::vector<std::optional<ActionId>>;

struct TransitionRule {
  StateId source = 0;
  ActionPattern pattern;
  StateId target = 0;
  CostVector cost;

  bool matches(std::span<const ActionId> profile) const;
  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

/// A single step (u, profile, w) together with its cost vector.
struct Transition {
  StateId source = 0;
  ActionProfile profile;
  StateId target = 0;
  CostVector cost;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Everything needed to build a Game; names are in declaration order.
struct GameDescription {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;  // per player
  std::vector<std::string> states;
  StateId initial = 0;
  std::vector<std::vector<StateId>> targets;      // per player
  std::vector<TransitionRule> rules;              // first match wins
};

/// A quantitative concurrent game. Immutable after construction; the
/// constructor validates the description and compiles the rule list into a
/// total successor table (throws InputError otherwise).
class Game {
 public:
  explicit Game(GameDescription description);

  std::size_t num_players() const noexcept { return desc_.players.size(); }
  std::size_t num_states() const noexcept { return desc_.states.size(); }
  StateId initial() const noexcept { return desc_.initial; }

  const std::vector<std::string>& players() const noexcept { return desc_.players; }
  const std::vector<std::string>& states() const noexcept { return desc_.states; }
  const std::vector<std::string>& actions(PlayerId p) const { return desc_.actions[p]; }
  const std::vector<StateId>& targets(PlayerId p) const { return desc_.targets[p]; }
  const std::vector<TransitionRule>& rules() const noexcept { return desc_.rules; }
  const GameDescription& description() const noexcept { return desc_; }

  std::optional<PlayerId> find_player(std::string_view name) const;
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ActionId> find_action(PlayerId p, std::string_view name) const;

  /// Index of the first rule matching (state, profile), if any.
  std::optional<std::size_t> first_matching_rule(StateId state, std::span<const ActionId> profile) const;

  /// delta(state, profile) with its cost, per the first matching rule.
  Transition successor(StateId state, std::span<const ActionId> profile) const;

  /// The compiled successor table.
  const Arena& arena() const noexcept { return arena_; }

  /// "(a,b)" using action names.
  std::string profile_name(std::span<const ActionId> profile) const;

  friend bool operator==(const Game& lhs, const Game& rhs) {
    return lhs.desc_.players == rhs.desc_.players && lhs.desc_.actions == rhs.desc_.actions &&
           lhs.desc_.states == rhs.desc_.states && lhs.desc_.initial == rhs.desc_.initial &&
           lhs.desc_.targets == rhs.desc_.targets && lhs.desc_.rules == rhs.desc_.rules;
  }

 private:
  GameDescription desc_;
  Arena arena_;
};

}  // namespace qcg
