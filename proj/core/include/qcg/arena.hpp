#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcg/cost.hpp"
#include "qcg/player_set.hpp"

namespace qcg {

using StateId = std::size_t;
using ActionId = std::size_t;

/// One action per player, indexed by player ordinal.
using ActionProfile = std::vector<ActionId>;

/// Mixed-radix numbering of the joint action space. Profile indices are the
/// little-endian mixed-radix encoding with player 0 as the lowest digit.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<std::size_t> alphabet_sizes);

  std::size_t num_players() const noexcept { return radix_.size(); }
  std::size_t num_profiles() const noexcept { return count_; }
  std::size_t alphabet_size(PlayerId p) const { return radix_[p]; }
  std::size_t stride(PlayerId p) const { return stride_[p]; }

  std::size_t index(std::span<const ActionId> profile) const;
  ActionProfile decode(std::size_t index) const;

  ActionId action(std::size_t index, PlayerId p) const { return (index / stride_[p]) % radix_[p]; }

  /// Same profile with player p's action replaced.
  std::size_t deviate(std::size_t index, PlayerId p, ActionId a) const {
    return index - action(index, p) * stride_[p] + a * stride_[p];
  }

  /// The profile with player p's digit zeroed; identifies the moves of
  /// everyone except p.
  std::size_t without(std::size_t index, PlayerId p) const { return deviate(index, p, 0); }

  friend bool operator==(const ProfileSpace&, const ProfileSpace&) = default;

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
  std::size_t count_ = 1;
};

/// Explicit concurrent game graph: a total successor table over
/// (state, profile) with a cost vector per entry and per-state target labels.
/// Both base games and F-expanded games are materialized as arenas.
class Arena {
 public:
  Arena() = default;
  Arena(ProfileSpace profiles, std::size_t num_states, StateId initial,
        std::vector<StateId> successors, std::vector<Cost> costs,
        std::vector<PlayerSet> targets_by_state);

  const ProfileSpace& profiles() const noexcept { return profiles_; }
  std::size_t num_players() const noexcept { return profiles_.num_players(); }
  std::size_t num_profiles() const noexcept { return profiles_.num_profiles(); }
  std::size_t num_states() const noexcept { return num_states_; }
  StateId initial() const noexcept { return initial_; }

  StateId successor(StateId s, std::size_t profile) const { return successors_[s * num_profiles() + profile]; }

  Cost cost(StateId s, std::size_t profile, PlayerId p) const {
    return costs_[(s * num_profiles() + profile) * num_players() + p];
  }
  std::span<const Cost> costs(StateId s, std::size_t profile) const {
    return {costs_.data() + (s * num_profiles() + profile) * num_players(), num_players()};
  }
  CostVector cost_vector(StateId s, std::size_t profile) const {
    auto c = costs(s, profile);
    return {c.begin(), c.end()};
  }

  /// Players whose target set contains s.
  PlayerSet targets_at(StateId s) const { return targets_[s]; }
  bool is_target(PlayerId p, StateId s) const { return targets_[s].contains(p); }

  Cost max_cost() const;

 private:
  ProfileSpace profiles_;
  std::size_t num_states_ = 0;
  StateId initial_ = 0;
  std::vector<StateId> successors_;
  std::vector<Cost> costs_;
  std::vector<PlayerSet> targets_;
};

}  // namespace qcg
