#pragma once

#include <span>
#include <vector>

#include "qcg/expanded_game.hpp"

namespace qcg::detail {

/// For every (expanded state, profile), the players p for which some profile
/// differing at most in p's action leads to a finite punishment value of p.
/// A transition is safe for W iff its entry is disjoint from the complement
/// of W. Indexed by state * num_profiles + profile.
std::vector<PlayerSet> unsafe_players(const ExpandedGame& egame, std::span<const ValueMap> punish);

SafeRestriction restrict_with(const ExpandedGame& egame, PlayerSet winners, std::span<const PlayerSet> unsafe);

}  // namespace qcg::detail
