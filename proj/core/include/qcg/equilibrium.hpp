#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcg/coalition.hpp"
#include "qcg/cost.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/lasso.hpp"
#include "qcg/player_set.hpp"

namespace qcg {

class Game;

/// A profitable unilateral deviation: at `position` along the unrolled
/// outcome, `player` switches to `action` and gains `improvement`.
struct Deviation {
  std::size_t position = 0;
  PlayerId player = 0;
  ActionId action = 0;
  Cost improvement;
};

struct NEVerdict {
  bool is_ne = false;
  std::optional<Deviation> witness;
};

/// Nash criterion on the outcome prefix . cycle^omega: for every player p,
/// every position j of the prefix and of one cycle unrolling, and every
/// action a' != a_j[p], with b the deviated profile and u = delta(v_j, b):
///
///     cost_p(prefix up to j) + cost_p(v_j, b) + C_p(u) >= cost_p(outcome)
///
/// `punish` holds C_p over expanded states for every player. Throws
/// InputError for an invalid lasso.
NEVerdict check_ne(const ExpandedGame& egame, const Lasso& lasso, std::span<const ValueMap> punish);

/// The same criterion evaluated the way the frontier search does: safety of
/// every transition for the losers, and suffix cost <= cost of the deviating
/// step + punishment for every winner. Agrees with check_ne on valid lassos.
bool suffix_criterion_holds(const ExpandedGame& egame, const Lasso& lasso, std::span<const ValueMap> punish);

/// A Pareto-optimal NE cost vector with a witnessing outcome.
struct FrontierEntry {
  CostVector cost;
  PlayerSet winners;
  Lasso witness;
};

struct SolverOptions {
  /// Guard on the loop over all 2^|players| winner sets.
  std::size_t player_cap = 12;
};

/// Everything the frontier search produces.
struct EquilibriumAnalysis {
  ExpandedGame egame;
  std::vector<ValueMap> punish;             // over expanded states, per player
  std::vector<FrontierEntry> frontier;      // Pareto-minimal, sorted by cost
  std::vector<FrontierEntry> discovered;    // every NE vector the search kept, per winner set
};

/// Winner-set dynamic program. For each W, restricts the expanded game to
/// transitions safe for W, seeds the W-region states that admit an infinite
/// safe path, and grows suffix-cost sets backwards for |players|*|V| rounds
/// under the per-winner deviation bound. Every reported witness is
/// re-checked with check_ne. Throws CapExceeded above the player cap.
EquilibriumAnalysis analyze_equilibria(const Game& game, const SolverOptions& options = {});

std::vector<FrontierEntry> compute_ne_po(const Game& game, const SolverOptions& options = {});

bool ne_exists(const Game& game, const SolverOptions& options = {});

struct ThresholdAnswer {
  bool satisfied = false;
  std::optional<FrontierEntry> witness;
};

/// Is there an NE whose cost vector is componentwise <= bound? Throws
/// InputError if the bound has the wrong length.
ThresholdAnswer threshold_ne(const Game& game, const CostVector& bound, const SolverOptions& options = {});

/// Minimal antichain under componentwise <=, sorted lexicographically and
/// without duplicates. Throws InputError on mixed lengths.
std::vector<CostVector> pareto_filter(std::vector<CostVector> vectors);

/// Joint-target games with all-ones costs: the frontier is the single vector
/// (l,...,l) with l the shortest-path distance from the initial state to the
/// joint target; (inf,...,inf) when the target is unreachable. Throws
/// FragmentInapplicable outside the fragment.
std::vector<FrontierEntry> ne_po_joint_uniform(const Game& game);

/// True if every player has the same target set and every transition costs
/// one to every player.
bool is_joint_uniform(const Game& game);

}  // namespace qcg
