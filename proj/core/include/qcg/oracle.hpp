#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "qcg/arena.hpp"
#include "qcg/coalition.hpp"
#include "qcg/equilibrium.hpp"
#include "qcg/instances.hpp"

namespace qcg {

class Game;

/// Brute-force references. They enumerate memoryless coalition strategies
/// and lasso-shaped outcomes, which suffices for punishment values and
/// Pareto-optimal equilibria respectively, and share no code path with the
/// value iteration or the winner-set dynamic program.

struct OracleOptions {
  /// Upper bound on the number of memoryless coalition strategies per player.
  std::uint64_t strategy_cap = 1'000'000;
  /// Upper bound on the number of outcome paths explored.
  std::uint64_t path_cap = 10'000'000;
};

/// max over memoryless coalition strategies of the deviator's shortest-path
/// cost to its target. Throws CapExceeded if there are too many strategies.
ValueMap oracle_coalition_values(const Arena& arena, PlayerId player, const OracleOptions& options = {});

/// Enumerates every lasso of the expanded game whose prefix and cycle
/// together form a simple path closed by one back edge, keeps those passing
/// check_ne against oracle punishment values, and returns the Pareto-minimal
/// cost vectors with one witness each.
std::vector<FrontierEntry> oracle_ne_po(const Game& game, const OracleOptions& options = {});

/// Exhaustive deciders for the reduction source problems, desk scale only
/// (<= 20 numbers, <= 16 variables, <= 8 vertices); CapExceeded beyond.
bool oracle_partition(const PartitionInstance& instance);
bool oracle_sat(const CnfFormula& formula);
bool oracle_hampath(const HamPathInstance& instance);

using DecisionInstance = std::variant<PartitionInstance, CnfFormula, HamPathInstance>;
bool oracle_decision(const DecisionInstance& instance);

}  // namespace qcg
