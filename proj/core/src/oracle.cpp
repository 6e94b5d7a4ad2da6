#include "qcg/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "qcg/errors.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/game.hpp"

namespace qcg {

namespace {

// Deviator's cheapest cost to its target with every other player fixed to
// `moves` (coalition profile per state, deviator digit zero).
std::vector<Cost> fixed_graph_distances(const Arena& arena, PlayerId player, const std::vector<std::size_t>& moves) {
  const std::size_t n = arena.num_states();
  const auto& space = arena.profiles();
  std::vector<Cost> dist(n, kInfinity);
  for (StateId s = 0; s < n; ++s)
    if (arena.is_target(player, s)) dist[s] = Cost{};
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (arena.is_target(player, s)) continue;
      for (ActionId a = 0; a < space.alphabet_size(player); ++a) {
        const std::size_t p = moves[s] + a * space.stride(player);
        const Cost c = arena.cost(s, p, player) + dist[arena.successor(s, p)];
        if (c < dist[s]) {
          dist[s] = c;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

struct LassoSearch {
  const ExpandedGame& egame;
  std::span<const ValueMap> punish;
  std::uint64_t cap;
  std::uint64_t explored = 0;
  std::vector<Step> path;
  std::vector<int> position;  // index on the current path, -1 if off it
  std::vector<std::pair<CostVector, Lasso>> found;

  void consider(std::size_t cycle_start) {
    Lasso lasso;
    lasso.prefix.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(cycle_start));
    lasso.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(cycle_start), path.end());
    if (check_ne(egame, lasso, punish).is_ne) found.emplace_back(outcome_cost(egame, lasso), std::move(lasso));
  }

  void dfs(StateId x) {
    const Arena& arena = egame.arena();
    position[x] = static_cast<int>(path.size());
    for (std::size_t p = 0; p < arena.num_profiles(); ++p) {
      if (++explored > cap) throw CapExceeded("oracle lasso enumeration exceeded " + std::to_string(cap) + " paths");
      const StateId y = arena.successor(x, p);
      path.push_back({x, p});
      if (position[y] >= 0)
        consider(static_cast<std::size_t>(position[y]));
      else
        dfs(y);
      path.pop_back();
    }
    position[x] = -1;
  }
};

}  // namespace

ValueMap oracle_coalition_values(const Arena& arena, PlayerId player, const OracleOptions& options) {
  const auto& space = arena.profiles();
  const std::size_t n = arena.num_states();
  std::vector<std::size_t> coalition_moves;
  for (std::size_t p = 0; p < space.num_profiles(); ++p)
    if (space.action(p, player) == 0) coalition_moves.push_back(p);

  std::uint64_t strategies = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (strategies > options.strategy_cap / coalition_moves.size())
      throw CapExceeded("more than " + std::to_string(options.strategy_cap) + " memoryless coalition strategies");
    strategies *= coalition_moves.size();
  }

  ValueMap out{player, std::vector<Cost>(n, Cost{})};
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::size_t> moves(n);
  for (std::uint64_t i = 0; i < strategies; ++i) {
    for (std::size_t s = 0; s < n; ++s) moves[s] = coalition_moves[digit[s]];
    const auto dist = fixed_graph_distances(arena, player, moves);
    for (std::size_t s = 0; s < n; ++s) out.values[s] = std::max(out.values[s], dist[s]);
    for (std::size_t s = 0; s < n && ++digit[s] == coalition_moves.size(); ++s) digit[s] = 0;
  }
  return out;
}

std::vector<FrontierEntry> oracle_ne_po(const Game& game, const OracleOptions& options) {
  const ExpandedGame egame = expand(game);
  const std::size_t k = game.players().size();
  std::vector<ValueMap> punish;
  for (PlayerId a = 0; a < k; ++a) {
    const ValueMap base = oracle_coalition_values(game.arena(), a, options);
    ValueMap lifted{a, {}};
    for (const auto& label : egame.labels())
      lifted.values.push_back(label.reached.contains(a) ? Cost{} : base.values[label.base]);
    punish.push_back(std::move(lifted));
  }

  LassoSearch search{egame, punish, options.path_cap, 0, {}, std::vector<int>(egame.num_states(), -1), {}};
  search.dfs(egame.initial());

  std::vector<CostVector> costs;
  for (const auto& f : search.found) costs.push_back(f.first);
  std::vector<FrontierEntry> out;
  for (const CostVector& c : pareto_filter(std::move(costs))) {
    auto it = std::find_if(search.found.begin(), search.found.end(), [&](const auto& f) { return f.first == c; });
    out.push_back(FrontierEntry{c, lasso_winners(egame, it->second), it->second});
  }
  return out;
}

bool oracle_partition(const PartitionInstance& instance) {
  const auto& xs = instance.numbers;
  if (xs.size() > 20) throw CapExceeded("partition oracle is limited to 20 numbers");
  const std::uint64_t total = std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
  if (total % 2 != 0) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((mask >> i) & 1) sum += xs[i];
    if (2 * sum == total) return true;
  }
  return false;
}

bool oracle_sat(const CnfFormula& formula) {
  if (formula.num_variables > 16) throw CapExceeded("sat oracle is limited to 16 variables");
  for (const Clause& c : formula.clauses)
    for (const Literal& l : c)
      if (l.variable >= formula.num_variables) throw InputError("literal refers to an undeclared variable");
  for (std::uint32_t assignment = 0; assignment < (1u << formula.num_variables); ++assignment) {
    const bool satisfied = std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(),
                         [&](const Literal& l) { return (((assignment >> l.variable) & 1u) != 0) != l.negated; });
    });
    if (satisfied) return true;
  }
  return false;
}

bool oracle_hampath(const HamPathInstance& instance) {
  const std::size_t n = instance.graph.num_vertices;
  if (n > 8) throw CapExceeded("hampath oracle is limited to 8 vertices");
  if (instance.start >= n) throw InputError("start vertex out of range");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : instance.graph.edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    adj[u][v] = true;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order.front() != instance.start) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = adj[order[i]][order[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool oracle_decision(const DecisionInstance& instance) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PartitionInstance>)
          return oracle_partition(x);
        else if constexpr (std::is_same_v<T, CnfFormula>)
          return oracle_sat(x);
        else
          return oracle_hampath(x);
      },
      instance);
}

}  // namespace qcg
