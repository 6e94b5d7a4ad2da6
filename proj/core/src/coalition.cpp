#include "qcg/coalition.hpp"

#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>

#include "qcg/expanded_game.hpp"

namespace qcg {

namespace {

// min over the deviator's actions of cost + T(successor), for coalition move b.
Cost best_reply(const Arena& arena, PlayerId player, StateId v, std::size_t b, const std::vector<Cost>& t) {
  const auto& space = arena.profiles();
  Cost best = kInfinity;
  for (ActionId a = 0; a < space.alphabet_size(player); ++a) {
    const std::size_t p = b + a * space.stride(player);
    const Cost c = arena.cost(v, p, player) + t[arena.successor(v, p)];
    if (c < best) best = c;
  }
  return best;
}

}  // namespace

ValueMap coalition_values(const Arena& arena, PlayerId player, ValueIterationTrace* trace) {
  if (player >= arena.num_players()) throw std::out_of_range("player out of range");
  const auto& space = arena.profiles();
  const std::size_t n = arena.num_states();

  std::vector<Cost> t(n, kInfinity);
  for (StateId v = 0; v < n; ++v)
    if (arena.is_target(player, v)) t[v] = Cost{};
  if (trace) trace->iterates = {t};

  for (std::size_t round = 0;; ++round) {
    if (round > n) throw std::logic_error("value iteration did not reach a fixpoint within |V| rounds");
    std::vector<Cost> next(n);
    for (StateId v = 0; v < n; ++v) {
      if (arena.is_target(player, v)) continue;
      Cost worst;
      for (std::size_t b = 0; b < arena.num_profiles(); ++b) {
        if (space.action(b, player) != 0) continue;
        const Cost c = best_reply(arena, player, v, b, t);
        if (c > worst) worst = c;
      }
      next[v] = worst;
    }
    if (next == t) break;
    t = std::move(next);
    if (trace) trace->iterates.push_back(t);
  }
  return ValueMap{player, std::move(t)};
}

std::vector<ValueMap> all_coalition_values(const Arena& arena) {
  std::vector<ValueMap> out;
  out.reserve(arena.num_players());
  for (PlayerId p = 0; p < arena.num_players(); ++p) out.push_back(coalition_values(arena, p));
  return out;
}

ValueMap lift_values(const ValueMap& base, const ExpandedGame& egame) {
  ValueMap out{base.player, std::vector<Cost>(egame.num_states())};
  for (StateId x = 0; x < egame.num_states(); ++x) {
    const auto& l = egame.label(x);
    out.values[x] = l.reached.contains(base.player) ? Cost{} : base.values.at(l.base);
  }
  return out;
}

std::vector<ValueMap> lift_values(const std::vector<ValueMap>& base, const ExpandedGame& egame) {
  std::vector<ValueMap> out;
  out.reserve(base.size());
  for (const auto& b : base) out.push_back(lift_values(b, egame));
  return out;
}

PunishmentTable punishing_strategy(const Arena& arena, const ValueMap& values) {
  const auto& space = arena.profiles();
  const PlayerId player = values.player;
  PunishmentTable table{player, std::vector<std::size_t>(arena.num_states(), 0)};
  for (StateId v = 0; v < arena.num_states(); ++v) {
    if (arena.is_target(player, v)) continue;
    std::optional<Cost> best;
    for (std::size_t b = 0; b < arena.num_profiles(); ++b) {
      if (space.action(b, player) != 0) continue;
      const Cost c = best_reply(arena, player, v, b, values.values);
      if (!best || c > *best) {
        best = c;
        table.coalition_move[v] = b;
      }
    }
  }
  return table;
}

std::vector<Cost> best_response_costs(const Arena& arena, const PunishmentTable& table) {
  const auto& space = arena.profiles();
  const PlayerId player = table.deviator;
  const std::size_t n = arena.num_states();

  struct Edge {
    StateId from;
    Cost cost;
  };
  std::vector<std::vector<Edge>> incoming(n);
  for (StateId v = 0; v < n; ++v) {
    if (arena.is_target(player, v)) continue;
    for (ActionId a = 0; a < space.alphabet_size(player); ++a) {
      const std::size_t p = table.coalition_move[v] + a * space.stride(player);
      incoming[arena.successor(v, p)].push_back({v, arena.cost(v, p, player)});
    }
  }

  std::vector<Cost> dist(n, kInfinity);
  using Item = std::pair<Cost, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (StateId v = 0; v < n; ++v) {
    if (arena.is_target(player, v)) {
      dist[v] = Cost{};
      queue.emplace(Cost{}, v);
    }
  }
  while (!queue.empty()) {
    auto [d, w] = queue.top();
    queue.pop();
    if (d > dist[w]) continue;
    for (const Edge& e : incoming[w]) {
      const Cost nd = d + e.cost;
      if (nd < dist[e.from]) {
        dist[e.from] = nd;
        queue.emplace(nd, e.from);
      }
    }
  }
  return dist;
}

Cost best_response_cost(const Arena& arena, const PunishmentTable& table, StateId from) {
  return best_response_costs(arena, table).at(from);
}

}  // namespace qcg
