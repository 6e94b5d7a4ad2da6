#include "qcg/equilibrium.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "qcg/detail/safety.hpp"
#include "qcg/errors.hpp"
#include "qcg/game.hpp"

namespace qcg {

namespace {

Cost subtract(Cost total, Cost part) {
  if (total.is_infinite()) return kInfinity;
  return Cost(total.value() - part.value());
}

// Cheapest deviation value of player a at (x, profile): min over a' != a_x of
// cost*_a(x, b) + C_a(delta(x, b)).
Cost deviation_bound(const Arena& arena, std::span<const ValueMap> punish, StateId x, std::size_t profile,
                     PlayerId a) {
  const auto& space = arena.profiles();
  Cost best = kInfinity;
  const ActionId own = space.action(profile, a);
  for (ActionId act = 0; act < space.alphabet_size(a); ++act) {
    if (act == own) continue;
    const std::size_t b = space.deviate(profile, a, act);
    best = std::min(best, arena.cost(x, b, a) + punish[a].values[arena.successor(x, b)]);
  }
  return best;
}

struct DEntry {
  CostVector cost;
  StateId state = 0;
  std::size_t profile = 0;
  std::size_t next = 0;  // entry index at the successor; npos for seeds
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Deterministic walk through `alive` states taking the smallest surviving
// profile, split into the part before the first repeated state and the cycle.
std::pair<std::vector<Step>, std::vector<Step>> walk_to_cycle(const Arena& arena, StateId from,
                                                             const std::vector<std::vector<std::size_t>>& moves,
                                                             const std::vector<bool>& alive) {
  std::vector<Step> path;
  std::map<StateId, std::size_t> seen;
  StateId at = from;
  while (!seen.contains(at)) {
    seen.emplace(at, path.size());
    std::size_t chosen = kNone;
    for (std::size_t p : moves[at]) {
      if (alive[arena.successor(at, p)]) {
        chosen = p;
        break;
      }
    }
    if (chosen == kNone) throw std::logic_error("walk left the live region");
    path.push_back({at, chosen});
    at = arena.successor(at, chosen);
  }
  const std::size_t start = seen.at(at);
  std::vector<Step> cycle(path.begin() + static_cast<std::ptrdiff_t>(start), path.end());
  path.resize(start);
  return {std::move(path), std::move(cycle)};
}

}  // namespace

NEVerdict check_ne(const ExpandedGame& egame, const Lasso& lasso, std::span<const ValueMap> punish) {
  const Arena& arena = egame.arena();
  const auto& space = arena.profiles();
  const std::size_t k = arena.num_players();
  if (punish.size() != k) throw InputError("need punishment values for every player");
  const CostVector total = outcome_cost(egame, lasso);

  CostVector acc(k);
  const auto steps = lasso.unrolled(1);
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const Step& s = steps[j];
    for (PlayerId a = 0; a < k; ++a) {
      const ActionId own = space.action(s.profile, a);
      for (ActionId act = 0; act < space.alphabet_size(a); ++act) {
        if (act == own) continue;
        const std::size_t b = space.deviate(s.profile, a, act);
        const Cost lhs = acc[a] + arena.cost(s.state, b, a) + punish[a].values[arena.successor(s.state, b)];
        if (lhs < total[a]) return {false, Deviation{j, a, act, subtract(total[a], lhs)}};
      }
    }
    auto c = arena.costs(s.state, s.profile);
    for (PlayerId a = 0; a < k; ++a) acc[a] += c[a];
  }
  return {true, std::nullopt};
}

bool suffix_criterion_holds(const ExpandedGame& egame, const Lasso& lasso, std::span<const ValueMap> punish) {
  const Arena& arena = egame.arena();
  const std::size_t k = arena.num_players();
  if (punish.size() != k) throw InputError("need punishment values for every player");
  const PlayerSet winners = lasso_winners(egame, lasso);
  const PlayerSet losers = winners.complement(k);
  const auto unsafe = detail::unsafe_players(egame, punish);
  const auto steps = lasso.unrolled(1);

  CostVector suffix(k);
  std::vector<CostVector> suffixes(steps.size());
  for (std::size_t j = steps.size(); j-- > 0;) {
    auto c = arena.costs(steps[j].state, steps[j].profile);
    for (PlayerId a = 0; a < k; ++a) suffix[a] += c[a];
    suffixes[j] = suffix;
  }
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const Step& s = steps[j];
    if (!(unsafe[s.state * arena.num_profiles() + s.profile] & losers).empty()) return false;
    for (PlayerId a : winners.members())
      if (suffixes[j][a] > deviation_bound(arena, punish, s.state, s.profile, a)) return false;
  }
  return true;
}

EquilibriumAnalysis analyze_equilibria(const Game& game, const SolverOptions& options) {
  const std::size_t k = game.players().size();
  if (k > options.player_cap || k > kMaxPlayers)
    throw CapExceeded("game has " + std::to_string(k) + " players; the winner-set search is capped at " +
                      std::to_string(std::min(options.player_cap, kMaxPlayers)));

  EquilibriumAnalysis out{expand(game), {}, {}, {}};
  const ExpandedGame& egame = out.egame;
  out.punish = lift_values(all_coalition_values(game.arena()), egame);
  const Arena& arena = egame.arena();
  const std::size_t n = egame.num_states();
  const std::size_t np = arena.num_profiles();
  const auto unsafe = detail::unsafe_players(egame, out.punish);

  std::vector<Cost> bound(n * np * k);
  for (StateId x = 0; x < n; ++x)
    for (std::size_t p = 0; p < np; ++p)
      for (PlayerId a = 0; a < k; ++a) {
        if (egame.label(x).reached.contains(a)) continue;
        bound[(x * np + p) * k + a] = deviation_bound(arena, out.punish, x, p, a);
      }

  const PlayerSet at_start = egame.label(egame.initial()).reached;
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    const PlayerSet winners(bits);
    if (!at_start.is_subset_of(winners)) continue;
    const SafeRestriction r = detail::restrict_with(egame, winners, unsafe);

    std::vector<bool> alive(n, false);
    for (StateId x = 0; x < n; ++x) alive[x] = r.reachable[x] && egame.label(x).reached == winners;
    for (bool changed = true; changed;) {
      changed = false;
      for (StateId x = 0; x < n; ++x) {
        if (!alive[x]) continue;
        const bool live = std::any_of(r.safe_profiles[x].begin(), r.safe_profiles[x].end(),
                                      [&](std::size_t p) { return alive[arena.successor(x, p)]; });
        if (!live) {
          alive[x] = false;
          changed = true;
        }
      }
    }

    std::vector<std::vector<std::pair<StateId, std::size_t>>> preds(n);
    for (StateId u = 0; u < n; ++u)
      for (std::size_t p : r.safe_profiles[u]) preds[arena.successor(u, p)].emplace_back(u, p);

    std::vector<DEntry> pool;
    std::vector<std::vector<std::size_t>> D(n);
    auto insert = [&](StateId u, DEntry e) {
      auto& list = D[u];
      for (std::size_t id : list)
        if (dominates_weakly(pool[id].cost, e.cost)) return false;
      std::erase_if(list, [&](std::size_t id) { return dominates_weakly(e.cost, pool[id].cost); });
      list.push_back(pool.size());
      pool.push_back(std::move(e));
      return true;
    };

    CostVector seed(k, kInfinity);
    for (PlayerId a : winners.members()) seed[a] = Cost{};
    std::vector<std::size_t> fresh;
    for (StateId x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      insert(x, DEntry{seed, x, 0, kNone});
      fresh.push_back(pool.size() - 1);
    }

    std::size_t rounds = 0;
    while (!fresh.empty()) {
      if (++rounds > n + 1) throw std::logic_error("frontier search did not stabilize");
      std::vector<std::size_t> next;
      for (std::size_t id : fresh) {
        const StateId v = pool[id].state;
        if (std::find(D[v].begin(), D[v].end(), id) == D[v].end()) continue;
        for (auto [u, p] : preds[v]) {
          CostVector c = arena.cost_vector(u, p) + pool[id].cost;
          bool ok = true;
          for (PlayerId a : winners.members()) {
            if (egame.label(u).reached.contains(a)) continue;
            if (c[a] > bound[(u * np + p) * k + a]) {
              ok = false;
              break;
            }
          }
          if (ok && insert(u, DEntry{std::move(c), u, p, id})) next.push_back(pool.size() - 1);
        }
      }
      fresh = std::move(next);
    }

    for (std::size_t id : D[egame.initial()]) {
      Lasso lasso;
      std::size_t at = id;
      while (pool[at].next != kNone) {
        lasso.prefix.push_back({pool[at].state, pool[at].profile});
        at = pool[at].next;
      }
      auto [tail, cycle] = walk_to_cycle(arena, pool[at].state, r.safe_profiles, alive);
      lasso.prefix.insert(lasso.prefix.end(), tail.begin(), tail.end());
      lasso.cycle = std::move(cycle);
      if (outcome_cost(egame, lasso) != pool[id].cost || !check_ne(egame, lasso, out.punish).is_ne)
        throw std::logic_error("frontier witness failed verification");
      out.discovered.push_back(FrontierEntry{pool[id].cost, winners, std::move(lasso)});
    }
  }

  std::vector<CostVector> costs;
  for (const auto& e : out.discovered) costs.push_back(e.cost);
  for (const CostVector& c : pareto_filter(std::move(costs))) {
    auto it = std::find_if(out.discovered.begin(), out.discovered.end(),
                           [&](const FrontierEntry& e) { return e.cost == c; });
    out.frontier.push_back(*it);
  }
  return out;
}

std::vector<FrontierEntry> compute_ne_po(const Game& game, const SolverOptions& options) {
  return analyze_equilibria(game, options).frontier;
}

bool ne_exists(const Game& game, const SolverOptions& options) { return !compute_ne_po(game, options).empty(); }

ThresholdAnswer threshold_ne(const Game& game, const CostVector& bound, const SolverOptions& options) {
  if (bound.size() != game.players().size())
    throw InputError("bound has " + std::to_string(bound.size()) + " entries but the game has " +
                     std::to_string(game.players().size()) + " players");
  for (auto& e : compute_ne_po(game, options))
    if (dominates_weakly(e.cost, bound)) return {true, std::move(e)};
  return {false, std::nullopt};
}

std::vector<CostVector> pareto_filter(std::vector<CostVector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != vectors.front().size()) throw InputError("cost vectors of mixed lengths");
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<CostVector> out;
  for (const auto& v : vectors) {
    const bool dominated = std::any_of(vectors.begin(), vectors.end(),
                                       [&](const CostVector& u) { return u != v && dominates_weakly(u, v); });
    if (!dominated) out.push_back(v);
  }
  return out;
}

bool is_joint_uniform(const Game& game) {
  for (PlayerId p = 1; p < game.num_players(); ++p)
    if (game.targets(p) != game.targets(0)) return false;
  const Arena& arena = game.arena();
  for (StateId s = 0; s < arena.num_states(); ++s)
    for (std::size_t p = 0; p < arena.num_profiles(); ++p)
      for (Cost c : arena.costs(s, p))
        if (c != Cost(1)) return false;
  return true;
}

std::vector<FrontierEntry> ne_po_joint_uniform(const Game& game) {
  if (!is_joint_uniform(game))
    throw FragmentInapplicable("game is not joint-target with uniform unit costs");
  const ExpandedGame egame = expand(game);
  const Arena& arena = egame.arena();
  const std::size_t n = egame.num_states();
  const std::size_t k = arena.num_players();
  const PlayerSet everyone = PlayerSet::all(k);

  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{egame.initial()};
  seen[egame.initial()] = true;
  std::optional<StateId> goal;
  while (!queue.empty() && !goal) {
    const StateId x = queue.front();
    queue.pop_front();
    if (egame.label(x).reached == everyone) {
      goal = x;
      break;
    }
    for (std::size_t p = 0; p < arena.num_profiles(); ++p) {
      const StateId y = arena.successor(x, p);
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      via[y] = p;
      queue.push_back(y);
    }
  }

  std::vector<std::vector<std::size_t>> all_moves(n);
  for (auto& m : all_moves)
    for (std::size_t p = 0; p < arena.num_profiles(); ++p) m.push_back(p);
  const std::vector<bool> anywhere(n, true);

  Lasso lasso;
  StateId end = egame.initial();
  if (goal) {
    for (StateId x = *goal; x != egame.initial(); x = parent[x]) lasso.prefix.push_back({parent[x], via[x]});
    std::reverse(lasso.prefix.begin(), lasso.prefix.end());
    end = *goal;
  }
  auto [tail, cycle] = walk_to_cycle(arena, end, all_moves, anywhere);
  lasso.prefix.insert(lasso.prefix.end(), tail.begin(), tail.end());
  lasso.cycle = std::move(cycle);
  const PlayerSet winners = goal ? everyone : PlayerSet{};
  return {FrontierEntry{outcome_cost(egame, lasso), winners, std::move(lasso)}};
}

}  // namespace qcg
