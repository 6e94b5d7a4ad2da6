#include "qcg/metrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "qcg/game.hpp"

namespace qcg {

Cost social_optimum(const Game& game) {
  const ExpandedGame egame = expand(game);
  const Arena& arena = egame.arena();
  const PlayerSet everyone = PlayerSet::all(arena.num_players());
  std::vector<Cost> dist(egame.num_states(), kInfinity);
  using Item = std::pair<Cost, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[egame.initial()] = Cost{};
  queue.emplace(Cost{}, egame.initial());
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d != dist[x]) continue;
    if (egame.label(x).reached == everyone) return d;
    for (std::size_t p = 0; p < arena.num_profiles(); ++p) {
      const Cost nd = d + utility(arena.cost_vector(x, p));
      const StateId y = arena.successor(x, p);
      if (nd < dist[y]) {
        dist[y] = nd;
        queue.emplace(nd, y);
      }
    }
  }
  return kInfinity;
}

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  Ratio r;
  r.num_ = g == 0 ? 0 : num / g;
  r.den_ = g == 0 ? 1 : den / g;
  return r;
}

double Ratio::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Lasso insert_cycle(const Lasso& base, std::size_t position, std::span<const Step> cycle) {
  Lasso out;
  out.prefix.assign(base.prefix.begin(), base.prefix.begin() + static_cast<std::ptrdiff_t>(position));
  out.prefix.insert(out.prefix.end(), cycle.begin(), cycle.end());
  out.prefix.insert(out.prefix.end(), base.prefix.begin() + static_cast<std::ptrdiff_t>(position), base.prefix.end());
  out.cycle = base.cycle;
  return out;
}

StateId state_at(const Lasso& lasso, std::size_t position) {
  return position < lasso.prefix.size() ? lasso.prefix[position].state : lasso.cycle.front().state;
}

Ratio quotient(Cost util, Cost so) {
  if (util.is_infinite()) return Ratio::infinity();
  if (so.value() == 0) return util.value() == 0 ? Ratio::of(1, 1) : Ratio::infinity();
  return Ratio::of(util.value(), so.value());
}

}  // namespace

bool pump_is_valid(const ExpandedGame& egame, std::span<const ValueMap> punish, const Lasso& base,
                   std::size_t position, std::span<const Step> cycle) {
  if (position > base.prefix.size() || cycle.empty()) return false;
  const Arena& arena = egame.arena();
  const std::size_t k = arena.num_players();
  const auto& space = arena.profiles();

  StateId at = state_at(base, position);
  CostVector added(k);
  for (const Step& s : cycle) {
    if (s.state != at || s.profile >= arena.num_profiles()) return false;
    auto c = arena.costs(s.state, s.profile);
    for (PlayerId a = 0; a < k; ++a) added[a] += c[a];
    at = arena.successor(s.state, s.profile);
  }
  if (at != state_at(base, position)) return false;

  const Lasso pumped = insert_cycle(base, position, cycle);
  if (!check_ne(egame, pumped, punish).is_ne) return false;
  const CostVector total = outcome_cost(egame, pumped);
  if (utility(total).is_infinite() || utility(added) == Cost{}) return false;

  // With m copies, a winner's outcome cost grows by m * added while its
  // deviation values before and inside the first copy stay put.
  CostVector acc(k);
  for (std::size_t j = 0; j < position + cycle.size(); ++j) {
    const Step& s = pumped.prefix[j];
    for (PlayerId a = 0; a < k; ++a) {
      if (added[a] == Cost{}) continue;
      for (ActionId act = 0; act < space.alphabet_size(a); ++act) {
        if (act == space.action(s.profile, a)) continue;
        const std::size_t b = space.deviate(s.profile, a, act);
        if ((acc[a] + arena.cost(s.state, b, a) + punish[a].values[arena.successor(s.state, b)]).is_finite())
          return false;
      }
    }
    auto c = arena.costs(s.state, s.profile);
    for (PlayerId a = 0; a < k; ++a) acc[a] += c[a];
  }
  return true;
}

std::optional<PumpWitness> detect_pump(const EquilibriumAnalysis& analysis, std::size_t cycle_cap, bool* capped) {
  const ExpandedGame& egame = analysis.egame;
  const Arena& arena = egame.arena();
  if (capped) *capped = false;

  for (const FrontierEntry& entry : analysis.discovered) {
    if (utility(entry.cost).is_infinite()) continue;
    const Lasso& base = entry.witness;
    for (std::size_t position = 0; position <= base.prefix.size(); ++position) {
      const StateId origin = state_at(base, position);
      std::size_t tried = 0;
      std::vector<Step> path;
      std::vector<bool> on_path(egame.num_states(), false);
      std::optional<PumpWitness> hit;
      std::function<bool(StateId)> dfs = [&](StateId x) {
        on_path[x] = true;
        for (std::size_t p = 0; p < arena.num_profiles(); ++p) {
          const StateId y = arena.successor(x, p);
          path.push_back({x, p});
          if (y == origin) {
            if (++tried > cycle_cap) {
              if (capped) *capped = true;
              path.pop_back();
              on_path[x] = false;
              return true;
            }
            if (pump_is_valid(egame, analysis.punish, base, position, path)) {
              hit = PumpWitness{base, position, path, insert_cycle(base, position, path)};
              path.pop_back();
              on_path[x] = false;
              return true;
            }
          } else if (!on_path[y] && dfs(y)) {
            path.pop_back();
            on_path[x] = false;
            return true;
          }
          path.pop_back();
        }
        on_path[x] = false;
        return false;
      };
      dfs(origin);
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

MetricsReport pos_poa(const Game& game, const MetricsOptions& options) {
  const EquilibriumAnalysis analysis = analyze_equilibria(game, options.solver);
  MetricsReport report;
  report.social_optimum = social_optimum(game);
  report.has_ne = !analysis.frontier.empty();
  if (!report.has_ne) return report;

  report.best_ne_util = kInfinity;
  report.worst_ne_util = Cost{};
  for (const auto& e : analysis.frontier) report.best_ne_util = std::min(report.best_ne_util, utility(e.cost));
  for (const auto& e : analysis.discovered) report.worst_ne_util = std::max(report.worst_ne_util, utility(e.cost));

  report.pump = detect_pump(analysis, options.pump_cycle_cap, &report.pump_search_capped);
  if (report.pump)
    report.unbounded = Unboundedness::kPump;
  else if (report.worst_ne_util.is_infinite())
    report.unbounded = Unboundedness::kLosingEquilibrium;
  if (report.unbounded != Unboundedness::kNone) report.worst_ne_util = kInfinity;

  if (report.social_optimum.is_infinite()) return report;
  report.pos = quotient(report.best_ne_util, report.social_optimum);
  report.poa = quotient(report.worst_ne_util, report.social_optimum);
  report.poa_is_lower_bound = report.unbounded == Unboundedness::kNone;
  return report;
}

}  // namespace qcg
