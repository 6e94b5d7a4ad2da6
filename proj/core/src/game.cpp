#include "qcg/game.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Path sums in the solvers stay below max_cost * (|players|+1) * |V| * 4.
constexpr long double kCostBudget = 4611686018427387904.0L;  // 2^62

void require_unique(const std::vector<std::string>& names, const std::string& what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError(what + " name must not be empty");
    if (!seen.insert(n).second) throw InputError("duplicate " + what + " '" + n + "'");
  }
}

void validate(const GameDescription& d) {
  if (d.players.empty()) throw InputError("game must have at least one player");
  if (d.players.size() > kMaxPlayers)
    throw InputError("at most " + std::to_string(kMaxPlayers) + " players are supported");
  require_unique(d.players, "player");
  if (d.actions.size() != d.players.size()) throw InputError("every player needs an action alphabet");
  for (std::size_t p = 0; p < d.players.size(); ++p) {
    if (d.actions[p].empty()) throw InputError("player '" + d.players[p] + "' has no actions");
    require_unique(d.actions[p], "action of player '" + d.players[p] + "'");
  }
  if (d.states.empty()) throw InputError("game must have at least one state");
  require_unique(d.states, "state");
  if (d.initial >= d.states.size()) throw InputError("initial state out of range");
  if (d.targets.size() != d.players.size()) throw InputError("every player needs a target set");
  for (const auto& ts : d.targets)
    for (StateId s : ts)
      if (s >= d.states.size()) throw InputError("target state out of range");
  for (std::size_t i = 0; i < d.rules.size(); ++i) {
    const auto& r = d.rules[i];
    const std::string where = "rule " + std::to_string(i + 1) + ": ";
    if (r.source >= d.states.size() || r.target >= d.states.size())
      throw InputError(where + "state out of range");
    if (r.pattern.size() != d.players.size()) throw InputError(where + "pattern length must equal player count");
    for (std::size_t p = 0; p < r.pattern.size(); ++p)
      if (r.pattern[p] && *r.pattern[p] >= d.actions[p].size()) throw InputError(where + "action out of range");
    if (r.cost.size() != d.players.size()) throw InputError(where + "cost length must equal player count");
    for (Cost c : r.cost)
      if (c.is_infinite()) throw InputError(where + "costs must be finite");
  }
}

}  // namespace

bool TransitionRule::matches(std::span<const ActionId> profile) const {
  if (profile.size() != pattern.size()) return false;
  for (std::size_t p = 0; p < pattern.size(); ++p)
    if (pattern[p] && *pattern[p] != profile[p]) return false;
  return true;
}

Game::Game(GameDescription description) : desc_(std::move(description)) {
  validate(desc_);

  for (auto& ts : desc_.targets) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }

  std::vector<std::size_t> sizes;
  for (const auto& a : desc_.actions) sizes.push_back(a.size());
  ProfileSpace space(std::move(sizes));

  const std::size_t k = num_players();
  const std::size_t num_profiles = space.num_profiles();
  const std::size_t num_entries = num_states() * num_profiles;

  Cost max_cost;
  for (const auto& r : desc_.rules)
    for (Cost c : r.cost) max_cost = std::max(max_cost, c);
  const long double budget = static_cast<long double>(max_cost.value()) * static_cast<long double>(k + 1) *
                             static_cast<long double>(num_states()) * 4.0L;
  if (budget >= kCostBudget) throw InputError("transition costs too large: path sums could overflow");

  // First match wins: walk rules in order and fill every still-empty entry
  // each rule covers.
  std::vector<std::uint32_t> rule_of(num_entries, kUnassigned);
  for (std::size_t ri = 0; ri < desc_.rules.size(); ++ri) {
    const auto& r = desc_.rules[ri];
    std::size_t base = 0;
    std::vector<PlayerId> free;
    for (PlayerId p = 0; p < k; ++p) {
      if (r.pattern[p])
        base += *r.pattern[p] * space.stride(p);
      else
        free.push_back(p);
    }
    std::vector<ActionId> digits(free.size(), 0);
    while (true) {
      std::size_t idx = base;
      for (std::size_t f = 0; f < free.size(); ++f) idx += digits[f] * space.stride(free[f]);
      auto& slot = rule_of[r.source * num_profiles + idx];
      if (slot == kUnassigned) slot = static_cast<std::uint32_t>(ri);
      std::size_t f = 0;
      for (; f < free.size(); ++f) {
        if (++digits[f] < space.alphabet_size(free[f])) break;
        digits[f] = 0;
      }
      if (f == free.size()) break;
    }
  }

  std::vector<StateId> successors(num_entries);
  std::vector<Cost> costs(num_entries * k);
  for (StateId s = 0; s < num_states(); ++s) {
    for (std::size_t pi = 0; pi < num_profiles; ++pi) {
      const std::uint32_t ri = rule_of[s * num_profiles + pi];
      if (ri == kUnassigned) {
        throw InputError("transition function is not total: no rule matches state '" + desc_.states[s] +
                         "' under profile " + profile_name(space.decode(pi)));
      }
      const auto& r = desc_.rules[ri];
      successors[s * num_profiles + pi] = r.target;
      std::copy(r.cost.begin(), r.cost.end(), costs.begin() + static_cast<std::ptrdiff_t>((s * num_profiles + pi) * k));
    }
  }

  std::vector<PlayerSet> targets(num_states());
  for (PlayerId p = 0; p < k; ++p)
    for (StateId s : desc_.targets[p]) targets[s].insert(p);

  arena_ = Arena(std::move(space), num_states(), desc_.initial, std::move(successors), std::move(costs),
                 std::move(targets));
}

std::optional<PlayerId> Game::find_player(std::string_view name) const {
  for (PlayerId p = 0; p < desc_.players.size(); ++p)
    if (desc_.players[p] == name) return p;
  return std::nullopt;
}

std::optional<StateId> Game::find_state(std::string_view name) const {
  for (StateId s = 0; s < desc_.states.size(); ++s)
    if (desc_.states[s] == name) return s;
  return std::nullopt;
}

std::optional<ActionId> Game::find_action(PlayerId p, std::string_view name) const {
  const auto& acts = desc_.actions.at(p);
  for (ActionId a = 0; a < acts.size(); ++a)
    if (acts[a] == name) return a;
  return std::nullopt;
}

std::optional<std::size_t> Game::first_matching_rule(StateId state, std::span<const ActionId> profile) const {
  for (std::size_t i = 0; i < desc_.rules.size(); ++i)
    if (desc_.rules[i].source == state && desc_.rules[i].matches(profile)) return i;
  return std::nullopt;
}

Transition Game::successor(StateId state, std::span<const ActionId> profile) const {
  const std::size_t pi = arena_.profiles().index(profile);
  return Transition{state, ActionProfile(profile.begin(), profile.end()), arena_.successor(state, pi),
                    arena_.cost_vector(state, pi)};
}

std::string Game::profile_name(std::span<const ActionId> profile) const {
  std::string out = "(";
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (p) out += ',';
    out += desc_.actions[p].at(profile[p]);
  }
  return out + ")";
}

}  // namespace qcg
