#include "qcg/expanded_game.hpp"

#include <deque>
#include <stdexcept>

#include "qcg/coalition.hpp"
#include "qcg/detail/safety.hpp"
#include "qcg/errors.hpp"
#include "qcg/game.hpp"

namespace qcg {

namespace {

constexpr std::size_t kMaxExpandedTransitions = std::size_t{1} << 24;

std::uint64_t key_of(const ExpandedState& s) { return (static_cast<std::uint64_t>(s.base) << 32) | s.reached.bits(); }

}  // namespace

ExpandedGame::ExpandedGame(Arena arena, std::vector<ExpandedState> labels)
    : arena_(std::move(arena)), labels_(std::move(labels)) {
  if (labels_.size() != arena_.num_states()) throw std::invalid_argument("one label per expanded state required");
  for (StateId s = 0; s < labels_.size(); ++s)
    if (!index_.emplace(key_of(labels_[s]), s).second) throw std::invalid_argument("duplicate expanded state");
}

std::optional<StateId> ExpandedGame::find(const ExpandedState& state) const {
  auto it = index_.find(key_of(state));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ExpandedGame expand(const Arena& base) {
  const std::size_t k = base.num_players();
  const std::size_t np = base.num_profiles();

  std::vector<ExpandedState> labels;
  std::unordered_map<std::uint64_t, StateId> index;
  auto intern = [&](const ExpandedState& s) {
    auto [it, fresh] = index.emplace(key_of(s), labels.size());
    if (fresh) labels.push_back(s);
    return it->second;
  };

  intern(ExpandedState{base.initial(), base.targets_at(base.initial())});

  std::vector<StateId> successors;
  std::vector<Cost> costs;
  for (StateId x = 0; x < labels.size(); ++x) {
    if (labels.size() * np > kMaxExpandedTransitions)
      throw CapExceeded("expanded game exceeds " + std::to_string(kMaxExpandedTransitions) + " transitions");
    const ExpandedState here = labels[x];
    for (std::size_t p = 0; p < np; ++p) {
      const StateId v = base.successor(here.base, p);
      successors.push_back(intern(ExpandedState{v, here.reached | base.targets_at(v)}));
      auto c = base.costs(here.base, p);
      for (PlayerId q = 0; q < k; ++q) costs.push_back(here.reached.contains(q) ? Cost{} : c[q]);
    }
  }

  std::vector<PlayerSet> targets;
  targets.reserve(labels.size());
  for (const auto& l : labels) targets.push_back(l.reached);

  const std::size_t n = labels.size();
  Arena arena(base.profiles(), n, 0, std::move(successors), std::move(costs), std::move(targets));
  return ExpandedGame(std::move(arena), std::move(labels));
}

ExpandedGame expand(const Game& game) { return expand(game.arena()); }

std::size_t SafeRestriction::num_transitions() const {
  std::size_t n = 0;
  for (const auto& v : safe_profiles) n += v.size();
  return n;
}

namespace detail {

std::vector<PlayerSet> unsafe_players(const ExpandedGame& egame, std::span<const ValueMap> punish) {
  const Arena& arena = egame.arena();
  const auto& space = arena.profiles();
  const std::size_t k = arena.num_players();
  const std::size_t np = arena.num_profiles();
  if (punish.size() != k) throw std::invalid_argument("need punishment values for every player");

  std::vector<PlayerSet> out(egame.num_states() * np);
  std::vector<char> finite_reachable(np);
  for (StateId x = 0; x < egame.num_states(); ++x) {
    for (PlayerId a = 0; a < k; ++a) {
      const auto& values = punish[a].values;
      // finite_reachable[b] for coalition moves b (a's digit zero).
      for (std::size_t b = 0; b < np; ++b) {
        if (space.action(b, a) != 0) continue;
        bool finite = false;
        for (ActionId act = 0; act < space.alphabet_size(a) && !finite; ++act)
          finite = values[arena.successor(x, b + act * space.stride(a))].is_finite();
        finite_reachable[b] = finite;
      }
      for (std::size_t p = 0; p < np; ++p)
        if (finite_reachable[space.without(p, a)]) out[x * np + p].insert(a);
    }
  }
  return out;
}

SafeRestriction restrict_with(const ExpandedGame& egame, PlayerSet winners, std::span<const PlayerSet> unsafe) {
  const Arena& arena = egame.arena();
  const std::size_t np = arena.num_profiles();
  const PlayerSet losers = winners.complement(arena.num_players());

  SafeRestriction r;
  r.winners = winners;
  r.safe_profiles.assign(egame.num_states(), {});
  r.reachable.assign(egame.num_states(), false);

  std::deque<StateId> queue{egame.initial()};
  r.reachable[egame.initial()] = true;
  while (!queue.empty()) {
    const StateId x = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p < np; ++p) {
      if (!(unsafe[x * np + p] & losers).empty()) continue;
      r.safe_profiles[x].push_back(p);
      const StateId y = arena.successor(x, p);
      if (!r.reachable[y]) {
        r.reachable[y] = true;
        queue.push_back(y);
      }
    }
  }
  return r;
}

}  // namespace detail

SafeRestriction safe_restrict(const ExpandedGame& egame, PlayerSet winners, std::span<const ValueMap> punish) {
  const auto unsafe = detail::unsafe_players(egame, punish);
  return detail::restrict_with(egame, winners, unsafe);
}

}  // namespace qcg
