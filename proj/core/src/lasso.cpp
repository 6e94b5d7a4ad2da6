#include "qcg/lasso.hpp"

#include <set>

#include "qcg/errors.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/game.hpp"

namespace qcg {

std::vector<Step> Lasso::unrolled(std::size_t unrollings) const {
  std::vector<Step> out = prefix;
  for (std::size_t i = 0; i < unrollings; ++i) out.insert(out.end(), cycle.begin(), cycle.end());
  return out;
}

void validate_lasso(const ExpandedGame& egame, const Lasso& lasso) {
  const Arena& arena = egame.arena();
  if (lasso.cycle.empty()) throw InputError("lasso cycle must be nonempty");
  StateId at = egame.initial();
  auto walk = [&](const Step& step, const char* part, std::size_t i) {
    if (step.state >= egame.num_states() || step.profile >= arena.num_profiles())
      throw InputError(std::string("lasso ") + part + " step " + std::to_string(i) + " is out of range");
    if (step.state != at)
      throw InputError(std::string("lasso ") + part + " step " + std::to_string(i) + " does not continue the path");
    at = arena.successor(step.state, step.profile);
  };
  for (std::size_t i = 0; i < lasso.prefix.size(); ++i) walk(lasso.prefix[i], "prefix", i);
  const StateId start = at;
  std::set<StateId> seen;
  for (std::size_t i = 0; i < lasso.cycle.size(); ++i) {
    walk(lasso.cycle[i], "cycle", i);
    if (!seen.insert(lasso.cycle[i].state).second) throw InputError("lasso cycle is not simple");
  }
  if (at != start) throw InputError("lasso cycle does not return to its first state");
}

PlayerSet lasso_winners(const ExpandedGame& egame, const Lasso& lasso) {
  validate_lasso(egame, lasso);
  return egame.label(lasso.cycle.front().state).reached;
}

CostVector outcome_cost(const ExpandedGame& egame, const Lasso& lasso) {
  const PlayerSet winners = lasso_winners(egame, lasso);
  const Arena& arena = egame.arena();
  const std::size_t k = arena.num_players();
  CostVector total(k);
  for (const Step& s : lasso.unrolled(1)) {
    auto c = arena.costs(s.state, s.profile);
    for (PlayerId p = 0; p < k; ++p) total[p] += c[p];
  }
  for (PlayerId p = 0; p < k; ++p)
    if (!winners.contains(p)) total[p] = kInfinity;
  return total;
}

Lasso lasso_from_base(const Game& game, const ExpandedGame& egame, std::span<const BaseStep> prefix,
                      std::span<const BaseStep> cycle) {
  const Arena& arena = egame.arena();
  Lasso lasso;
  StateId at = egame.initial();
  auto step = [&](const BaseStep& b, const char* part, std::size_t i) {
    if (b.state >= game.num_states()) throw InputError(std::string("lasso ") + part + " state out of range");
    if (egame.label(at).base != b.state) {
      throw InputError(std::string("lasso ") + part + " step " + std::to_string(i) + " is at '" +
                       game.states()[b.state] + "' but the play is at '" + game.states()[egame.label(at).base] + "'");
    }
    std::size_t p;
    try {
      p = arena.profiles().index(b.profile);
    } catch (const std::exception& e) {
      throw InputError(std::string("lasso ") + part + " step " + std::to_string(i) + ": invalid profile");
    }
    Step s{at, p};
    at = arena.successor(at, p);
    return s;
  };
  for (std::size_t i = 0; i < prefix.size(); ++i) lasso.prefix.push_back(step(prefix[i], "prefix", i));
  for (std::size_t i = 0; i < cycle.size(); ++i) lasso.cycle.push_back(step(cycle[i], "cycle", i));
  if (!lasso.cycle.empty() && at != lasso.cycle.front().state)
    throw InputError("lasso cycle does not close in the expanded game");
  validate_lasso(egame, lasso);
  return lasso;
}

std::pair<std::vector<BaseStep>, std::vector<BaseStep>> lasso_to_base(const ExpandedGame& egame, const Lasso& lasso) {
  auto convert = [&](const std::vector<Step>& steps) {
    std::vector<BaseStep> out;
    for (const Step& s : steps) out.push_back({egame.label(s.state).base, egame.arena().profiles().decode(s.profile)});
    return out;
  };
  return {convert(lasso.prefix), convert(lasso.cycle)};
}

std::string describe_lasso(const Game& game, const ExpandedGame& egame, const Lasso& lasso) {
  std::string out;
  auto render = [&](const std::vector<Step>& steps) {
    for (const Step& s : steps) {
      out += game.states()[egame.label(s.state).base];
      out += " -";
      out += game.profile_name(egame.arena().profiles().decode(s.profile));
      out += "-> ";
    }
  };
  render(lasso.prefix);
  out += "[ ";
  render(lasso.cycle);
  out += "]";
  return out;
}

}  // namespace qcg
