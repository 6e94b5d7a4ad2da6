#include "qcg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

constexpr std::nullopt_t any = std::nullopt;

struct Builder {
  GameDescription d;

  StateId state(std::string name) {
    d.states.push_back(std::move(name));
    return d.states.size() - 1;
  }
  void rule(StateId from, ActionPattern pattern, StateId to, std::vector<std::uint64_t> cost) {
    CostVector c;
    for (auto x : cost) c.push_back(Cost(x));
    d.rules.push_back(TransitionRule{from, std::move(pattern), to, std::move(c)});
  }
  void loop(StateId s, std::uint64_t cost = 0) {
    rule(s, ActionPattern(d.players.size(), any), s, std::vector<std::uint64_t>(d.players.size(), cost));
  }
};

std::vector<std::string> numbered(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::to_string(i));
  return out;
}

Builder two_player(std::vector<std::string> actions) {
  Builder b;
  b.d.players = {"p1", "p2"};
  b.d.actions = {actions, actions};
  return b;
}

// Matching actions route to `same`, mismatching to `differ`.
void xor_stage(Builder& b, StateId from, StateId to, std::vector<std::uint64_t> same,
               std::vector<std::uint64_t> differ) {
  b.rule(from, {0, 0}, to, same);
  b.rule(from, {1, 1}, to, same);
  b.rule(from, {any, any}, to, std::move(differ));
}

}  // namespace

Game gen_xor() {
  Builder b = two_player({"a", "b"});
  const StateId s = b.state("s");
  const StateId t = b.state("t");
  b.d.initial = s;
  b.d.targets = {{t}, {t}};
  xor_stage(b, s, t, {0, 1}, {1, 0});
  b.loop(t);
  return Game(std::move(b.d));
}

Game gen_exp_ne(std::size_t n) {
  if (n < 1 || n > 20) throw InputError("gen_exp_ne requires 1 <= n <= 20");
  Builder b = two_player({"a", "b"});
  std::vector<StateId> s;
  for (std::size_t i = 0; i <= n; ++i) s.push_back(b.state("s" + std::to_string(i)));
  const StateId t = b.state("t");
  b.d.initial = s[0];
  b.d.targets = {{t}, {t}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t w = std::uint64_t{1} << i;
    xor_stage(b, s[i], s[i + 1], {0, w}, {w, 0});
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  b.rule(s[n], {1, 1}, t, {0, 0});
  b.rule(s[n], {any, any}, t, {top, top});
  b.loop(t);
  return Game(std::move(b.d));
}

Game gen_infinite_ne() {
  Builder b = two_player({"a", "b"});
  const StateId s = b.state("s");
  const StateId t = b.state("t");
  const StateId sink = b.state("sink");
  b.d.initial = s;
  b.d.targets = {{t}, {t}};
  b.rule(s, {0, 0}, s, {1, 1});
  b.rule(s, {1, 1}, t, {1, 1});
  b.rule(s, {any, any}, sink, {1, 1});
  b.loop(t, 1);
  b.loop(sink, 1);
  return Game(std::move(b.d));
}

Game gen_pos(std::uint64_t w) {
  if (w < 1) throw InputError("gen_pos requires w >= 1");
  Builder b = two_player({"0", "1"});
  std::vector<StateId> s;
  for (int i = 0; i < 5; ++i) s.push_back(b.state("s" + std::to_string(i)));
  b.d.initial = s[0];
  b.d.targets = {{s[2], s[4]}, {s[2], s[4]}};
  b.rule(s[0], {0, 0}, s[1], {0, 0});
  b.rule(s[0], {any, any}, s[3], {w, w});
  xor_stage(b, s[1], s[2], {0, 1}, {1, 0});
  b.rule(s[3], {0, 0}, s[4], {0, 0});
  b.rule(s[3], {any, any}, s[3], {w, w});
  b.loop(s[2]);
  b.loop(s[4]);
  return Game(std::move(b.d));
}

std::uint64_t partition_half_sum(std::span<const std::uint64_t> numbers) {
  const bool odd = std::any_of(numbers.begin(), numbers.end(), [](std::uint64_t x) { return x % 2 != 0; });
  std::uint64_t total = 0;
  for (auto x : numbers) total += odd ? 2 * x : x;
  return total / 2;
}

Game gen_partition(std::span<const std::uint64_t> numbers) {
  if (numbers.empty()) throw InputError("gen_partition requires at least one number");
  for (auto x : numbers) {
    if (x == 0) throw InputError("gen_partition requires positive numbers");
    if (x > (std::uint64_t{1} << 40)) throw InputError("gen_partition number too large");
  }
  const bool odd = std::any_of(numbers.begin(), numbers.end(), [](std::uint64_t x) { return x % 2 != 0; });
  const std::uint64_t S = partition_half_sum(numbers);

  Builder b = two_player({"0", "1"});
  const StateId s = b.state("s");
  const StateId t1 = b.state("t1");
  const StateId t2 = b.state("t2");
  std::vector<StateId> v;
  for (std::size_t i = 0; i < numbers.size(); ++i) v.push_back(b.state("v" + std::to_string(i + 1)));
  const StateId r1 = b.state("r1");
  const StateId r2 = b.state("r2");
  b.d.initial = s;
  b.d.targets = {{t2, r2}, {t2, r2}};

  xor_stage(b, s, v[0], {0, 0}, {S, S});
  b.d.rules.back().target = t1;
  xor_stage(b, t1, t2, {0, 1}, {1, 0});
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    const std::uint64_t x = odd ? 2 * numbers[i] : numbers[i];
    xor_stage(b, v[i], i + 1 < v.size() ? v[i + 1] : r1, {x, 0}, {0, x});
  }
  b.rule(r1, {0, 0}, r2, {0, 0});
  b.rule(r1, {any, any}, r2, {S + 2, S + 2});
  b.loop(t2);
  b.loop(r2);
  return Game(std::move(b.d));
}

std::size_t partition_state_count(std::size_t n) { return n + 5; }

Game gen_3sat(const CnfFormula& formula) {
  const std::size_t n = formula.num_variables;
  const std::size_t m = formula.clauses.size();
  if (n < 1) throw InputError("gen_3sat requires at least one variable");
  if (2 * n + 1 > kMaxPlayers) throw CapExceeded("gen_3sat supports at most 15 variables");
  for (const Clause& c : formula.clauses)
    for (const Literal& l : c)
      if (l.variable >= n) throw InputError("clause mentions undeclared variable x" + std::to_string(l.variable + 1));

  Builder b;
  const std::size_t k = 2 * n + 1;
  b.d.players.push_back("p0");
  b.d.actions.push_back(numbered(3));
  for (std::size_t i = 1; i <= n; ++i) {
    b.d.players.push_back("t" + std::to_string(i));
    b.d.players.push_back("f" + std::to_string(i));
    b.d.actions.push_back(numbered(2));
    b.d.actions.push_back(numbered(2));
  }
  auto top = [](std::size_t var) { return 1 + 2 * var; };
  auto bot = [](std::size_t var) { return 2 + 2 * var; };

  std::vector<StateId> clause;
  for (std::size_t j = 1; j <= m + 1; ++j) clause.push_back(b.state("c" + std::to_string(j)));
  std::vector<StateId> stop_top, stop_bot;
  for (std::size_t i = 1; i <= n; ++i) {
    stop_top.push_back(b.state("top" + std::to_string(i)));
    stop_bot.push_back(b.state("bot" + std::to_string(i)));
  }
  // literal[(var * m + j) * 2 + negated]
  std::vector<StateId> literal;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      literal.push_back(b.state("x" + std::to_string(i) + "_" + std::to_string(j)));
      literal.push_back(b.state("nx" + std::to_string(i) + "_" + std::to_string(j)));
    }
  b.d.initial = clause[0];
  std::vector<StateId> goal(stop_top.begin(), stop_top.end());
  goal.insert(goal.end(), stop_bot.begin(), stop_bot.end());
  goal.push_back(clause[m]);
  std::sort(goal.begin(), goal.end());
  b.d.targets.assign(k, goal);

  auto zeros = [&] { return std::vector<std::uint64_t>(k, 0); };
  for (std::size_t j = 0; j < m; ++j)
    for (ActionId pick = 0; pick < 3; ++pick) {
      const Literal& l = formula.clauses[j][pick];
      ActionPattern pattern(k, any);
      pattern[0] = pick;
      b.rule(clause[j], pattern, literal[(l.variable * m + j) * 2 + (l.negated ? 1 : 0)], zeros());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (int neg = 0; neg < 2; ++neg) {
        const StateId here = literal[(i * m + j) * 2 + neg];
        const PlayerId stopper = neg ? bot(i) : top(i);
        const PlayerId other = neg ? top(i) : bot(i);
        auto cont = zeros();
        cont[other] = 2;
        for (ActionId a0 = 0; a0 < 3; ++a0) {
          ActionPattern pattern(k, any);
          pattern[0] = a0;
          pattern[stopper] = a0 % 2;
          b.rule(here, pattern, clause[j + 1], cont);
        }
        auto stop = zeros();
        stop[stopper] = 1;
        stop[0] = 1;
        b.rule(here, ActionPattern(k, any), neg ? stop_bot[i] : stop_top[i], stop);
      }
  for (StateId g : goal) b.loop(g);
  return Game(std::move(b.d));
}

std::size_t sat_state_count(std::size_t num_variables, std::size_t num_clauses) {
  return num_clauses + 1 + 2 * num_variables + 2 * num_variables * num_clauses;
}

Game gen_hampath(const Digraph& graph, std::size_t start) {
  const std::size_t n = graph.num_vertices;
  if (n < 1 || n > 6) throw CapExceeded("gen_hampath supports 1 to 6 vertices");
  if (start >= n) throw InputError("start vertex out of range");
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (auto [u, v] : graph.edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    edge_set.emplace(u, v);
  }
  const std::vector<std::pair<std::size_t, std::size_t>> edges(edge_set.begin(), edge_set.end());
  std::vector<std::vector<std::size_t>> out(n);  // edge indices per source
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].first].push_back(e);
  std::size_t width = 2;
  for (const auto& o : out) width = std::max(width, o.size());

  Builder b;
  for (std::size_t v = 0; v < n; ++v) {
    b.d.players.push_back("v" + std::to_string(v));
    b.d.actions.push_back(numbered(width));
  }
  std::vector<StateId> vertex, edge, q;
  for (std::size_t v = 0; v < n; ++v) vertex.push_back(b.state("v" + std::to_string(v)));
  for (auto [u, v] : edges) edge.push_back(b.state("e" + std::to_string(u) + "_" + std::to_string(v)));
  for (std::size_t i = 0; i <= 2 * n + 1; ++i) q.push_back(b.state("q" + std::to_string(i)));
  std::vector<std::vector<StateId>> r(2 * n + 4);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) r[i].push_back(b.state("r" + std::to_string(i) + "_v" + std::to_string(v)));
  b.d.initial = q[0];
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<StateId> f{vertex[v], q[2 * n - 1], r[2 * n + 3][v]};
    std::sort(f.begin(), f.end());
    b.d.targets.push_back(f);
  }

  const std::vector<std::uint64_t> ones(n, 1);
  const ActionPattern wild(n, any);
  std::size_t profiles = 1;
  for (std::size_t v = 0; v < n; ++v) profiles *= width;
  auto each_profile = [&](auto&& f) {
    ActionPattern pattern(n);
    for (std::size_t idx = 0; idx < profiles; ++idx) {
      std::size_t rest = idx, sum = 0;
      for (std::size_t v = 0; v < n; ++v) {
        pattern[v] = static_cast<ActionId>(rest % width);
        sum += rest % width;
        rest /= width;
      }
      f(pattern, sum);
    }
  };

  each_profile([&](const ActionPattern& p, std::size_t sum) { b.rule(q[0], p, sum % 2 == 0 ? vertex[start] : q[1], ones); });
  for (std::size_t i = 1; i <= 2 * n; ++i) b.rule(q[i], wild, q[i + 1], ones);
  b.loop(q[2 * n + 1], 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t choice = 0; choice < out[u].size(); ++choice)
      b.rule(vertex[u], ActionPattern(n, static_cast<ActionId>(choice)), edge[out[u][choice]], ones);
    each_profile([&](const ActionPattern& p, std::size_t sum) {
      const bool agreed = std::all_of(p.begin(), p.end(), [&](auto a) { return a == p[0]; }) && *p[0] < out[u].size();
      if (!agreed) b.rule(vertex[u], p, r[0][sum % n], ones);
    });
  }
  for (std::size_t e = 0; e < edges.size(); ++e) b.rule(edge[e], wild, vertex[edges[e].second], ones);
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) b.rule(r[i][v], wild, r[i + 1][v], ones);
  for (std::size_t v = 0; v < n; ++v) b.loop(r.back()[v], 1);
  return Game(std::move(b.d));
}

std::size_t hampath_state_count(std::size_t num_vertices, std::size_t num_edges) {
  return num_vertices + num_edges + (2 * num_vertices + 2) + (2 * num_vertices + 4) * num_vertices;
}

}  // namespace qcg
