// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcg/cli/run.hpp"
#include "qcg/coalition.hpp"
#include "qcg/equilibrium.hpp"
#include "qcg/generators.hpp"
#include "qcg/metrics.hpp"
#include "qcg/oracle.hpp"
#include "qcg/parser.hpp"
#include "random_games.hpp"

namespace {

using namespace qcg;

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::vector<CostVector> costs_of(const std::vector<FrontierEntry>& entries) {
  std::vector<CostVector> out;
  for (const auto& e : entries) out.push_back(e.cost);
  return out;
}

std::string show(const std::vector<CostVector>& vs) {
  std::string out = "{";
  for (const auto& v : vs) out += (out.size() > 1 ? "," : "") + to_string(v);
  return out + "}";
}

// Odd indices draw forward-only games with a full rule table.
std::vector<Game> small_random_games(std::uint64_t seed, std::size_t count, std::size_t min_players,
                                     std::size_t max_players, std::size_t max_states, bool mixed = false) {
  std::mt19937_64 rng(seed);
  std::vector<Game> out;
  for (std::size_t i = 0; i < count; ++i) {
    testing::RandomGameParams params;
    params.layered = params.full_table = mixed && i % 2 == 1;
    params.players = min_players + i % (max_players - min_players + 1);
    params.max_states = max_states;
    params.min_actions = 1;
    params.max_actions = 2;
    params.max_cost = 3;
    out.push_back(testing::random_game(rng, params));
  }
  return out;
}

std::vector<Game> with_fixtures(std::vector<Game> games) {
  for (auto& [name, g] : testing::fixture_games()) games.push_back(g);
  return games;
}

void check_value_iteration(const Game& g) {
  const Arena& arena = g.arena();
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    ValueIterationTrace trace;
    const ValueMap v = coalition_values(arena, a, &trace);
    require(trace.iterates.size() - 1 <= arena.num_states(), "fixpoint not within |V| iterations");
    for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i)
      for (StateId s = 0; s < arena.num_states(); ++s)
        require(trace.iterates[i + 1][s] <= trace.iterates[i][s], "value iteration not monotone");
    for (StateId s : g.targets(a)) require(v.values[s] == Cost{}, "nonzero value on a target");
  }
}

void check_witnesses(const Game& g) {
  const auto analysis = analyze_equilibria(g);
  for (const auto& e : analysis.frontier) {
    require(check_ne(analysis.egame, e.witness, analysis.punish).is_ne, "witness fails check_ne");
    require(outcome_cost(analysis.egame, e.witness) == e.cost, "witness cost mismatch");
  }
}

// Criterion 10 runs over everything criteria 1-9 solved.
std::vector<Game> g_solved;
std::string g_note;

void criterion1() {
  const Game g = load_game(testing::data_path("xor.game"));
  g_solved.push_back(g);
  require(!ne_exists(g), "xor game has an equilibrium");
}

void criterion2() {
  const Game g = load_game(testing::data_path("expne3.game"));
  g_solved.push_back(g);
  std::vector<CostVector> expected;
  for (std::uint64_t x = 0; x <= 7; ++x) expected.push_back({Cost(x), Cost(7 - x)});
  const auto got = costs_of(compute_ne_po(g));
  require(got == expected, "frontier " + show(got));
}

void criterion3() {
  const Game g = load_game(testing::data_path("infne.game"));
  g_solved.push_back(g);
  const auto got = costs_of(compute_ne_po(g));
  require(got == std::vector<CostVector>{{Cost(1), Cost(1)}}, "frontier " + show(got));
  const MetricsReport r = pos_poa(g);
  require(r.unbounded == Unboundedness::kPump && r.pump.has_value(), "no pump reported");
  require(r.poa && r.poa->is_infinite(), "PoA not unbounded");
}

void criterion4() {
  const Game g = gen_pos(5);
  g_solved.push_back(g);
  const MetricsReport r = pos_poa(g);
  require(r.social_optimum == Cost(1), "SO = " + r.social_optimum.str());
  require(r.pos && *r.pos == Ratio::of(10, 1), "PoS = " + (r.pos ? r.pos->str() : "undefined"));
  require(r.poa && r.poa->is_infinite(), "PoA = " + (r.poa ? r.poa->str() : "undefined"));
}

void criterion5_and_7(bool value_iteration) {
  const auto games = with_fixtures(small_random_games(505, 200, 1, 3, 5));
  for (std::size_t i = 0; i < games.size(); ++i) {
    const Game& g = games[i];
    if (value_iteration) {
      check_value_iteration(g);
      continue;
    }
    for (PlayerId a = 0; a < g.num_players(); ++a)
      require(coalition_values(g.arena(), a).values == oracle_coalition_values(g.arena(), a).values,
              "coalition mismatch on game " + std::to_string(i) + "\n" + serialize_game(g));
  }
}

void criterion6() {
  auto games = small_random_games(606, 200, 2, 2, 4, true);
  for (auto& g : small_random_games(607, 50, 3, 3, 4, true)) games.push_back(g);
  games = with_fixtures(std::move(games));
  std::size_t none = 0, several = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    const auto fast = costs_of(compute_ne_po(games[i]));
    none += fast.empty();
    several += fast.size() > 1;
    const auto slow = costs_of(oracle_ne_po(games[i]));
    require(fast == slow, "game " + std::to_string(i) + ": solver " + show(fast) + " oracle " + show(slow) + "\n" +
                              serialize_game(games[i]));
    g_solved.push_back(games[i]);
  }
  g_note = std::to_string(games.size()) + " games, " + std::to_string(none) + " without NE, " +
           std::to_string(several) + " with several Pareto vectors";
}

void criterion8() {
  std::mt19937_64 rng(808);
  int yes[3] = {0, 0, 0};
  for (int i = 0; i < 100; ++i) {
    const PartitionInstance inst = testing::random_partition(rng, 8, 10);
    const Game g = gen_partition(inst.numbers);
    const auto frontier = costs_of(compute_ne_po(g));
    yes[0] += !frontier.empty();
    require(frontier.empty() != oracle_decision(inst), "partition contract broken on instance " + std::to_string(i));
    const Cost s(partition_half_sum(inst.numbers));
    require(frontier.empty() || frontier == std::vector<CostVector>{{s, s}}, "partition frontier " + show(frontier));
    if (i < 10) g_solved.push_back(g);
  }
  for (int i = 0; i < 50; ++i) {
    const CnfFormula f = testing::random_cnf(rng, 4, 12);
    yes[1] += oracle_decision(f);
    require(ne_exists(gen_3sat(f)) == oracle_decision(f), "3sat contract broken on instance " + std::to_string(i));
  }
  for (int i = 0; i < 30; ++i) {
    const HamPathInstance h = testing::random_digraph(rng, 5);
    yes[2] += oracle_decision(h);
    require(ne_exists(gen_hampath(h.graph, h.start)) == oracle_decision(h),
            "hampath contract broken on instance " + std::to_string(i));
  }
  g_note = "positive instances: partition " + std::to_string(yes[0]) + "/100, 3sat " + std::to_string(yes[1]) +
           "/50, hampath " + std::to_string(yes[2]) + "/30";
}

void criterion9() {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 50; ++i) {
    testing::RandomGameParams params;
    params.players = 2 + i % 2;
    params.max_states = 5;
    params.joint_uniform = true;
    const Game g = testing::random_game(rng, params);
    const auto fast = costs_of(ne_po_joint_uniform(g));
    const auto general = costs_of(compute_ne_po(g));
    require(fast == general, "joint-uniform " + show(fast) + " general " + show(general));
    g_solved.push_back(g);
  }
  for (int i = 0; i < 50; ++i) {
    testing::RandomGameParams params;
    params.players = 2;
    params.max_states = 5;
    params.max_actions = 3;
    params.max_cost = 3;
    const Game g = testing::random_game(rng, params);
    const auto frontier = compute_ne_po(g);
    const double m = std::max<double>(1.0, static_cast<double>(g.arena().max_cost().value()));
    const double bound = std::pow(m * g.num_players() * g.num_states(), static_cast<double>(g.num_players()));
    require(static_cast<double>(frontier.size()) <= bound, "frontier larger than the unary bound");
  }
}

void criterion10() {
  for (const Game& g : g_solved) check_witnesses(g);
  const std::vector<std::vector<std::string>> runs = {
      {"qcg", "pareto", testing::data_path("expne3.game")},
      {"qcg", "metrics", testing::data_path("infne.game")},
      {"qcg", "pareto", "--gen", "partition:1,2,3"},
      {"qcg", "coalition", "--gen", "pos:5", "--player", "p1"},
      {"qcg", "pareto", "--gen", "expne:4", "--format", "table"},
  };
  for (const auto& args : runs) {
    const auto first = cli::run_command_line(args);
    const auto second = cli::run_command_line(args);
    require(first.exit_code == 0, "cli failed: " + first.error);
    require(first.output == second.output, "cli output differs across runs");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "xor fixture has no equilibrium", 1, criterion1},
      {2, "expne n=3 frontier", 5, criterion2},
      {3, "infne frontier and pump", 1, criterion3},
      {4, "pos W=5 metrics", 1, criterion4},
      {5, "coalition oracle equivalence", 120, [] { criterion5_and_7(false); }},
      {6, "frontier oracle equivalence", 600, criterion6},
      {7, "value iteration properties", 120, [] { criterion5_and_7(true); }},
      {8, "reduction contracts", 900, criterion8},
      {9, "fragment agreement and unary bound", 300, criterion9},
      {10, "witness integrity and deterministic output", 600, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    g_note.clear();
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "over time limit";
    }
    if (ok) detail = g_note;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
