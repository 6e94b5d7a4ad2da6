#include "qcg/cli/run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qcg/coalition.hpp"
#include "qcg/equilibrium.hpp"
#include "qcg/errors.hpp"
#include "qcg/expanded_game.hpp"
#include "qcg/game.hpp"
#include "qcg/generators.hpp"
#include "qcg/metrics.hpp"
#include "qcg/oracle.hpp"
#include "qcg/parser.hpp"

namespace qcg::cli {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t to_number(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 18 || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw InputError("invalid " + what + " '" + text + "'");
  return std::stoull(text);
}

long long to_signed(const std::string& text) {
  if (!text.empty() && text[0] == '-') return -static_cast<long long>(to_number(text.substr(1), "literal"));
  return static_cast<long long>(to_number(text, "literal"));
}

std::vector<std::uint64_t> parse_numbers(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(to_number(part, "number"));
  return out;
}

Json cost_json(Cost c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

Json vector_json(const CostVector& v) {
  Json out = Json::array();
  for (Cost c : v) out.push_back(cost_json(c));
  return out;
}

Json winners_json(const Game& game, PlayerSet winners) {
  Json out = Json::array();
  for (PlayerId p : winners.members()) out.push_back(game.players()[p]);
  return out;
}

Json lasso_json(const Game& game, const ExpandedGame& egame, const Lasso& lasso) {
  auto [prefix, cycle] = lasso_to_base(egame, lasso);
  auto steps = [&](const std::vector<BaseStep>& xs) {
    Json out = Json::array();
    for (const auto& s : xs) {
      Json profile = Json::array();
      for (PlayerId p = 0; p < s.profile.size(); ++p) profile.push_back(game.actions(p)[s.profile[p]]);
      out.push_back(Json{{"state", game.states()[s.state]}, {"profile", profile}});
    }
    return out;
  };
  return Json{{"prefix", steps(prefix)}, {"cycle", steps(cycle)}};
}

Json entry_json(const Game& game, const ExpandedGame& egame, const FrontierEntry& e) {
  return Json{{"cost", vector_json(e.cost)},
              {"winners", winners_json(game, e.winners)},
              {"witness", lasso_json(game, egame, e.witness)}};
}

Json ratio_json(const std::optional<Ratio>& r) {
  if (!r) return nullptr;
  if (r->is_infinite()) return "inf";
  std::ostringstream decimal;
  decimal << std::setprecision(12) << r->to_double();
  return Json{{"num", r->num()}, {"den", r->den()}, {"decimal", decimal.str()}};
}

std::string cost_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string vector_text(const Json& j) {
  std::string out = "(";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + cost_text(j[i]);
  return out + ")";
}

std::string steps_text(const Json& steps) {
  std::string out;
  for (const auto& s : steps) {
    std::string profile;
    for (const auto& a : s["profile"]) profile += (profile.empty() ? "" : ",") + a.get<std::string>();
    out += s["state"].get<std::string>() + " -(" + profile + ")-> ";
  }
  return out;
}

std::string lasso_text(const Json& lasso) {
  return steps_text(lasso["prefix"]) + "[ " + steps_text(lasso["cycle"]) + "]";
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) return vector_text(j);
  if (j.is_object() && j.contains("num"))
    return j["den"] == 1 ? j["num"].dump() : j["num"].dump() + "/" + j["den"].dump();
  return j.dump();
}

// Generic rendering: scalar fields as a key/value table, arrays of entries
// (frontier) and value maps as their own tables.
std::string render_table(const Json& doc) {
  std::string out;
  std::vector<std::vector<std::string>> fields;
  for (const auto& [key, value] : doc.items()) {
    if (key == "frontier" || key == "values" || key == "witness" || key == "pump" || key == "strategy") continue;
    fields.push_back({key, scalar_text(value)});
  }
  if (!fields.empty()) out += table({"field", "value"}, fields);
  if (doc.contains("values")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [state, value] : doc["values"].items()) {
      std::string move;
      if (doc.contains("strategy")) move = scalar_text(doc["strategy"][state]);
      rows.push_back({state, cost_text(value), move});
    }
    out += (out.empty() ? "" : "\n") + table({"state", "value", "coalition move"}, rows);
  }
  if (doc.contains("frontier")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : doc["frontier"])
      rows.push_back({vector_text(e["cost"]), scalar_text(e["winners"]), lasso_text(e["witness"])});
    out += (out.empty() ? "" : "\n") + table({"cost", "winners", "witness"}, rows);
  }
  for (const char* key : {"witness", "pump"}) {
    if (!doc.contains(key) || doc[key].is_null()) continue;
    const Json& w = std::string(key) == "pump" ? doc[key]["pumped"] : doc[key];
    out += (out.empty() ? "" : "\n") + std::string(key) + ": " + lasso_text(w.contains("witness") ? w["witness"] : w) + "\n";
  }
  return out;
}

Game make_game(const GenSpec& spec) {
  const auto& f = spec.family;
  if (f == "xor") return gen_xor();
  if (f == "expne") return gen_exp_ne(spec.n);
  if (f == "infne") return gen_infinite_ne();
  if (f == "pos") return gen_pos(spec.w);
  if (f == "partition") return gen_partition(spec.numbers);
  if (f == "3sat") return gen_3sat(spec.cnf);
  if (f == "hampath") return gen_hampath(spec.hampath.graph, spec.hampath.start);
  throw InputError("unknown generator family '" + f + "'");
}

Game load_input(const RunConfig& config) {
  if (config.input_path.has_value() == config.generator.has_value())
    throw InputError("exactly one input source is required: a game file or --gen");
  if (config.generator) return make_game(*config.generator);
  return load_game(*config.input_path);
}

PlayerId require_player(const Game& game, const std::string& name) {
  auto p = game.find_player(name);
  if (!p) throw InputError("unknown player '" + name + "'");
  return *p;
}

Json value_map_json(const Game& game, const ValueMap& values) {
  Json out = Json::object();
  for (StateId s = 0; s < game.num_states(); ++s) out[game.states()[s]] = cost_json(values.values[s]);
  return out;
}

Json coalition_doc(const Game& game, PlayerId player, const ValueMap& values) {
  const PunishmentTable table = punishing_strategy(game.arena(), values);
  Json strategy = Json::object();
  for (StateId s = 0; s < game.num_states(); ++s) {
    const auto move = table.move(game.arena(), s);
    Json m = Json::array();
    for (PlayerId q = 0; q < game.num_players(); ++q)
      m.push_back(q == player ? std::string("*") : game.actions(q)[move[q]]);
    strategy[game.states()[s]] = m;
  }
  return Json{{"player", game.players()[player]}, {"values", value_map_json(game, values)}, {"strategy", strategy}};
}

std::vector<BaseStep> read_steps(const Game& game, const Json& steps, const char* part) {
  if (!steps.is_array()) throw InputError(std::string("lasso '") + part + "' must be an array");
  std::vector<BaseStep> out;
  for (const auto& s : steps) {
    if (!s.is_object() || !s.contains("state") || !s.contains("profile") || !s["state"].is_string() ||
        !s["profile"].is_array())
      throw InputError(std::string("lasso '") + part + "' steps need a state name and a profile array");
    auto state = game.find_state(s["state"].get<std::string>());
    if (!state) throw InputError("unknown state '" + s["state"].get<std::string>() + "' in lasso");
    if (s["profile"].size() != game.num_players()) throw InputError("lasso profile has the wrong number of actions");
    BaseStep step{*state, {}};
    for (PlayerId p = 0; p < game.num_players(); ++p) {
      const Json& a = s["profile"][p];
      if (!a.is_string()) throw InputError("lasso actions must be names");
      auto act = game.find_action(p, a.get<std::string>());
      if (!act) throw InputError("unknown action '" + a.get<std::string>() + "' for " + game.players()[p]);
      step.profile.push_back(*act);
    }
    out.push_back(std::move(step));
  }
  return out;
}

Json read_lasso_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lasso file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("lasso file is not valid JSON: " + std::string(e.what()));
  }
  if (doc.is_object() && doc.contains("witness")) doc = doc["witness"];
  if (!doc.is_object() || !doc.contains("prefix") || !doc.contains("cycle"))
    throw InputError("lasso file needs 'prefix' and 'cycle'");
  return doc;
}

CostVector parse_bound(const std::string& text, std::size_t players) {
  CostVector out;
  for (const auto& part : split(text, ',')) out.push_back(part == "inf" ? kInfinity : Cost(to_number(part, "cost")));
  if (out.size() != players)
    throw InputError("bound has " + std::to_string(out.size()) + " entries but the game has " +
                     std::to_string(players) + " players");
  return out;
}

const char* unboundedness_name(Unboundedness u) {
  switch (u) {
    case Unboundedness::kNone:
      return "none";
    case Unboundedness::kLosingEquilibrium:
      return "losing_equilibrium";
    case Unboundedness::kPump:
      return "pump";
  }
  return "none";
}

RunResult finish(const RunConfig& config, const Json& doc, int code) {
  RunResult r;
  r.exit_code = code;
  r.output = config.format == Format::kTable ? render_table(doc) : doc.dump(2) + "\n";
  return r;
}

RunResult dispatch(const RunConfig& config) {
  if (config.command == Command::kGen) {
    if (!config.generator) throw InputError("gen needs a family");
    RunResult r;
    r.output = serialize_game(make_game(*config.generator));
    return r;
  }

  const Game game = load_input(config);
  const SolverOptions solver{config.player_cap};
  const OracleOptions oracle{config.strategy_cap, config.path_cap};

  switch (config.command) {
    case Command::kValidate: {
      const ExpandedGame egame = expand(game);
      Json players = Json::array();
      for (const auto& p : game.players()) players.push_back(p);
      return finish(config,
                    Json{{"valid", true},
                         {"players", players},
                         {"states", game.num_states()},
                         {"rules", game.rules().size()},
                         {"profiles", game.arena().num_profiles()},
                         {"expanded_states", egame.num_states()}},
                    kExitOk);
    }
    case Command::kCoalition: {
      const PlayerId p = require_player(game, config.player);
      return finish(config, coalition_doc(game, p, coalition_values(game.arena(), p)), kExitOk);
    }
    case Command::kCheck: {
      const Json doc = read_lasso_file(config.lasso_path);
      const ExpandedGame egame = expand(game);
      const auto prefix = read_steps(game, doc["prefix"], "prefix");
      const auto cycle = read_steps(game, doc["cycle"], "cycle");
      const Lasso lasso = lasso_from_base(game, egame, prefix, cycle);
      const auto punish = lift_values(all_coalition_values(game.arena()), egame);
      const NEVerdict verdict = check_ne(egame, lasso, punish);
      Json out{{"is_ne", verdict.is_ne},
               {"cost", vector_json(outcome_cost(egame, lasso))},
               {"winners", winners_json(game, lasso_winners(egame, lasso))}};
      if (verdict.witness) {
        const auto& d = *verdict.witness;
        out["deviation"] = Json{{"position", d.position},
                                {"player", game.players()[d.player]},
                                {"action", game.actions(d.player)[d.action]},
                                {"improvement", cost_json(d.improvement)}};
      }
      return finish(config, out, verdict.is_ne ? kExitOk : kExitNegative);
    }
    case Command::kPareto: {
      const EquilibriumAnalysis a = analyze_equilibria(game, solver);
      Json frontier = Json::array();
      for (const auto& e : a.frontier) frontier.push_back(entry_json(game, a.egame, e));
      return finish(config, Json{{"frontier", frontier}}, kExitOk);
    }
    case Command::kExists: {
      const EquilibriumAnalysis a = analyze_equilibria(game, solver);
      Json out{{"ne_exists", !a.frontier.empty()}};
      if (!a.frontier.empty()) out["witness"] = entry_json(game, a.egame, a.frontier.front());
      return finish(config, out, a.frontier.empty() ? kExitNegative : kExitOk);
    }
    case Command::kThreshold: {
      const CostVector bound = parse_bound(config.bound, game.num_players());
      const EquilibriumAnalysis a = analyze_equilibria(game, solver);
      Json out{{"bound", vector_json(bound)}, {"satisfied", false}};
      for (const auto& e : a.frontier) {
        if (!dominates_weakly(e.cost, bound)) continue;
        out["satisfied"] = true;
        out["witness"] = entry_json(game, a.egame, e);
        break;
      }
      return finish(config, out, out["satisfied"].get<bool>() ? kExitOk : kExitNegative);
    }
    case Command::kMetrics: {
      const MetricsReport m = pos_poa(game, MetricsOptions{solver, config.pump_cycle_cap});
      Json out{{"social_optimum", cost_json(m.social_optimum)}, {"has_ne", m.has_ne}};
      if (!m.has_ne) {
        out["status"] = "no NE";
        out["pos"] = nullptr;
        out["poa"] = nullptr;
        return finish(config, out, kExitOk);
      }
      out["best_ne_util"] = cost_json(m.best_ne_util);
      out["worst_ne_util"] = m.unbounded == Unboundedness::kNone ? cost_json(m.worst_ne_util) : Json("unbounded");
      out["unbounded"] = unboundedness_name(m.unbounded);
      out["pos"] = ratio_json(m.pos);
      out["poa"] = ratio_json(m.poa);
      out["poa_is_lower_bound"] = m.poa_is_lower_bound;
      out["pump_search_capped"] = m.pump_search_capped;
      if (m.pump) {
        const ExpandedGame egame = expand(game);
        out["pump"] = Json{{"position", m.pump->position},
                           {"base", lasso_json(game, egame, m.pump->base)},
                           {"pumped", lasso_json(game, egame, m.pump->pumped)}};
      }
      return finish(config, out, kExitOk);
    }
    case Command::kOracle: {
      if (config.oracle == OracleCommand::kCoalition) {
        const PlayerId p = require_player(game, config.player);
        return finish(config, coalition_doc(game, p, oracle_coalition_values(game.arena(), p, oracle)), kExitOk);
      }
      const ExpandedGame egame = expand(game);
      Json frontier = Json::array();
      for (const auto& e : oracle_ne_po(game, oracle)) frontier.push_back(entry_json(game, egame, e));
      return finish(config, Json{{"frontier", frontier}}, kExitOk);
    }
    case Command::kGen:
      break;
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> parse_edges(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) {
    const auto ends = split(part, '-');
    if (ends.size() != 2) throw InputError("invalid edge '" + part + "'; expected u-v");
    out.emplace_back(to_number(ends[0], "vertex"), to_number(ends[1], "vertex"));
  }
  return out;
}

CnfFormula parse_cnf(const std::string& text, std::size_t min_variables) {
  CnfFormula f;
  f.num_variables = min_variables;
  if (text.empty()) return f;
  for (const auto& clause_text : split(text, ';')) {
    const auto lits = split(clause_text, ',');
    if (lits.size() != 3) throw InputError("clause '" + clause_text + "' must have exactly 3 literals");
    Clause c;
    for (std::size_t i = 0; i < 3; ++i) {
      const long long v = to_signed(lits[i]);
      if (v == 0) throw InputError("literal 0 is not a variable");
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      c[i] = Literal{var - 1, v < 0};
      f.num_variables = std::max(f.num_variables, var);
    }
    f.clauses.push_back(c);
  }
  return f;
}

GenSpec parse_gen_spec(const std::string& text) {
  const auto colon = text.find(':');
  GenSpec spec;
  spec.family = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  const auto& f = spec.family;
  if (f == "xor" || f == "infne") {
    if (!args.empty()) throw InputError(f + " takes no arguments");
  } else if (f == "expne") {
    spec.n = to_number(args, "n");
  } else if (f == "pos") {
    spec.w = to_number(args, "w");
  } else if (f == "partition") {
    spec.numbers = parse_numbers(args);
  } else if (f == "3sat") {
    spec.cnf = parse_cnf(args);
  } else if (f == "hampath") {
    const auto parts = split(args, ':');
    if (parts.size() < 1 || parts.size() > 3) throw InputError("hampath spec is n:edges[:start]");
    spec.hampath.graph.num_vertices = to_number(parts[0], "vertex count");
    if (parts.size() > 1) spec.hampath.graph.edges = parse_edges(parts[1]);
    if (parts.size() > 2) spec.hampath.start = to_number(parts[2], "start vertex");
  } else {
    throw InputError("unknown generator family '" + f + "'");
  }
  return spec;
}

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const CapExceeded& e) {
    return {kExitCap, "", e.what()};
  } catch (const InputError& e) {
    return {kExitInput, "", e.what()};
  } catch (const std::exception& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what()};
  }
}

RunResult run_command_line(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_command_line(static_cast<int>(argv.size()), argv.data());
}

RunResult run_command_line(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"Solver for quantitative concurrent graph games with reachability objectives", "qcg"};
  app.require_subcommand(1);

  std::string input, gen_text, format = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("game", input, "Game file");
    sub->add_option("--gen", gen_text, "Built-in game, e.g. expne:3, pos:5, partition:2,4,6");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--player-cap", config.player_cap, "Maximum players for the winner-set search")
        ->check(CLI::PositiveNumber);
    sub->add_option("--strategy-cap", config.strategy_cap, "Oracle cap on coalition strategies")
        ->check(CLI::PositiveNumber);
    sub->add_option("--path-cap", config.path_cap, "Oracle cap on explored paths")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a game");
  common(validate);
  auto* coalition = app.add_subcommand("coalition", "Punishment values against one player");
  common(coalition);
  coalition->add_option("--player", config.player, "Deviating player")->required();
  auto* check = app.add_subcommand("check", "Check whether a lasso outcome is a Nash equilibrium");
  common(check);
  check->add_option("--lasso", config.lasso_path, "Lasso JSON file")->required();
  auto* pareto = app.add_subcommand("pareto", "Pareto-optimal equilibrium costs with witnesses");
  common(pareto);
  auto* exists = app.add_subcommand("exists", "Does an equilibrium exist");
  common(exists);
  auto* threshold = app.add_subcommand("threshold", "Is there an equilibrium with cost at most the bound");
  common(threshold);
  threshold->add_option("--cost", config.bound, "Bound, e.g. 3,4 or 3,inf")->required();
  auto* metrics = app.add_subcommand("metrics", "Social optimum, price of stability and anarchy");
  common(metrics);
  metrics->add_option("--pump-cap", config.pump_cycle_cap, "Cycles tried per position by the pump search")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->require_subcommand(1);
  auto* oracle_pareto = oracle->add_subcommand("pareto", "Frontier by lasso enumeration");
  common(oracle_pareto);
  auto* oracle_coalition = oracle->add_subcommand("coalition", "Punishment values by strategy enumeration");
  common(oracle_coalition);
  oracle_coalition->add_option("--player", config.player, "Deviating player")->required();

  GenSpec gen;
  std::string numbers, cnf, edges;
  std::size_t variables = 0;
  auto* generate = app.add_subcommand("gen", "Emit a built-in game in the input format");
  generate->add_option("family", gen.family, "xor|expne|infne|pos|partition|3sat|hampath")
      ->required()
      ->check(CLI::IsMember({"xor", "expne", "infne", "pos", "partition", "3sat", "hampath"}));
  generate->add_option("--n", gen.n, "Stages of expne");
  generate->add_option("--w", gen.w, "Cost W of pos");
  generate->add_option("--numbers", numbers, "Partition numbers, e.g. 2,4,6");
  generate->add_option("--cnf", cnf, "Clauses, e.g. 1,1,1;-1,-1,-1");
  generate->add_option("--variables", variables, "Number of variables (default: largest mentioned)");
  generate->add_option("--vertices", gen.hampath.graph.num_vertices, "Vertex count");
  generate->add_option("--edges", edges, "Edges, e.g. 0-1,1-2");
  generate->add_option("--start", gen.hampath.start, "Start vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitInput, "", e.what()};
  }

  try {
    const std::pair<CLI::App*, Command> commands[] = {
        {validate, Command::kValidate}, {coalition, Command::kCoalition}, {check, Command::kCheck},
        {pareto, Command::kPareto},     {exists, Command::kExists},       {threshold, Command::kThreshold},
        {metrics, Command::kMetrics},   {oracle, Command::kOracle},       {generate, Command::kGen}};
    for (auto [sub, cmd] : commands)
      if (sub->parsed()) config.command = cmd;
    if (oracle_coalition->parsed()) config.oracle = OracleCommand::kCoalition;
    config.format = format == "table" ? Format::kTable : Format::kJson;
    if (!input.empty()) config.input_path = input;
    if (!gen_text.empty()) config.generator = parse_gen_spec(gen_text);
    if (config.command == Command::kGen) {
      if (!numbers.empty()) gen.numbers = parse_numbers(numbers);
      gen.cnf = parse_cnf(cnf, variables);
      gen.hampath.graph.edges = parse_edges(edges);
      config.generator = gen;
    }
  } catch (const InputError& e) {
    return {kExitInput, "", e.what()};
  }
  return run(config);
}

}  // namespace qcg::cli
