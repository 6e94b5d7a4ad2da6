#include "qcg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

enum class Tok { kWord, kLBracket, kRBracket, kComma, kColon, kArrow, kStar };

struct Token {
  Tok kind;
  std::string text;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '[') {
      out.push_back({Tok::kLBracket, "["}), ++i;
    } else if (c == ']') {
      out.push_back({Tok::kRBracket, "]"}), ++i;
    } else if (c == ',') {
      out.push_back({Tok::kComma, ","}), ++i;
    } else if (c == ':') {
      out.push_back({Tok::kColon, ":"}), ++i;
    } else if (c == '*') {
      out.push_back({Tok::kStar, "*"}), ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->"}), i += 2;
    } else if (is_word_char(c) || c == '-') {
      std::size_t j = i + 1;
      while (j < line.size() && is_word_char(line[j])) ++j;
      out.push_back({Tok::kWord, std::string(line.substr(i, j - i))});
      i = j;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class LineCursor {
 public:
  LineCursor(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  bool peek(Tok kind) const { return !done() && tokens_[pos_].kind == kind; }
  bool peek_word(std::string_view w) const { return peek(Tok::kWord) && tokens_[pos_].text == w; }

  std::string word(const char* what) {
    if (!peek(Tok::kWord)) fail(std::string("expected ") + what);
    validate_name(tokens_[pos_].text, what);
    return tokens_[pos_++].text;
  }
  std::string raw_word(const char* what) {
    if (!peek(Tok::kWord)) fail(std::string("expected ") + what);
    return tokens_[pos_++].text;
  }
  void expect(Tok kind, const char* what) {
    if (!peek(kind)) fail(std::string("expected ") + what);
    ++pos_;
  }
  bool accept(Tok kind) {
    if (!peek(kind)) return false;
    ++pos_;
    return true;
  }
  void expect_end() {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

 private:
  void validate_name(const std::string& name, const char* what) const {
    if (name.front() == '-') fail(std::string("invalid ") + what + " '" + name + "'");
  }

  std::vector<Token> tokens_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct RawRule {
  std::size_t line;
  std::string source;
  std::vector<std::string> pattern;  // "*" for wildcard
  std::string target;
  std::vector<std::string> cost;
};

struct RawState {
  std::size_t line;
  std::string name;
  bool init;
  std::vector<std::string> target_players;
};

std::uint64_t parse_nat(const std::string& text, std::size_t line) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(),
                                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!digits) throw ParseError(line, "cost '" + text + "' is not a non-negative integer");
  if (text.size() > 18) throw ParseError(line, "cost '" + text + "' is too large");
  return std::stoull(text);
}

}  // namespace

Game parse_game(std::string_view text) {
  std::optional<std::size_t> players_line;
  std::vector<std::string> players;
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> actions;
  std::vector<RawState> states;
  std::vector<RawRule> rules;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur(tokenize(line, line_no), line_no);
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string keyword = cur.raw_word("keyword");
    if (keyword == "players") {
      if (players_line) cur.fail("duplicate 'players' declaration");
      players_line = line_no;
      while (!cur.done()) players.push_back(cur.word("player name"));
      if (players.empty()) cur.fail("'players' needs at least one name");
    } else if (keyword == "actions") {
      std::string player = cur.word("player name");
      cur.expect(Tok::kColon, "':' after player name");
      std::vector<std::string> symbols;
      while (!cur.done()) symbols.push_back(cur.word("action symbol"));
      if (symbols.empty()) cur.fail("player '" + player + "' needs at least one action");
      if (!actions.emplace(player, std::make_pair(line_no, std::move(symbols))).second)
        cur.fail("duplicate actions for player '" + player + "'");
    } else if (keyword == "state") {
      RawState st{line_no, cur.word("state name"), false, {}};
      while (!cur.done()) {
        if (cur.peek_word("init")) {
          cur.raw_word("init");
          if (st.init) cur.fail("duplicate 'init'");
          st.init = true;
        } else if (cur.peek_word("target")) {
          cur.raw_word("target");
          cur.expect(Tok::kColon, "':' after 'target'");
          while (!cur.done() && !cur.peek_word("init")) st.target_players.push_back(cur.word("player name"));
          if (st.target_players.empty()) cur.fail("'target:' needs at least one player");
        } else {
          cur.fail("expected 'init' or 'target:'");
        }
      }
      states.push_back(std::move(st));
    } else if (keyword == "trans") {
      RawRule r;
      r.line = line_no;
      r.source = cur.word("source state");
      cur.expect(Tok::kLBracket, "'[' to open the action pattern");
      do {
        if (cur.accept(Tok::kStar))
          r.pattern.push_back("*");
        else
          r.pattern.push_back(cur.word("action symbol or '*'"));
      } while (cur.accept(Tok::kComma));
      cur.expect(Tok::kRBracket, "']' to close the action pattern");
      cur.expect(Tok::kArrow, "'->'");
      r.target = cur.word("target state");
      if (cur.raw_word("'cost'") != "cost") cur.fail("expected 'cost'");
      cur.expect(Tok::kLBracket, "'[' to open the cost vector");
      do r.cost.push_back(cur.raw_word("cost"));
      while (cur.accept(Tok::kComma));
      cur.expect(Tok::kRBracket, "']' to close the cost vector");
      cur.expect_end();
      rules.push_back(std::move(r));
    } else {
      cur.fail("unknown keyword '" + keyword + "'");
    }
    if (end == text.size()) break;
  }

  if (!players_line) throw ParseError(line_no, "missing 'players' declaration");

  GameDescription d;
  d.players = players;
  for (std::size_t p = 0; p < players.size(); ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (players[p] == players[q]) throw ParseError(*players_line, "duplicate player '" + players[p] + "'");

  std::map<std::string, PlayerId> player_index;
  for (PlayerId p = 0; p < players.size(); ++p) player_index[players[p]] = p;
  for (const auto& [name, decl] : actions)
    if (!player_index.count(name)) throw ParseError(decl.first, "actions for undeclared player '" + name + "'");
  for (const auto& name : players) {
    auto it = actions.find(name);
    if (it == actions.end()) throw ParseError(*players_line, "no actions declared for player '" + name + "'");
    const auto& syms = it->second.second;
    for (std::size_t i = 0; i < syms.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (syms[i] == syms[j]) throw ParseError(it->second.first, "duplicate action '" + syms[i] + "'");
    d.actions.push_back(syms);
  }

  if (states.empty()) throw ParseError(line_no, "no states declared");
  std::map<std::string, StateId> state_index;
  std::optional<StateId> initial;
  d.targets.assign(players.size(), {});
  for (const auto& st : states) {
    const StateId id = d.states.size();
    if (!state_index.emplace(st.name, id).second) throw ParseError(st.line, "duplicate state '" + st.name + "'");
    d.states.push_back(st.name);
    if (st.init) {
      if (initial) throw ParseError(st.line, "more than one initial state");
      initial = id;
    }
    for (const auto& pl : st.target_players) {
      auto it = player_index.find(pl);
      if (it == player_index.end()) throw ParseError(st.line, "undeclared player '" + pl + "' in target list");
      d.targets[it->second].push_back(id);
    }
  }
  if (!initial) throw ParseError(line_no, "no initial state (mark exactly one state 'init')");
  d.initial = *initial;

  for (const auto& r : rules) {
    auto src = state_index.find(r.source);
    if (src == state_index.end()) throw ParseError(r.line, "undeclared state '" + r.source + "'");
    auto dst = state_index.find(r.target);
    if (dst == state_index.end()) throw ParseError(r.line, "undeclared state '" + r.target + "'");
    if (r.pattern.size() != players.size())
      throw ParseError(r.line, "pattern has " + std::to_string(r.pattern.size()) + " entries, expected " +
                                   std::to_string(players.size()));
    if (r.cost.size() != players.size())
      throw ParseError(r.line, "cost vector has " + std::to_string(r.cost.size()) + " entries, expected " +
                                   std::to_string(players.size()));
    TransitionRule rule;
    rule.source = src->second;
    rule.target = dst->second;
    for (PlayerId p = 0; p < players.size(); ++p) {
      if (r.pattern[p] == "*") {
        rule.pattern.emplace_back(std::nullopt);
        continue;
      }
      const auto& syms = d.actions[p];
      auto it = std::find(syms.begin(), syms.end(), r.pattern[p]);
      if (it == syms.end())
        throw ParseError(r.line, "undeclared action '" + r.pattern[p] + "' for player '" + players[p] + "'");
      rule.pattern.emplace_back(static_cast<ActionId>(it - syms.begin()));
    }
    for (const auto& c : r.cost) rule.cost.emplace_back(parse_nat(c, r.line));
    d.rules.push_back(std::move(rule));
  }

  return Game(std::move(d));
}

Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "players";
  for (const auto& p : game.players()) out << ' ' << p;
  out << '\n';
  for (PlayerId p = 0; p < game.num_players(); ++p) {
    out << "actions " << game.players()[p] << ':';
    for (const auto& a : game.actions(p)) out << ' ' << a;
    out << '\n';
  }
  for (StateId s = 0; s < game.num_states(); ++s) {
    out << "state " << game.states()[s];
    if (s == game.initial()) out << " init";
    std::vector<std::string> owners;
    for (PlayerId p = 0; p < game.num_players(); ++p)
      if (game.arena().is_target(p, s)) owners.push_back(game.players()[p]);
    if (!owners.empty()) {
      out << " target:";
      for (const auto& o : owners) out << ' ' << o;
    }
    out << '\n';
  }
  for (const auto& r : game.rules()) {
    out << "trans " << game.states()[r.source] << " [";
    for (PlayerId p = 0; p < r.pattern.size(); ++p) {
      if (p) out << ',';
      out << (r.pattern[p] ? game.actions(p)[*r.pattern[p]] : std::string("*"));
    }
    out << "] -> " << game.states()[r.target] << " cost [";
    for (std::size_t p = 0; p < r.cost.size(); ++p) {
      if (p) out << ',';
      out << r.cost[p].str();
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace qcg
