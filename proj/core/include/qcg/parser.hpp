#pragma once

#include <string>
#include <string_view>

#include "qcg/game.hpp"

namespace qcg {

/// Parses the line-oriented game format:
///
///     players <name>+
///     actions <player>: <symbol>+
///     state <name> [init] [target: <player>+]
///     trans <state> [<sym-or-*>,...] -> <state> cost [<nat>,...]
///
/// `#` starts a comment. Throws ParseError (with line) on malformed input and
/// InputError when the resulting transition function is not total.
Game parse_game(std::string_view text);

/// Reads and parses a file.
Game load_game(const std::string& path);

/// Canonical text form; parse_game(serialize_game(g)) == g.
std::string serialize_game(const Game& game);

}  // namespace qcg
