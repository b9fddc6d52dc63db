#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "recgame/game.hpp"

namespace recgame {

// Invalid game file. `what()` starts with the path of the offending field,
// e.g. "items.l1.u2: satisfaction outside [0,1]".
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A parsed game is exact (all satisfaction entries written as strings, kept
// as rationals) or floating point (any entry written as a JSON number).
using AnyGame = std::variant<Game<Rational>, Game<double>>;

AnyGame parse_game(std::string_view text);

std::string serialize_game(const Game<Rational>& game);
std::string serialize_game(const Game<double>& game);
std::string serialize_game(const AnyGame& game);

}  // namespace recgame
