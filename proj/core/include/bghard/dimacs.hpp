#pragma once

// DIMACS CNF input with comment-line extensions for the game variants:
//   c x <v> <v> ...     declares X-side variables (flip game)
//   c y <v> <v> ...     declares Y-side variables (flip game)
//   c init <v>=<0|1> ...declares the initial assignment (flip game)
// A file with no partition lines parses as a plain CNF; positive-CNF checks
// happen at the point of use.

#include <string>
#include <variant>

#include "bghard/formula.hpp"

namespace bghard {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

CnfFormula parse_dimacs(const std::string& text);

// Emitters used for round-trip testing and instance provenance.
std::string emit_dimacs(const CnfFormula& formula);
std::string emit_game_file(const G6Instance& instance);

// A flip-game file (with partition/init lines) parses to G6Instance; a file
// without them parses to a CnfFormula for the positive-CNF game, validated
// to be positive.
std::variant<CnfFormula, G6Instance> parse_game_file(const std::string& text);

}  // namespace bghard
