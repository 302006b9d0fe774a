#pragma once

// Source-language objects for the reductions: CNF formulas for the
// satisfiability and positive-CNF games, and partitioned flip-game instances
// where Player 1 owns the X variables and Player 2 the Y variables.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bghard {

// A literal: variable index in 1..var_count, positive or negated.
struct Literal {
  int variable = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  int var_count = 0;
  std::vector<Clause> clauses;

  // Indices in range, no empty clause.
  void validate() const;

  // Every clause has at most three literals.
  bool is_three_cnf() const;

  // No negated literal anywhere.
  bool is_positive() const;

  // assignment[v] is the value of variable v (index 0 unused).
  bool clause_satisfied(const Clause& clause,
                        const std::vector<bool>& assignment) const;
  bool evaluate(const std::vector<bool>& assignment) const;

  bool operator==(const CnfFormula&) const = default;
};

// Flip-game instance: variables are partitioned into X (flippable by Player
// 1) and Y (flippable by Player 2); Player 1 wins if the formula is ever
// true, starting from the initial assignment.
struct G6Instance {
  CnfFormula formula;
  std::vector<std::uint8_t> in_x;        // per variable, index 0 unused
  std::vector<std::uint8_t> initial_assignment;  // per variable, index 0 unused

  void validate() const;

  int x_count() const;
  int y_count() const;

  bool operator==(const G6Instance&) const = default;
};

}  // namespace bghard
