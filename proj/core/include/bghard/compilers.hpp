#pragma once
// Compilers from the three source problems (3-CNF satisfiability, the
// positive-CNF assignment game, and the bounded two-player formula game)
// into generalized backgammon instances, plus the deterministic replay
// policy that plays a compiled instance according to a chosen assignment.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bghard/formula.hpp"
#include "bghard/instance.hpp"
#include "bghard/script.hpp"

namespace bghard {

// Raised when a source problem violates a compiler precondition (wrong
// clause width, empty variable set, negative literals where forbidden, ...).
class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a compiled instance fails one of its internal integrity
// probes, or when a replay policy meets a position that the construction
// promises cannot occur (for example a non-decision turn with more than one
// maximal legal move).
class ReductionIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 3-CNF formula -> known-rolls known-strategy instance.  Player 1 wins the
// compiled game against the scripted opponent iff the formula is
// satisfiable.  The compiled script forces every player-1 turn except the
// per-variable decision turns, which offer exactly two maximal moves.
ReductionInstance compile_3sat(const CnfFormula& formula);

// Positive CNF assignment game -> unknown-strategy known-rolls instance.
// Player 1 wins against every opponent strategy iff the first player wins
// the source game.
ReductionInstance compile_gpos(const CnfFormula& formula);

// Bounded two-player formula game -> unknown-strategy unknown-rolls
// instance with adaptive dice.
ReductionInstance compile_g6(const G6Instance& instance);

// Deterministic player-1 policy for a compiled 3-CNF instance: at each
// variable decision turn it plays the branch selected by `assignment`
// (1-based, like CnfFormula variables); at every other turn it plays the
// unique maximal legal turn.  Throws ReductionIntegrityError if a
// non-decision turn is ambiguous or a decision turn does not look like one.
P1Policy assignment_policy(const ReductionInstance& instance,
                           const std::vector<bool>& assignment);

// Size in bytes of the serialized roll script plus opponent strategy under
// the canonical instance encoding.
std::int64_t script_size(const ReductionInstance& instance);

}  // namespace bghard
