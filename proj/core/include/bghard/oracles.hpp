#pragma once

// Brute-force deciders for the three source games.  These are the ground
// truth the compiled backgammon instances are verified against, so they are
// kept as close to the game definitions as possible.

#include "bghard/formula.hpp"

namespace bghard {

// Exhaustive satisfiability check; guard var_count <= 25.
bool sat_brute(const CnfFormula& formula);

// Alternating positive-CNF game: players take turns picking an unset
// variable, Player 1 first; Player 1 sets True, Player 2 sets False; Player
// 1 wins iff the formula is true once all variables are set.  Minimax over
// all orders; guard var_count <= 12.
bool gpos_solve(const CnfFormula& formula);

// Partitioned flip game: players alternate (Player 1 first) flipping at most
// one of their own variables; Player 1 wins if the formula is ever true,
// including on the initial assignment and after Player 2's moves.  Least
// fixpoint attractor over (assignment, player to move); guard
// x_count + y_count <= 10.
bool g6_solve(const G6Instance& instance);

}  // namespace bghard
