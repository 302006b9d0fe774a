#pragma once

// Legal-turn generation.  A turn must use as many die values as possible;
// legal_turns returns exactly the maximal turns, deduplicated so that turns
// reaching the same end position by relocating the same origin/destination
// multiset in a different order appear once.

#include <vector>

#include "bghard/board.hpp"

namespace bghard {

// All destinations a single piece of the mover may take with one die of the
// given value, from the given origin (0 = bar).  Respects blocking, bar
// priority and the bear-off rules.  Utility shared by the generator and by
// apply_turn's validation.
bool single_move_legal(const BoardConfig& config, const Position& position,
                       Player mover, const CheckerMove& move,
                       std::string* reason = nullptr);

// Applies one already-validated single move in place and returns the capture
// flag (true when a lone opposing piece was sent to the bar).  to_move is
// not flipped; this is the inner step apply_turn and the generator share.
bool apply_single_move(Position& position, Player mover,
                       const CheckerMove& move);

// The die multiset available from a roll: four copies of the value for a
// two-die double, the face values otherwise.
std::vector<int> available_dice(const BoardConfig& config,
                                const DiceRoll& roll);

// Exactly the maximal legal turns for position.to_move, sorted and
// deduplicated.  When nothing can move the result is the singleton pass.
std::vector<Turn> legal_turns(const BoardConfig& config,
                              const Position& position, const DiceRoll& roll);

// The largest number of die values any turn can consume, without
// enumerating every turn (early exit once all dice are shown consumable).
int max_consumable_dice(const BoardConfig& config, const Position& position,
                        const DiceRoll& roll);

// Membership test equivalent to (turn in legal_turns(...)) but cheap: checks
// per-move legality in sequence, that consumed pips come from the roll's die
// multiset, and that the turn length reaches max_consumable_dice.
bool turn_is_maximal_legal(const BoardConfig& config, const Position& position,
                           const DiceRoll& roll, const Turn& turn,
                           std::string* reason = nullptr);

}  // namespace bghard
