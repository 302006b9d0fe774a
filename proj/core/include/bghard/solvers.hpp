#pragma once

// Game-tree deciders for compiled instances.
//
// All three deciders answer "can Player 1 force a win" under the variant's
// quantification: KSKR fixes rolls and the opponent (pure reachability over
// P1's turn choices); USKR keeps rolls fixed but quantifies universally over
// the opponent; USUR quantifies over rolls as well.  Cycles mean endless
// play, which is never a Player 1 win, so values are computed as a least
// fixpoint (a backward attractor over the reachable state graph) rather than
// by path-local memoization, which is unsound in cyclic AND-OR graphs.
//
// Search caps produce a distinct inconclusive verdict: a win proved inside a
// truncated graph is still a win, but absence of one proves nothing.

#include <cstdint>
#include <vector>

#include "bghard/instance.hpp"
#include "bghard/script.hpp"

namespace bghard {

enum class Verdict { win, loss, inconclusive };

const char* verdict_name(Verdict verdict);  // WIN / LOSS / INCONCLUSIVE
int verdict_exit_code(Verdict verdict);     // 0 / 1 / 2

struct SearchLimits {
  std::int64_t max_states = 10'000'000;  // cap on distinct explored states
  std::int64_t max_depth = 1 << 20;      // cap on game length in turns

  void validate() const;  // positive caps
};

enum class UskrMode { structured, universal };
enum class UsurMode { exhibited, universal };

// Every distinct roll of the configured dice, sorted.
std::vector<DiceRoll> all_rolls(const BoardConfig& config);

// Known rolls, known opponent: existential search over P1's turns only.
Verdict decide_kskr(const ReductionInstance& instance,
                    const SearchLimits& limits = {});

// Known rolls, unknown opponent: AND-OR search.  Structured mode lets the
// opponent branch only at its declared decision points, following the
// emitted rule table elsewhere; universal mode branches over all legal
// opponent turns.
Verdict decide_uskr(const ReductionInstance& instance, UskrMode mode,
                    const SearchLimits& limits = {});

// Unknown rolls, unknown opponent.  Exhibited mode replays the compiled
// adaptive environment, branching universally only at the opponent's
// declared decision points; universal mode quantifies over every roll for
// both players and every opponent turn.  Depth is additionally capped by the
// instance win horizon when one is set.
Verdict decide_usur(const ReductionInstance& instance, UsurMode mode,
                    const SearchLimits& limits = {});

}  // namespace bghard
