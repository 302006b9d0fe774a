#pragma once

// Roll sources, opponent strategies and scripted replay.
//
// Scripted strategies are stored as data, not code: an ordered list of
// guard -> action rules over absolute board anchors.  A guard matches on the
// roll and on point/bar/off/region occupancy; the first matching rule fires.
// Actions are either literal move lists or small parametric programs
// (shuffles, captures, the endgame march) interpreted deterministically from
// the position, so a strategy is a pure function (Position, DiceRoll) -> Turn
// and serializes in space polynomial in the source formula.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bghard/board.hpp"

namespace bghard {

// ---------------- Roll sources ----------------

struct RollScript {
  std::vector<DiceRoll> prefix;
  std::vector<DiceRoll> cycle;  // repeated forever after the prefix

  bool operator==(const RollScript&) const = default;
};

// Phase used for repetition detection: prefix positions are distinct, cycle
// positions collapse modulo the cycle length.
std::int64_t script_phase(const RollScript& script, std::int64_t turn_index);

// ---------------- Guards ----------------

// One occupancy condition over the position.  Counts are signed on points
// (positive = P1) and non-negative for bar/off/region subjects.
struct Guard {
  enum class Subject {
    point,      // signed count at `point`
    bar_p1,
    bar_p2,
    off_p1,
    off_p2,
    region_p1,  // P1 pieces on points lo..hi
    region_p2,  // P2 pieces on points lo..hi
  };
  enum class Op { eq, ne, ge, le };

  Subject subject = Subject::point;
  int point = 0;
  int lo = 0;
  int hi = 0;
  Op op = Op::eq;
  int value = 0;

  bool operator==(const Guard&) const = default;
};

bool guard_holds(const Guard& guard, const Position& position);
bool guards_hold(const std::vector<Guard>& guards, const Position& position);

// ---------------- Actions ----------------

struct Action {
  enum class Kind {
    pass,                  // empty turn (forced pass)
    moves,                 // literal move sequence
    shuffle,               // spend every die moving own pieces inside lo..hi
    moves_then_shuffle,    // literal moves first, remaining dice shuffled
    capture_then_shuffle,  // first matching (attacker, victim) capture, then
                           // shuffle the remaining dice
    endgame,               // march home and bear off, keeping keep_paired
                           // points blocked until the finishing turn
  };

  Kind kind = Kind::pass;
  std::vector<CheckerMove> moves;                  // kind uses literal moves
  int lo = 0, hi = 0;                              // shuffle region
  std::vector<std::pair<int, int>> capture_pairs;  // (attacker, victim)
  std::vector<int> keep_paired;                    // endgame safety points

  bool operator==(const Action&) const = default;
};

// ---------------- Strategy ----------------

struct StrategyRule {
  std::string name;
  std::optional<DiceRoll> roll;  // match any roll when absent
  std::vector<Guard> when;
  Action action;

  bool operator==(const StrategyRule&) const = default;
};

// A point where an adversarial solver branches over the listed options
// instead of following the rule table.  Options carry their own guards so
// only currently-legal choices are offered.
struct DecisionOption {
  std::string name;
  std::vector<Guard> when;
  Action action;

  bool operator==(const DecisionOption&) const = default;
};

struct DecisionPoint {
  std::string name;
  std::optional<DiceRoll> roll;
  std::vector<Guard> when;
  std::vector<DecisionOption> options;

  bool operator==(const DecisionPoint&) const = default;
};

struct OpponentStrategy {
  enum class Kind { scripted, adversarial };

  Kind kind = Kind::scripted;
  std::string program_id;  // names the rule-table program for serialization
  std::vector<StrategyRule> rules;
  // Declared adversarial decision points.  Empty for pure scripts; used by
  // the structured/exhibited solver modes (and by replay, which follows the
  // rule table and treats decisions via the rules as well).
  std::vector<DecisionPoint> decisions;

  bool operator==(const OpponentStrategy&) const = default;
};

struct RollSource {
  enum class Kind { scripted, adaptive };

  Kind kind = Kind::scripted;
  RollScript script;        // scripted
  std::string program_id;   // adaptive program name
  // Adaptive program: ordered guard -> roll table over the position; the
  // first matching entry supplies the roll.
  struct AdaptiveEntry {
    std::string name;
    Player roller = Player::p1;  // entry applies when this player rolls
    std::vector<Guard> when;
    DiceRoll roll;

    bool operator==(const AdaptiveEntry&) const = default;
  };
  std::vector<AdaptiveEntry> adaptive;

  bool operator==(const RollSource&) const = default;
};

// Deterministic roll lookup.  Scripted sources ignore the position; adaptive
// sources ignore the index.  Exhaustion or no matching adaptive entry raises
// a domain error.
DiceRoll roll_at(const RollSource& source, const Position& position,
                 std::int64_t turn_index);

// ---------------- Strategy interpretation ----------------

class StrategyDomainError : public std::domain_error {
 public:
  explicit StrategyDomainError(const std::string& message)
      : std::domain_error(message) {}
};

// Interprets an action in the given position for position.to_move.  The
// result is always a member of legal_turns or a StrategyDomainError.
Turn interpret_action(const BoardConfig& config, const Action& action,
                      const Position& position, const DiceRoll& roll);

// Applies the first rule whose roll and guards match.  Raises
// StrategyDomainError when no rule matches or the fired action is illegal:
// both signal a reduction bug, not a game outcome.
Turn rule_table_turn(const BoardConfig& config,
                     const std::vector<StrategyRule>& rules,
                     const Position& position, const DiceRoll& roll);

// rule_table_turn for a scripted strategy; rejects adversarial strategies.
Turn strategy_move(const BoardConfig& config, const OpponentStrategy& strategy,
                   const Position& position, const DiceRoll& roll);

// ---------------- Replay ----------------

enum class TraceOutcome { p1_wins, p2_wins, step_limit, repetition };

struct TraceStep {
  std::int64_t turn_index = 0;
  Player roller = Player::p1;
  DiceRoll roll;
  Turn turn;
  Position resulting;
};

struct GameTrace {
  std::vector<TraceStep> steps;
  TraceOutcome outcome = TraceOutcome::step_limit;
};

struct ReductionInstance;  // defined in instance.hpp

using P1Policy = std::function<Turn(const Position&, const DiceRoll&)>;

struct ReplayLimits {
  std::int64_t step_cap = 1 << 20;
  bool record_positions = true;  // clear resulting positions when false
};

// Alternates turns from the instance's initial position: rolls from the
// instance's roll source, P1 turns from the policy, P2 turns from the
// opponent strategy, until a winner, a repeated (position, script phase), or
// the step cap.  Policy turns are validated against legal_turns; an illegal
// policy turn raises TurnRejection-style rejection naming the turn index.
GameTrace run_scripted_game(const ReductionInstance& instance,
                            const P1Policy& p1_policy,
                            const ReplayLimits& limits);

}  // namespace bghard
