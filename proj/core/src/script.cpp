#include "bghard/script.hpp"

#include <algorithm>
#include <set>

#include "bghard/instance.hpp"
#include "bghard/movegen.hpp"

namespace bghard {

// ---------------- Roll sources ----------------

std::int64_t script_phase(const RollScript& script, std::int64_t turn_index) {
  auto prefix_len = static_cast<std::int64_t>(script.prefix.size());
  if (turn_index < prefix_len) return turn_index;
  auto cycle_len = static_cast<std::int64_t>(script.cycle.size());
  if (cycle_len == 0)
    throw std::domain_error("roll script exhausted: empty cycle past prefix");
  return prefix_len + (turn_index - prefix_len) % cycle_len;
}

DiceRoll roll_at(const RollSource& source, const Position& position,
                 std::int64_t turn_index) {
  if (turn_index < 0) throw std::domain_error("negative turn index");
  if (source.kind == RollSource::Kind::scripted) {
    const RollScript& script = source.script;
    std::int64_t phase = script_phase(script, turn_index);
    auto prefix_len = static_cast<std::int64_t>(script.prefix.size());
    if (phase < prefix_len)
      return script.prefix[static_cast<std::size_t>(phase)];
    return script.cycle[static_cast<std::size_t>(phase - prefix_len)];
  }
  for (const auto& entry : source.adaptive) {
    if (entry.roller != position.to_move) continue;
    if (!guards_hold(entry.when, position)) continue;
    return entry.roll;
  }
  throw std::domain_error(
      "adaptive roll program has no entry for the current position");
}

// ---------------- Guards ----------------

namespace {

bool compare(Guard::Op op, int lhs, int rhs) {
  switch (op) {
    case Guard::Op::eq: return lhs == rhs;
    case Guard::Op::ne: return lhs != rhs;
    case Guard::Op::ge: return lhs >= rhs;
    case Guard::Op::le: return lhs <= rhs;
  }
  return false;
}

int region_count(const Position& position, Player who, int lo, int hi) {
  int total = 0;
  for (int q = lo; q <= hi; ++q) total += position.count_of(who, q);
  return total;
}

}  // namespace

bool guard_holds(const Guard& guard, const Position& position) {
  int observed = 0;
  switch (guard.subject) {
    case Guard::Subject::point:
      observed = position.points[guard.point];
      break;
    case Guard::Subject::bar_p1: observed = position.bar_p1; break;
    case Guard::Subject::bar_p2: observed = position.bar_p2; break;
    case Guard::Subject::off_p1: observed = position.off_p1; break;
    case Guard::Subject::off_p2: observed = position.off_p2; break;
    case Guard::Subject::region_p1:
      observed = region_count(position, Player::p1, guard.lo, guard.hi);
      break;
    case Guard::Subject::region_p2:
      observed = region_count(position, Player::p2, guard.lo, guard.hi);
      break;
  }
  return compare(guard.op, observed, guard.value);
}

bool guards_hold(const std::vector<Guard>& guards, const Position& position) {
  for (const Guard& guard : guards)
    if (!guard_holds(guard, position)) return false;
  return true;
}

// ---------------- Action interpretation ----------------

namespace {

// Builds the shuffle turn: for each die (largest first), move the piece
// closest to the region's trailing edge that can legally take the die and
// land inside the board.  P2 shuffles leftward from the region's right end.
void shuffle_dice(const BoardConfig& config, Position& position, Player mover,
                  const std::vector<int>& dice, int lo, int hi,
                  std::vector<CheckerMove>& out) {
  for (int die : dice) {
    bool played = false;
    if (mover == Player::p2) {
      for (int q = hi; q >= lo && !played; --q) {
        if (position.count_of(mover, q) == 0) continue;
        int target = q - die;
        if (target < lo || point_blocked(position, mover, target)) continue;
        CheckerMove m{q, target, die};
        apply_single_move(position, mover, m);
        out.push_back(m);
        played = true;
      }
    } else {
      for (int q = lo; q <= hi && !played; ++q) {
        if (position.count_of(mover, q) == 0) continue;
        int target = q + die;
        if (target > hi || point_blocked(position, mover, target)) continue;
        CheckerMove m{q, target, die};
        apply_single_move(position, mover, m);
        out.push_back(m);
        played = true;
      }
    }
    if (!played)
      throw StrategyDomainError(
          "shuffle action cannot place die " + std::to_string(die) +
          " inside its region");
  }
}

// ----- Endgame march for the scripted opponent (Player 2) -----
//
// Deterministic greedy with a small lookahead: per die, candidate moves are
// ordered by preference (march from the farthest point, exact bear-off,
// in-home shuffle, overshoot bear-off); a depth-first search over those
// candidates returns the first full-length turn whose end state is safe.
// Safety: no point in 2..6 holds exactly one P2 piece (a lone piece on a
// re-entry point could be captured), and every point listed in keep_paired
// still holds two or more P2 pieces.  Keep-paired points are blockades the
// action promises to maintain; emptying one counts as giving it up, so a
// bare empty point there is unsafe too.

struct EndgameSearcher {
  const BoardConfig& config;
  std::vector<int> keep_paired;

  bool end_state_safe(const Position& pos) const {
    for (int q = 2; q <= 6; ++q)
      if (pos.count_of(Player::p2, q) == 1) return false;
    for (int q : keep_paired) {
      if (pos.count_of(Player::p2, q) < 2) return false;
    }
    return true;
  }

  // Preference score for fallback selection when no safe turn exists;
  // larger is better.
  long score(const Position& pos) const {
    long s = 0;
    s += 1000L * pos.off_p2;
    for (int q : keep_paired) {
      if (pos.count_of(Player::p2, q) >= 2)
        s += 100;
      else
        s -= 100000;  // a surrendered blockade outweighs any other gain
    }
    for (int q = 2; q <= 6; ++q)
      if (pos.count_of(Player::p2, q) == 1) s -= 500;
    // Remaining pip distance, negated: closer to home is better.
    for (int q = 1; q <= config.n_points; ++q) s -= pos.count_of(Player::p2, q) * q;
    s -= 100L * config.n_points * pos.bar_p2;
    return s;
  }

  std::vector<CheckerMove> candidates_for(const Position& pos, int die) const {
    std::vector<CheckerMove> out;
    if (pos.bar_p2 > 0) {
      int entry = config.n_points + 1 - die;
      if (entry >= 1 && !point_blocked(pos, Player::p2, entry))
        out.push_back({CheckerMove::bar_origin, entry, die});
      return out;
    }
    bool home = true;
    for (int q = config.home_size + 1; q <= config.n_points && home; ++q)
      if (pos.points[q] < 0) home = false;
    int rearmost = 0;
    for (int q = config.n_points; q >= 1 && rearmost == 0; --q)
      if (pos.points[q] < 0) rearmost = q;

    // March candidates outside home, nearest home first.  Spending nearby
    // pips before distant ones keeps far-out pairs standing as long as
    // possible, so pieces they contain stay contained.
    for (int q = config.home_size + 1; q <= config.n_points; ++q) {
      if (pos.count_of(Player::p2, q) == 0) continue;
      int target = q - die;
      if (target >= 1 && !point_blocked(pos, Player::p2, target))
        out.push_back({q, target, die});
    }
    if (home) {
      // Exact bear-off.
      if (die <= config.home_size && pos.count_of(Player::p2, die) > 0)
        out.push_back({die, CheckerMove::off_destination, die});
      // In-home board moves, highest origin first.
      for (int q = config.home_size; q >= 1; --q) {
        if (pos.count_of(Player::p2, q) == 0) continue;
        int target = q - die;
        if (target >= 1 && !point_blocked(pos, Player::p2, target))
          out.push_back({q, target, die});
      }
      // Overshoot bear-off from the rearmost point.
      if (rearmost >= 1 && die > rearmost &&
          pos.count_of(Player::p2, rearmost) > 0)
        out.push_back({rearmost, CheckerMove::off_destination, die});
    } else {
      // In-home board moves are still legal without bear-off rights.
      for (int q = config.home_size; q >= 1; --q) {
        if (pos.count_of(Player::p2, q) == 0) continue;
        int target = q - die;
        if (target >= 1 && !point_blocked(pos, Player::p2, target))
          out.push_back({q, target, die});
      }
    }
    return out;
  }

  struct Best {
    bool found_safe = false;
    long best_score = 0;
    std::vector<CheckerMove> moves;
    std::size_t length = 0;
    bool has_any = false;
  };

  // For a double, only move sequences whose origins advance toward home are
  // searched (bar first).  Any playable multiset of equal-die moves is
  // playable in that order, so no turn length or end state is lost, and the
  // search runs over combinations instead of ordered sequences.
  void search(Position& pos, const std::vector<int>& dice, std::size_t depth,
              std::vector<CheckerMove>& stack, std::size_t target_length,
              bool identical, int min_rank, Best& best) const {
    if (best.found_safe) return;
    if (depth == dice.size() || stack.size() == target_length) {
      bool safe = end_state_safe(pos) && stack.size() == target_length;
      long sc = score(pos);
      if (!best.has_any || stack.size() > best.length ||
          (stack.size() == best.length && sc > best.best_score)) {
        best.has_any = true;
        best.length = stack.size();
        best.best_score = sc;
        best.moves = stack;
      }
      if (safe) {
        best.found_safe = true;
        best.moves = stack;
      }
      return;
    }
    auto cands = candidates_for(pos, dice[depth]);
    bool advanced = false;
    for (const CheckerMove& m : cands) {
      int rank =
          m.from_bar() ? 0 : config.n_points + 1 - m.origin;
      if (identical && rank < min_rank) continue;
      advanced = true;
      Position next = pos;
      apply_single_move(next, Player::p2, m);
      stack.push_back(m);
      search(next, dice, depth + 1, stack, target_length, identical, rank,
             best);
      stack.pop_back();
      if (best.found_safe) return;
    }
    if (!advanced) {
      // Die is dead in this line; skip it.
      search(pos, dice, depth + 1, stack, target_length, identical, min_rank,
             best);
    }
  }
};

Turn endgame_turn(const BoardConfig& config, const Action& action,
                  const Position& position, const DiceRoll& roll) {
  if (position.to_move != Player::p2)
    throw StrategyDomainError("endgame action requires Player 2 to move");
  std::vector<int> dice = available_dice(config, roll);
  std::sort(dice.rbegin(), dice.rend());
  bool identical =
      !dice.empty() && std::all_of(dice.begin(), dice.end(),
                                   [&](int v) { return v == dice.front(); });

  // Optimistic pass: most turns can consume every die, and finding one such
  // safe turn avoids computing the true maximum consumable count.
  EndgameSearcher searcher{config, action.keep_paired};
  EndgameSearcher::Best best;
  {
    std::vector<CheckerMove> stack;
    Position scratch = position;
    searcher.search(scratch, dice, 0, stack, dice.size(), identical, 0, best);
  }
  if (best.has_any && best.length == dice.size()) return Turn{best.moves};

  int target = max_consumable_dice(config, position, roll);
  best = EndgameSearcher::Best{};
  std::vector<CheckerMove> stack;
  Position scratch = position;
  searcher.search(scratch, dice, 0, stack, static_cast<std::size_t>(target),
                  identical, 0, best);
  if (!best.has_any && target > 0)
    throw StrategyDomainError("endgame search found no move");
  return Turn{best.moves};
}

}  // namespace

Turn interpret_action(const BoardConfig& config, const Action& action,
                      const Position& position, const DiceRoll& roll) {
  Player mover = position.to_move;
  std::vector<int> dice = available_dice(config, roll);

  Turn turn;
  switch (action.kind) {
    case Action::Kind::pass:
      turn = Turn{};
      break;
    case Action::Kind::moves:
      turn = Turn{action.moves};
      break;
    case Action::Kind::shuffle: {
      std::sort(dice.rbegin(), dice.rend());
      Position scratch = position;
      std::vector<CheckerMove> moves;
      shuffle_dice(config, scratch, mover, dice, action.lo, action.hi, moves);
      turn = Turn{moves};
      break;
    }
    case Action::Kind::moves_then_shuffle: {
      Position scratch = position;
      std::vector<CheckerMove> moves;
      std::vector<int> rest = dice;
      for (const CheckerMove& m : action.moves) {
        auto it = std::find(rest.begin(), rest.end(), m.pips);
        if (it == rest.end())
          throw StrategyDomainError(
              "moves_then_shuffle has no die left for a scripted move");
        rest.erase(it);
        apply_single_move(scratch, mover, m);
        moves.push_back(m);
      }
      std::sort(rest.rbegin(), rest.rend());
      shuffle_dice(config, scratch, mover, rest, action.lo, action.hi, moves);
      turn = Turn{moves};
      break;
    }
    case Action::Kind::capture_then_shuffle: {
      Position scratch = position;
      std::vector<CheckerMove> moves;
      std::vector<int> rest = dice;
      for (const auto& [attacker, victim] : action.capture_pairs) {
        if (mover == Player::p2) {
          if (scratch.points[victim] != 1) continue;
          if (scratch.count_of(Player::p2, attacker) == 0) continue;
        } else {
          if (scratch.points[victim] != -1) continue;
          if (scratch.count_of(Player::p1, attacker) == 0) continue;
        }
        int die = mover == Player::p2 ? attacker - victim : victim - attacker;
        auto it = std::find(rest.begin(), rest.end(), die);
        if (it == rest.end()) continue;
        rest.erase(it);
        CheckerMove m{attacker, victim, die};
        apply_single_move(scratch, mover, m);
        moves.push_back(m);
        break;  // one capture per turn
      }
      std::sort(rest.rbegin(), rest.rend());
      shuffle_dice(config, scratch, mover, rest, action.lo, action.hi, moves);
      turn = Turn{moves};
      break;
    }
    case Action::Kind::endgame:
      turn = endgame_turn(config, action, position, roll);
      break;
  }

  std::string reason;
  if (!turn_is_maximal_legal(config, position, roll, turn, &reason))
    throw StrategyDomainError("interpreted action is not a maximal legal turn: " +
                              reason);
  return turn;
}

Turn rule_table_turn(const BoardConfig& config,
                     const std::vector<StrategyRule>& rules,
                     const Position& position, const DiceRoll& roll) {
  for (const StrategyRule& rule : rules) {
    if (rule.roll && !(*rule.roll == roll)) continue;
    if (!guards_hold(rule.when, position)) continue;
    try {
      return interpret_action(config, rule.action, position, roll);
    } catch (const StrategyDomainError& e) {
      throw StrategyDomainError("rule '" + rule.name + "': " + e.what());
    }
  }
  throw StrategyDomainError(
      "no strategy rule matches the current position and roll");
}

Turn strategy_move(const BoardConfig& config, const OpponentStrategy& strategy,
                   const Position& position, const DiceRoll& roll) {
  if (strategy.kind != OpponentStrategy::Kind::scripted)
    throw StrategyDomainError(
        "strategy_move requires a scripted opponent strategy");
  return rule_table_turn(config, strategy.rules, position, roll);
}

// ---------------- Replay ----------------

GameTrace run_scripted_game(const ReductionInstance& instance,
                            const P1Policy& p1_policy,
                            const ReplayLimits& limits) {
  GameTrace trace;
  Position position = instance.initial;

  // Repetition keys: position plus roll-source phase.  Adaptive sources are
  // pure position functions, so their phase is constant.
  std::set<std::pair<std::int64_t, Position>> seen;

  for (std::int64_t t = 0; t < limits.step_cap; ++t) {
    std::int64_t phase =
        instance.rolls.kind == RollSource::Kind::scripted
            ? script_phase(instance.rolls.script, t)
            : 0;
    if (!seen.emplace(phase, position).second) {
      trace.outcome = TraceOutcome::repetition;
      return trace;
    }

    DiceRoll roll = roll_at(instance.rolls, position, t);
    Player roller = position.to_move;
    Turn turn;
    if (roller == Player::p1) {
      turn = p1_policy(position, roll);
      std::string reason;
      if (!turn_is_maximal_legal(instance.config, position, roll, turn,
                                 &reason))
        throw TurnRejection(static_cast<std::size_t>(t),
                            "policy turn at index " + std::to_string(t) +
                                " rejected: " + reason);
    } else {
      turn = strategy_move(instance.config, instance.opponent, position, roll);
    }

    position = apply_turn(instance.config, position, turn);
    TraceStep step{t, roller, roll, turn,
                   limits.record_positions ? position : Position{}};
    trace.steps.push_back(std::move(step));

    if (auto champion = winner(instance.config, position)) {
      trace.outcome = champion == Player::p1 ? TraceOutcome::p1_wins
                                             : TraceOutcome::p2_wins;
      return trace;
    }
  }
  trace.outcome = TraceOutcome::step_limit;
  return trace;
}

}  // namespace bghard
