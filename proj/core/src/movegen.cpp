#include "bghard/movegen.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace bghard {

namespace {

// Direction of travel: P1 ascends the point indices, P2 descends.
int direction_of(Player mover) { return mover == Player::p1 ? 1 : -1; }

// Bar re-entry lands in the opponent's home: P1 with die r enters on point r,
// P2 on point n+1-r.
int entry_point(const BoardConfig& config, Player mover, int die) {
  return mover == Player::p1 ? die : config.n_points + 1 - die;
}

bool all_pieces_home(const BoardConfig& config, const Position& position,
                     Player mover) {
  if (position.bar(mover) > 0) return false;
  if (mover == Player::p1) {
    for (int q = 1; q <= config.n_points - config.home_size; ++q)
      if (position.points[q] > 0) return false;
  } else {
    for (int q = config.home_size + 1; q <= config.n_points; ++q)
      if (position.points[q] < 0) return false;
  }
  return true;
}

// Rearmost occupied point from the mover's perspective (the piece farthest
// from bearing off), or 0 when the mover has no piece on the board.
int rearmost_point(const BoardConfig& config, const Position& position,
                   Player mover) {
  if (mover == Player::p1) {
    for (int q = 1; q <= config.n_points; ++q)
      if (position.points[q] > 0) return q;
  } else {
    for (int q = config.n_points; q >= 1; --q)
      if (position.points[q] < 0) return q;
  }
  return 0;
}

}  // namespace

bool single_move_legal(const BoardConfig& config, const Position& position,
                       Player mover, const CheckerMove& move,
                       std::string* reason) {
  auto fail = [&](const char* text) {
    if (reason) *reason = text;
    return false;
  };

  if (move.pips < 1 || move.pips > config.die_sides)
    return fail("pips outside die range");

  if (position.bar(mover) > 0 && !move.from_bar())
    return fail("bar piece must re-enter first");

  if (move.from_bar()) {
    if (position.bar(mover) == 0) return fail("no piece on the bar");
    if (move.bears_off()) return fail("cannot bear off from the bar");
    int entry = entry_point(config, mover, move.pips);
    if (entry < 1 || entry > config.n_points)
      return fail("entry point off the board");
    if (move.destination != entry)
      return fail("bar entry must land on the die's entry point");
    if (point_blocked(position, mover, entry))
      return fail("entry point is blocked");
    return true;
  }

  if (move.origin < 1 || move.origin > config.n_points)
    return fail("origin out of range");
  if (position.count_of(mover, move.origin) == 0)
    return fail("no own piece on the origin point");

  int target = move.origin + direction_of(mover) * move.pips;

  if (move.bears_off()) {
    // needed is the exact pip distance from the origin to off the edge.
    int needed = mover == Player::p1 ? config.n_points + 1 - move.origin
                                     : move.origin;
    if (move.pips < needed) return fail("die too small to bear off");
    if (!all_pieces_home(config, position, mover))
      return fail("cannot bear off with pieces outside home");
    if (move.pips > needed &&
        rearmost_point(config, position, mover) != move.origin)
      return fail("overshoot bear-off only from the rearmost piece");
    return true;
  }

  if (target < 1 || target > config.n_points)
    return fail("move runs off the board without bearing off");
  if (move.destination != target)
    return fail("destination does not match origin plus die");
  if (point_blocked(position, mover, target))
    return fail("destination point is blocked");
  return true;
}

bool apply_single_move(Position& position, Player mover,
                       const CheckerMove& move) {
  int dir = direction_of(mover);
  if (move.from_bar())
    --position.bar(mover);
  else
    position.points[move.origin] = static_cast<std::int16_t>(
        position.points[move.origin] - dir);

  if (move.bears_off()) {
    ++position.off(mover);
    return false;
  }

  bool captured = false;
  int there = position.points[move.destination];
  if ((mover == Player::p1 && there == -1) ||
      (mover == Player::p2 && there == 1)) {
    position.points[move.destination] = 0;
    ++position.bar(opponent_of(mover));
    captured = true;
  }
  position.points[move.destination] = static_cast<std::int16_t>(
      position.points[move.destination] + dir);
  return captured;
}

std::vector<int> available_dice(const BoardConfig& config,
                                const DiceRoll& roll) {
  if (config.dice_count == 2 && roll.is_double())
    return {roll.values[0], roll.values[0], roll.values[0], roll.values[0]};
  return roll.values;
}

namespace {

// All single moves the mover can make with one die of the given value.
void moves_for_die(const BoardConfig& config, const Position& position,
                   Player mover, int die, std::vector<CheckerMove>& out) {
  out.clear();
  if (position.bar(mover) > 0) {
    int entry = entry_point(config, mover, die);
    if (entry >= 1 && entry <= config.n_points &&
        !point_blocked(position, mover, entry))
      out.push_back({CheckerMove::bar_origin, entry, die});
    return;
  }

  bool home_ready = all_pieces_home(config, position, mover);
  int rearmost = home_ready ? rearmost_point(config, position, mover) : 0;
  int dir = direction_of(mover);

  for (int q = 1; q <= config.n_points; ++q) {
    if (position.count_of(mover, q) == 0) continue;
    int target = q + dir * die;
    if (target >= 1 && target <= config.n_points) {
      if (!point_blocked(position, mover, target))
        out.push_back({q, target, die});
    } else if (home_ready) {
      int needed = mover == Player::p1 ? config.n_points + 1 - q : q;
      if (die == needed || (die > needed && q == rearmost))
        out.push_back({q, CheckerMove::off_destination, die});
    }
  }
}

// Dedup key: end position plus the multiset of (origin, destination) pairs.
// Turns equal under this key are the same relocation in a different order.
struct TurnKey {
  Position end;
  std::vector<std::pair<int, int>> relocations;

  auto tie() const {
    return std::tie(end.points, end.bar_p1, end.bar_p2, end.off_p1,
                    end.off_p2, relocations);
  }
  bool operator<(const TurnKey& other) const { return tie() < other.tie(); }
};

struct Generator {
  const BoardConfig& config;
  Player mover;
  std::size_t best_length = 0;
  std::map<TurnKey, Turn> unique;

  void record(const Position& end, const std::vector<CheckerMove>& sequence) {
    if (sequence.size() < best_length) return;
    if (sequence.size() > best_length) {
      best_length = sequence.size();
      unique.clear();
    }
    TurnKey key{end, {}};
    key.relocations.reserve(sequence.size());
    for (const CheckerMove& m : sequence)
      key.relocations.emplace_back(m.origin, m.destination);
    std::sort(key.relocations.begin(), key.relocations.end());
    Turn candidate{sequence};
    auto [it, inserted] = unique.try_emplace(std::move(key), candidate);
    if (!inserted && candidate < it->second) it->second = std::move(candidate);
  }

  void search(const Position& position, std::vector<int>& remaining,
              std::vector<CheckerMove>& sequence) {
    // A shorter branch can never catch up to best_length.
    if (sequence.size() + remaining.size() < best_length) return;
    bool moved = false;
    std::vector<CheckerMove> candidates;
    int previous_die = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      int die = remaining[i];
      if (die == previous_die) continue;  // identical die, identical subtree
      previous_die = die;
      moves_for_die(config, position, mover, die, candidates);
      if (candidates.empty()) continue;
      moved = true;
      std::vector<int> rest;
      rest.reserve(remaining.size() - 1);
      for (std::size_t j = 0; j < remaining.size(); ++j)
        if (j != i) rest.push_back(remaining[j]);
      for (const CheckerMove& m : candidates) {
        Position next = position;
        apply_single_move(next, mover, m);
        sequence.push_back(m);
        search(next, rest, sequence);
        sequence.pop_back();
      }
    }
    if (!moved) record(position, sequence);
  }
};

}  // namespace

std::vector<Turn> legal_turns(const BoardConfig& config,
                              const Position& position, const DiceRoll& roll) {
  if (static_cast<int>(roll.values.size()) != config.dice_count)
    throw std::domain_error("roll has wrong number of dice");
  for (int v : roll.values)
    if (v < 1 || v > config.die_sides)
      throw std::domain_error("die value outside 1..s");
  auto violations = validate_position(config, position);
  if (!violations.empty())
    throw std::domain_error("invalid position: " + violations.front());

  Generator gen{config, position.to_move};
  std::vector<int> dice = available_dice(config, roll);
  std::vector<CheckerMove> sequence;
  gen.search(position, dice, sequence);

  std::vector<Turn> result;
  result.reserve(gen.unique.size());
  for (auto& [key, turn] : gen.unique) result.push_back(std::move(turn));
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Depth-first search for the longest consumable prefix; stops as soon as a
// full consumption is found.
//
// When every remaining die shows the same value (a double), the search only
// considers move sequences whose origins advance monotonically in the
// mover's direction of travel, bar first.  Any playable multiset of
// equal-die moves is playable in that order: a move never blocks a later
// one from a point farther back (own pieces do not block, captures only add
// to the opponent's bar), entering home is monotone within a turn, and an
// overshoot bear-off is only ever legal once nothing sits farther back.
// This cuts the double-roll search from ordered sequences to combinations.
int longest_consumption(const BoardConfig& config, const Position& position,
                        Player mover, std::vector<int>& remaining,
                        bool identical, int min_rank) {
  int best = 0;
  std::vector<CheckerMove> candidates;
  int previous_die = 0;
  for (std::size_t i = 0; i < remaining.size() && best < static_cast<int>(remaining.size()); ++i) {
    int die = remaining[i];
    if (die == previous_die) continue;
    previous_die = die;
    moves_for_die(config, position, mover, die, candidates);
    if (candidates.empty()) continue;
    std::vector<int> rest;
    rest.reserve(remaining.size() - 1);
    for (std::size_t j = 0; j < remaining.size(); ++j)
      if (j != i) rest.push_back(remaining[j]);
    auto local = candidates;  // recursion below reuses the scratch vector
    for (const CheckerMove& m : local) {
      int rank = m.from_bar() ? 0
                 : mover == Player::p1 ? m.origin
                                       : config.n_points + 1 - m.origin;
      if (identical && rank < min_rank) continue;
      Position next = position;
      apply_single_move(next, mover, m);
      int depth = 1 + longest_consumption(config, next, mover, rest, identical,
                                          rank);
      if (depth > best) best = depth;
      if (best == static_cast<int>(remaining.size())) break;
    }
  }
  return best;
}

}  // namespace

int max_consumable_dice(const BoardConfig& config, const Position& position,
                        const DiceRoll& roll) {
  std::vector<int> dice = available_dice(config, roll);
  bool identical =
      !dice.empty() && std::all_of(dice.begin(), dice.end(),
                                   [&](int v) { return v == dice.front(); });
  return longest_consumption(config, position, position.to_move, dice,
                             identical, 0);
}

bool turn_is_maximal_legal(const BoardConfig& config, const Position& position,
                           const DiceRoll& roll, const Turn& turn,
                           std::string* reason) {
  auto fail = [&](const std::string& text) {
    if (reason) *reason = text;
    return false;
  };
  std::vector<int> dice = available_dice(config, roll);
  if (turn.moves.size() > dice.size())
    return fail("turn uses more moves than available dice");

  Player mover = position.to_move;
  Position current = position;
  std::vector<int> pool = dice;
  for (std::size_t i = 0; i < turn.moves.size(); ++i) {
    const CheckerMove& m = turn.moves[i];
    auto it = std::find(pool.begin(), pool.end(), m.pips);
    if (it == pool.end())
      return fail("move " + std::to_string(i) + " consumes an unavailable die");
    pool.erase(it);
    std::string why;
    if (!single_move_legal(config, current, mover, m, &why))
      return fail("move " + std::to_string(i) + " illegal: " + why);
    apply_single_move(current, mover, m);
  }
  if (turn.moves.size() == dice.size()) return true;
  int best = max_consumable_dice(config, position, roll);
  if (static_cast<int>(turn.moves.size()) != best)
    return fail("turn consumes " + std::to_string(turn.moves.size()) +
                " dice but " + std::to_string(best) + " is achievable");
  return true;
}

Position apply_turn(const BoardConfig& config, const Position& position,
                    const Turn& turn) {
  Player mover = position.to_move;
  Position current = position;
  for (std::size_t i = 0; i < turn.moves.size(); ++i) {
    std::string reason;
    if (!single_move_legal(config, current, mover, turn.moves[i], &reason))
      throw TurnRejection(i, reason);
    apply_single_move(current, mover, turn.moves[i]);
  }
  current.to_move = opponent_of(mover);
  return current;
}

}  // namespace bghard
