#pragma once

// Independent legal-turn oracle used only by tests.  Deliberately written as
// a from-scratch enumeration with a different structure from the engine: it
// expands every distinct die ordering explicitly (next_permutation), walks
// each ordering left to right trying all piece choices, keeps every sequence
// that cannot be extended, then filters to maximal length and canonicalizes.
// Nothing here calls the engine's generator.

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "bghard/board.hpp"

namespace oracle {

using bghard::BoardConfig;
using bghard::CheckerMove;
using bghard::DiceRoll;
using bghard::Player;
using bghard::Position;
using bghard::Turn;

inline bool oracle_blocked(const Position& pos, Player mover, int point) {
  int c = pos.points[point];
  return mover == Player::p1 ? c <= -2 : c >= 2;
}

inline bool oracle_all_home(const BoardConfig& cfg, const Position& pos,
                            Player mover) {
  if ((mover == Player::p1 ? pos.bar_p1 : pos.bar_p2) > 0) return false;
  if (mover == Player::p1) {
    for (int q = 1; q <= cfg.n_points - cfg.home_size; ++q)
      if (pos.points[q] > 0) return false;
  } else {
    for (int q = cfg.home_size + 1; q <= cfg.n_points; ++q)
      if (pos.points[q] < 0) return false;
  }
  return true;
}

// Every single move available with the given die value, recomputed naively.
inline std::vector<CheckerMove> oracle_single_moves(const BoardConfig& cfg,
                                                    const Position& pos,
                                                    Player mover, int die) {
  std::vector<CheckerMove> out;
  int bar = mover == Player::p1 ? pos.bar_p1 : pos.bar_p2;
  if (bar > 0) {
    int entry = mover == Player::p1 ? die : cfg.n_points + 1 - die;
    if (entry >= 1 && entry <= cfg.n_points &&
        !oracle_blocked(pos, mover, entry))
      out.push_back({0, entry, die});
    return out;
  }
  bool home = oracle_all_home(cfg, pos, mover);
  for (int q = 1; q <= cfg.n_points; ++q) {
    int c = pos.points[q];
    bool mine = mover == Player::p1 ? c > 0 : c < 0;
    if (!mine) continue;
    int target = mover == Player::p1 ? q + die : q - die;
    if (target >= 1 && target <= cfg.n_points) {
      if (!oracle_blocked(pos, mover, target)) out.push_back({q, target, die});
      continue;
    }
    if (!home) continue;
    int needed = mover == Player::p1 ? cfg.n_points + 1 - q : q;
    if (die == needed) {
      out.push_back({q, -1, die});
    } else if (die > needed) {
      bool rearmost = true;
      if (mover == Player::p1) {
        for (int r = 1; r < q; ++r)
          if (pos.points[r] > 0) rearmost = false;
      } else {
        for (int r = q + 1; r <= cfg.n_points; ++r)
          if (pos.points[r] < 0) rearmost = false;
      }
      if (rearmost) out.push_back({q, -1, die});
    }
  }
  return out;
}

inline void oracle_apply(Position& pos, Player mover, const CheckerMove& m) {
  if (m.origin == 0) {
    if (mover == Player::p1)
      --pos.bar_p1;
    else
      --pos.bar_p2;
  } else {
    pos.points[m.origin] = static_cast<std::int16_t>(
        pos.points[m.origin] + (mover == Player::p1 ? -1 : 1));
  }
  if (m.destination == -1) {
    if (mover == Player::p1)
      ++pos.off_p1;
    else
      ++pos.off_p2;
    return;
  }
  int there = pos.points[m.destination];
  if (mover == Player::p1 && there == -1) {
    pos.points[m.destination] = 0;
    ++pos.bar_p2;
  } else if (mover == Player::p2 && there == 1) {
    pos.points[m.destination] = 0;
    ++pos.bar_p1;
  }
  pos.points[m.destination] = static_cast<std::int16_t>(
      pos.points[m.destination] + (mover == Player::p1 ? 1 : -1));
}

struct OracleKey {
  std::vector<std::int16_t> points;
  int bar1, bar2, off1, off2;
  std::vector<std::pair<int, int>> pairs;

  bool operator<(const OracleKey& o) const {
    return std::tie(points, bar1, bar2, off1, off2, pairs) <
           std::tie(o.points, o.bar1, o.bar2, o.off1, o.off2, o.pairs);
  }
};

// Reference implementation of legal_turns.
inline std::vector<Turn> oracle_legal_turns(const BoardConfig& cfg,
                                            const Position& pos,
                                            const DiceRoll& roll) {
  std::vector<int> dice = roll.values;
  if (cfg.dice_count == 2 && roll.values.size() == 2 &&
      roll.values[0] == roll.values[1])
    dice = {roll.values[0], roll.values[0], roll.values[0], roll.values[0]};
  std::sort(dice.begin(), dice.end());

  Player mover = pos.to_move;
  std::vector<std::pair<std::vector<CheckerMove>, Position>> finished;

  // Walk one fixed die ordering, branching over piece choices.
  auto walk = [&](auto&& self, const Position& here,
                  const std::vector<int>& order, std::size_t depth,
                  std::vector<CheckerMove>& seq) -> void {
    if (depth == order.size()) {
      finished.emplace_back(seq, here);
      return;
    }
    auto moves = oracle_single_moves(cfg, here, mover, order[depth]);
    if (moves.empty()) {
      finished.emplace_back(seq, here);
      return;
    }
    for (const CheckerMove& m : moves) {
      Position next = here;
      oracle_apply(next, mover, m);
      seq.push_back(m);
      self(self, next, order, depth + 1, seq);
      seq.pop_back();
    }
  };

  do {
    std::vector<CheckerMove> seq;
    walk(walk, pos, dice, 0, seq);
  } while (std::next_permutation(dice.begin(), dice.end()));

  std::size_t best = 0;
  for (const auto& [seq, end] : finished) best = std::max(best, seq.size());

  std::map<OracleKey, Turn> unique;
  for (const auto& [seq, end] : finished) {
    if (seq.size() != best) continue;
    OracleKey key{end.points, end.bar_p1, end.bar_p2, end.off_p1, end.off_p2,
                  {}};
    for (const CheckerMove& m : seq)
      key.pairs.emplace_back(m.origin, m.destination);
    std::sort(key.pairs.begin(), key.pairs.end());
    Turn t{seq};
    auto [it, inserted] = unique.try_emplace(std::move(key), t);
    if (!inserted && t < it->second) it->second = std::move(t);
  }

  std::vector<Turn> out;
  for (auto& [k, t] : unique) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Random positions that pass validate_position: each piece independently
// picks a slot (a point, the bar, or off), with P2 restricted to points P1
// left unoccupied so a point never holds both players.
inline Position random_position(const BoardConfig& cfg, std::mt19937& rng) {
  Position pos = bghard::Position::empty(cfg);
  std::uniform_int_distribution<int> slot(0, cfg.n_points + 1);
  for (int piece = 0; piece < cfg.pieces_per_player; ++piece) {
    int s = slot(rng);
    if (s == 0)
      ++pos.bar_p1;
    else if (s == cfg.n_points + 1)
      ++pos.off_p1;
    else
      ++pos.points[s];
  }
  for (int piece = 0; piece < cfg.pieces_per_player; ++piece) {
    for (;;) {
      int s = slot(rng);
      if (s == 0) {
        ++pos.bar_p2;
        break;
      }
      if (s == cfg.n_points + 1) {
        ++pos.off_p2;
        break;
      }
      if (pos.points[s] <= 0) {
        --pos.points[s];
        break;
      }
    }
  }
  pos.to_move = (rng() & 1) ? Player::p1 : Player::p2;
  return pos;
}

// The 21 distinct two-die rolls on six-sided dice.
inline std::vector<DiceRoll> all_two_die_rolls(int sides = 6) {
  std::vector<DiceRoll> rolls;
  for (int a = 1; a <= sides; ++a)
    for (int b = a; b <= sides; ++b) rolls.push_back(DiceRoll{a, b});
  return rolls;
}

}  // namespace oracle
