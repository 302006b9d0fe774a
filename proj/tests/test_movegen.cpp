#include "doctest.h"

#include <random>

#include "bghard/board.hpp"
#include "bghard/movegen.hpp"
#include "oracle_movegen.hpp"

using namespace bghard;

namespace {

BoardConfig standard_config() { return BoardConfig{24, 6, 2, 6, 15}; }

Position make_position(const BoardConfig& config,
                       std::initializer_list<std::pair<int, int>> placements,
                       int bar1 = 0, int bar2 = 0, int off1 = 0, int off2 = 0,
                       Player to_move = Player::p1) {
  Position pos = Position::empty(config);
  for (auto [point, count] : placements)
    pos.points[point] = static_cast<std::int16_t>(count);
  pos.bar_p1 = bar1;
  pos.bar_p2 = bar2;
  pos.off_p1 = off1;
  pos.off_p2 = off2;
  pos.to_move = to_move;
  return pos;
}

}  // namespace

TEST_CASE("barred player with blocked home gets only the pass") {
  auto config = standard_config();
  // All six entry points hold white pairs; P1 sits on the bar.
  auto pos = make_position(
      config, {{1, -2}, {2, -2}, {3, -2}, {4, -2}, {5, -2}, {6, -2}, {20, -3}},
      1, 0, 14, 0);
  for (const auto& roll : oracle::all_two_die_rolls()) {
    auto turns = legal_turns(config, pos, roll);
    REQUIRE(turns.size() == 1);
    CHECK(turns[0].is_pass());
  }
}

TEST_CASE("bar re-entry maps die values into the opponent's home") {
  auto config = standard_config();
  auto pos = make_position(config, {{12, 14}, {20, -15}}, 1, 0);
  auto turns = legal_turns(config, pos, DiceRoll{3, 5});
  // Entry with 3 or 5, then the other die from the board.
  for (const auto& t : turns) {
    REQUIRE_FALSE(t.moves.empty());
    CHECK(t.moves[0].from_bar());
    CHECK((t.moves[0].destination == 3 || t.moves[0].destination == 5));
  }

  // P2 enters on n+1-r.
  auto pos2 = make_position(config, {{12, 15}, {5, -14}}, 0, 1, 0, 0,
                            Player::p2);
  auto turns2 = legal_turns(config, pos2, DiceRoll{2, 6});
  for (const auto& t : turns2) {
    REQUIRE_FALSE(t.moves.empty());
    CHECK(t.moves[0].from_bar());
    CHECK((t.moves[0].destination == 23 || t.moves[0].destination == 19));
  }
}

TEST_CASE("doubles on two dice give four moves") {
  auto config = standard_config();
  auto pos = make_position(config, {{1, 15}, {24, -15}});
  auto turns = legal_turns(config, pos, DiceRoll{2, 2});
  REQUIRE_FALSE(turns.empty());
  for (const auto& t : turns) CHECK(t.moves.size() == 4);
}

TEST_CASE("maximality keeps only longest turns") {
  auto config = standard_config();
  // P1 has one piece; both die orders end on the blocked point 9, so only
  // single-die turns exist, and both dice are individually playable to open
  // points: two one-move maximal turns, no tie-break between them.
  auto pos = make_position(config,
                           {{1, 1}, {9, -2}, {20, -13}},
                           0, 0, 14, 0);
  auto turns = legal_turns(config, pos, DiceRoll{3, 5});
  REQUIRE(turns.size() == 2);
  for (const auto& t : turns) CHECK(t.moves.size() == 1);
}

TEST_CASE("bear-off needs the whole side home, exact or overshoot") {
  auto config = standard_config();

  // Pieces outside home forbid bearing off; two stragglers cannot both come
  // home within one turn, so no move of any turn bears off.
  auto outside = make_position(config, {{3, 1}, {4, 1}, {22, 13}, {1, -15}});
  for (const auto& t : legal_turns(config, outside, DiceRoll{6, 6}))
    for (const auto& m : t.moves) CHECK_FALSE(m.bears_off());

  // Exact pip: 22 needs a 3.
  auto home = make_position(config, {{22, 15}, {1, -15}});
  auto turns = legal_turns(config, home, DiceRoll{3, 3});
  REQUIRE(turns.size() == 1);
  for (const auto& m : turns[0].moves) {
    CHECK(m.origin == 22);
    CHECK(m.bears_off());
  }

  // Overshoot: a 6 bears off from 22 only once nothing sits farther back,
  // so the rearmost piece on 20 must leave first.
  auto back = make_position(config, {{20, 1}, {22, 14}, {1, -15}});
  auto six_turns = legal_turns(config, back, DiceRoll{6, 6});
  REQUIRE(six_turns.size() == 1);
  REQUIRE(six_turns[0].moves.size() == 4);
  CHECK(six_turns[0].moves[0].origin == 20);
  CHECK(six_turns[0].moves[0].bears_off());
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(six_turns[0].moves[i].origin == 22);
    CHECK(six_turns[0].moves[i].bears_off());
  }

  auto front = make_position(config, {{22, 15}, {1, -15}});
  auto over = legal_turns(config, front, DiceRoll{6, 6});
  REQUIRE(over.size() == 1);
  CHECK(over[0].moves.size() == 4);
  for (const auto& m : over[0].moves) CHECK(m.bears_off());
}

TEST_CASE("turns reaching the same end by reordering are deduplicated") {
  auto config = standard_config();
  // Two pieces on 1 and 3; roll (1,2).  Playing 1->2 and 3->5 in either
  // order is the same relocation multiset and end position: one turn.
  auto pos = make_position(config, {{1, 1}, {3, 1}, {20, -15}}, 0, 0, 13, 0);
  auto turns = legal_turns(config, pos, DiceRoll{1, 2});
  for (std::size_t i = 1; i < turns.size(); ++i) CHECK_FALSE(turns[i - 1] == turns[i]);
  // The oracle agrees on the whole set.
  CHECK(turns == oracle::oracle_legal_turns(config, pos, DiceRoll{1, 2}));
}

TEST_CASE("capture lands on a lone piece and sends it to the bar") {
  auto config = standard_config();
  auto pos = make_position(config, {{5, 1}, {8, -1}, {1, 14}, {20, -14}});
  auto turns = legal_turns(config, pos, DiceRoll{3, 6});
  bool found_capture = false;
  for (const auto& t : turns) {
    Position after = apply_turn(config, pos, t);
    CHECK(validate_position(config, after).empty());
    for (const auto& m : t.moves)
      if (m.origin == 5 && m.destination == 8) {
        found_capture = true;
        CHECK(after.bar_p2 == 1);
      }
  }
  CHECK(found_capture);
}

TEST_CASE("generator matches the independent enumerator on random boards") {
  auto config = standard_config();
  std::mt19937 rng(20240817u);
  auto rolls = oracle::all_two_die_rolls();
  for (int trial = 0; trial < 120; ++trial) {
    Position pos = oracle::random_position(config, rng);
    REQUIRE(validate_position(config, pos).empty());
    for (const auto& roll : rolls) {
      auto engine = legal_turns(config, pos, roll);
      auto reference = oracle::oracle_legal_turns(config, pos, roll);
      REQUIRE_MESSAGE(engine == reference,
                      "mismatch at trial " << trial << " roll ("
                                           << roll.values[0] << ","
                                           << roll.values[1] << ")");
    }
  }
}

TEST_CASE("random playouts preserve conservation, blocking and bar priority") {
  auto config = standard_config();
  std::mt19937 rng(77u);
  std::uniform_int_distribution<int> die(1, 6);
  int steps = 0;
  while (steps < 4000) {
    Position pos = oracle::random_position(config, rng);
    for (int ply = 0; ply < 60 && steps < 4000; ++ply, ++steps) {
      if (winner(config, pos)) break;
      DiceRoll roll{die(rng), die(rng)};
      auto turns = legal_turns(config, pos, roll);
      REQUIRE_FALSE(turns.empty());
      const Turn& pick = turns[rng() % turns.size()];
      // Bar priority and blocking soundness for every generated move.
      Position cursor = pos;
      for (const auto& m : pick.moves) {
        if (cursor.bar(cursor.to_move) > 0) CHECK(m.from_bar());
        if (!m.bears_off())
          CHECK_FALSE(point_blocked(cursor, cursor.to_move, m.destination));
        apply_single_move(cursor, cursor.to_move, m);
      }
      Position next = apply_turn(config, pos, pick);
      CHECK(validate_position(config, next).empty());
      pos = next;
    }
  }
}
