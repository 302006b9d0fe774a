#pragma once

// Generalized backgammon on a line of n points.  Player 1 moves rightward
// (toward point n), Player 2 leftward (toward point 1).  A point holding two
// or more opposing pieces is blocked.  Landing on a lone opposing piece sends
// it to the bar; a barred piece must re-enter through the opponent's home
// before any other piece may move.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bghard {

enum class Player : std::uint8_t { p1 = 0, p2 = 1 };

inline Player opponent_of(Player who) {
  return who == Player::p1 ? Player::p2 : Player::p1;
}

inline const char* player_name(Player who) {
  return who == Player::p1 ? "P1" : "P2";
}

// Board generalization parameters.  All fields are fixed at construction.
struct BoardConfig {
  int n_points = 24;          // n: number of points on the line
  int home_size = 6;          // h: size of each player's home region
  int dice_count = 2;         // d: dice per roll
  int die_sides = 6;          // s: sides per die
  int pieces_per_player = 15; // p: pieces per player

  // h >= 6, d >= 2, s >= 6, n >= 2h + 1, p >= 1.
  void validate() const;

  bool operator==(const BoardConfig&) const = default;
};

// Full game state.  points[q] holds the signed piece count of point q
// (1-based; index 0 is unused): positive counts are P1 pieces, negative
// counts are P2 pieces.  A point never holds pieces of both players.
struct Position {
  std::vector<std::int16_t> points;
  int bar_p1 = 0;
  int bar_p2 = 0;
  int off_p1 = 0;
  int off_p2 = 0;
  Player to_move = Player::p1;

  static Position empty(const BoardConfig& config);

  int point_count(int point) const { return points[point]; }

  int bar(Player who) const { return who == Player::p1 ? bar_p1 : bar_p2; }
  int off(Player who) const { return who == Player::p1 ? off_p1 : off_p2; }
  int& bar(Player who) { return who == Player::p1 ? bar_p1 : bar_p2; }
  int& off(Player who) { return who == Player::p1 ? off_p1 : off_p2; }

  // Signed count for the player: piece count if the point is theirs, else 0.
  int count_of(Player who, int point) const {
    int c = points[point];
    if (who == Player::p1) return c > 0 ? c : 0;
    return c < 0 ? -c : 0;
  }

  bool operator==(const Position&) const = default;
  auto operator<=>(const Position&) const = default;
};

// A roll of d dice.  values is kept sorted ascending; legality never depends
// on the order the dice physically landed.
struct DiceRoll {
  std::vector<int> values;

  DiceRoll() = default;
  DiceRoll(std::initializer_list<int> vs);
  explicit DiceRoll(std::vector<int> vs);

  bool is_double() const {
    return values.size() == 2 && values[0] == values[1];
  }

  bool operator==(const DiceRoll&) const = default;
  auto operator<=>(const DiceRoll&) const = default;
};

// One piece relocation.  origin 0 means the bar; destination -1 means borne
// off.  pips is the die value the move consumes.
struct CheckerMove {
  int origin = 0;
  int destination = 0;
  int pips = 0;

  static constexpr int bar_origin = 0;
  static constexpr int off_destination = -1;

  bool from_bar() const { return origin == bar_origin; }
  bool bears_off() const { return destination == off_destination; }

  bool operator==(const CheckerMove&) const = default;
  auto operator<=>(const CheckerMove&) const = default;
};

// An ordered sequence of checker moves forming one player's whole turn.  An
// empty turn is a forced pass.
struct Turn {
  std::vector<CheckerMove> moves;

  bool is_pass() const { return moves.empty(); }

  bool operator==(const Turn&) const = default;
  auto operator<=>(const Turn&) const = default;
};

// True iff the opponent of mover holds the point with two or more pieces.
// Throws std::domain_error on an out-of-range index.
bool point_blocked(const Position& position, Player mover, int point);

// The player who has borne off all p pieces, if any.
std::optional<Player> winner(const BoardConfig& config,
                             const Position& position);

// Invariant audit.  Returns human-readable violation descriptions; empty
// means the position is valid under the config.
std::vector<std::string> validate_position(const BoardConfig& config,
                                           const Position& position);

// Thrown by apply_turn when a move in the turn is illegal; move_index is the
// position of the first violating move within the turn.
class TurnRejection : public std::domain_error {
 public:
  TurnRejection(std::size_t move_index, const std::string& reason);
  std::size_t move_index() const { return move_index_; }

 private:
  std::size_t move_index_;
};

// Plays out the turn for position.to_move: relocates pieces, captures lone
// opposing pieces to the bar, increments off counts on bear-off, then flips
// to_move.  Each move is checked for legality in the intermediate position
// produced by its predecessors; the first violation raises TurnRejection.
Position apply_turn(const BoardConfig& config, const Position& position,
                    const Turn& turn);

// 64-bit FNV-1a over the position's contents; stable across runs.
std::uint64_t position_hash(const Position& position);

struct PositionHasher {
  std::size_t operator()(const Position& position) const {
    return static_cast<std::size_t>(position_hash(position));
  }
};

}  // namespace bghard
