#include "bghard/board.hpp"

#include <algorithm>
#include <sstream>

namespace bghard {

void BoardConfig::validate() const {
  if (home_size < 6) throw std::domain_error("home_size must be at least 6");
  if (dice_count < 2) throw std::domain_error("dice_count must be at least 2");
  if (die_sides < 6) throw std::domain_error("die_sides must be at least 6");
  if (n_points < 2 * home_size + 1)
    throw std::domain_error("n_points must be at least 2*home_size + 1");
  if (pieces_per_player < 1)
    throw std::domain_error("pieces_per_player must be at least 1");
}

Position Position::empty(const BoardConfig& config) {
  Position pos;
  pos.points.assign(static_cast<std::size_t>(config.n_points) + 1, 0);
  return pos;
}

DiceRoll::DiceRoll(std::initializer_list<int> vs) : values(vs) {
  std::sort(values.begin(), values.end());
}

DiceRoll::DiceRoll(std::vector<int> vs) : values(std::move(vs)) {
  std::sort(values.begin(), values.end());
}

bool point_blocked(const Position& position, Player mover, int point) {
  if (point < 1 || point >= static_cast<int>(position.points.size()))
    throw std::domain_error("point index out of range");
  int c = position.points[point];
  return mover == Player::p1 ? c <= -2 : c >= 2;
}

std::optional<Player> winner(const BoardConfig& config,
                             const Position& position) {
  if (position.off_p1 == config.pieces_per_player) return Player::p1;
  if (position.off_p2 == config.pieces_per_player) return Player::p2;
  return std::nullopt;
}

std::vector<std::string> validate_position(const BoardConfig& config,
                                           const Position& position) {
  std::vector<std::string> violations;
  auto complain = [&](const std::string& text) { violations.push_back(text); };

  if (static_cast<int>(position.points.size()) != config.n_points + 1) {
    complain("points sequence has wrong length for the board");
    return violations;  // counts below would index out of range
  }
  if (position.bar_p1 < 0) complain("negative bar count for P1");
  if (position.bar_p2 < 0) complain("negative bar count for P2");
  if (position.off_p1 < 0) complain("negative off count for P1");
  if (position.off_p2 < 0) complain("negative off count for P2");

  long sum_p1 = position.bar_p1 + position.off_p1;
  long sum_p2 = position.bar_p2 + position.off_p2;
  for (int q = 1; q <= config.n_points; ++q) {
    int c = position.points[q];
    if (c > 0) sum_p1 += c;
    if (c < 0) sum_p2 += -c;
  }
  if (sum_p1 != config.pieces_per_player) {
    std::ostringstream os;
    os << "conservation violated for P1: " << sum_p1 << " pieces, expected "
       << config.pieces_per_player;
    complain(os.str());
  }
  if (sum_p2 != config.pieces_per_player) {
    std::ostringstream os;
    os << "conservation violated for P2: " << sum_p2 << " pieces, expected "
       << config.pieces_per_player;
    complain(os.str());
  }
  return violations;
}

TurnRejection::TurnRejection(std::size_t move_index, const std::string& reason)
    : std::domain_error("illegal move at index " + std::to_string(move_index) +
                        ": " + reason),
      move_index_(move_index) {}

std::uint64_t position_hash(const Position& position) {
  constexpr std::uint64_t basis = 0xcbf29ce484222325ull;
  constexpr std::uint64_t prime = 1099511628211ull;
  std::uint64_t h = basis;
  auto mix = [&](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= prime;
    }
  };
  for (std::size_t q = 1; q < position.points.size(); ++q)
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(position.points[q])));
  mix(static_cast<std::uint64_t>(position.bar_p1));
  mix(static_cast<std::uint64_t>(position.bar_p2));
  mix(static_cast<std::uint64_t>(position.off_p1));
  mix(static_cast<std::uint64_t>(position.off_p2));
  mix(static_cast<std::uint64_t>(position.to_move));
  return h;
}

}  // namespace bghard
