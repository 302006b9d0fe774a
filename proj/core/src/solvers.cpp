#include "bghard/solvers.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "bghard/movegen.hpp"

namespace bghard {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::win: return "WIN";
    case Verdict::loss: return "LOSS";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

int verdict_exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::win: return 0;
    case Verdict::loss: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 2;
}

void SearchLimits::validate() const {
  if (max_states <= 0) throw std::domain_error("max_states must be positive");
  if (max_depth <= 0) throw std::domain_error("max_depth must be positive");
}

std::vector<DiceRoll> all_rolls(const BoardConfig& config) {
  std::vector<DiceRoll> out;
  std::vector<int> values(static_cast<std::size_t>(config.dice_count), 1);
  while (true) {
    out.emplace_back(values);
    // Advance the odometer over nondecreasing tuples.
    int i = static_cast<int>(values.size()) - 1;
    while (i >= 0 && values[static_cast<std::size_t>(i)] == config.die_sides)
      --i;
    if (i < 0) break;
    int bumped = ++values[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < values.size();
         ++j)
      values[j] = bumped;
  }
  return out;
}

namespace {

// Successor phase of a roll script; pure-position sources stay at phase 0.
std::int64_t next_phase(const RollSource& rolls, std::int64_t phase) {
  if (rolls.kind != RollSource::Kind::scripted) return 0;
  return script_phase(rolls.script, phase + 1);
}

}  // namespace

// ---------------- KSKR: existential reachability ----------------

Verdict decide_kskr(const ReductionInstance& instance,
                    const SearchLimits& limits) {
  limits.validate();
  if (instance.variant != Variant::kskr)
    throw std::domain_error("decide_kskr requires a KSKR instance");
  const BoardConfig& config = instance.config;

  bool truncated = false;
  bool capped = false;

  // One deterministic opponent turn.  Returns the next P1 state unless the
  // opponent wins, or its strategy has no continuation for the position.
  // The latter closes the branch as no win for Player 1, which is sound
  // here: Player 1's wins are checked before the opponent moves, so no
  // winning line is ever lost to a stuck opponent script.
  auto opponent_step =
      [&](Position pos,
          std::int64_t phase) -> std::optional<std::pair<Position, std::int64_t>> {
    DiceRoll roll = roll_at(instance.rolls, pos, phase);
    Turn turn;
    try {
      turn = strategy_move(config, instance.opponent, pos, roll);
    } catch (const StrategyDomainError&) {
      return std::nullopt;
    }
    pos = apply_turn(config, pos, turn);
    if (winner(config, pos) == Player::p2) return std::nullopt;
    return std::make_pair(std::move(pos), next_phase(instance.rolls, phase));
  };

  Position root = instance.initial;
  std::int64_t root_phase = 0;
  std::int64_t root_depth = 0;
  if (auto champion = winner(config, root))
    return *champion == Player::p1 ? Verdict::win : Verdict::loss;
  if (root.to_move == Player::p2) {
    auto stepped = opponent_step(root, root_phase);
    if (!stepped) return Verdict::loss;
    root = stepped->first;
    root_phase = stepped->second;
    root_depth = 1;
    if (winner(config, root) == Player::p1) return Verdict::win;
  }

  struct Frame {
    std::int64_t phase;
    Position pos;
    std::int64_t depth;  // turns played before this P1 turn
    std::vector<Turn> turns;
    std::size_t next = 0;
  };

  std::set<std::pair<std::int64_t, Position>> visited;
  visited.insert({root_phase, root});

  std::vector<Frame> stack;
  {
    DiceRoll roll = roll_at(instance.rolls, root, root_phase);
    stack.push_back(
        Frame{root_phase, root, root_depth, legal_turns(config, root, roll)});
  }

  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.next == frame.turns.size()) {
      stack.pop_back();
      continue;
    }
    if (frame.depth >= limits.max_depth) {
      truncated = true;
      stack.pop_back();
      continue;
    }
    const Turn& turn = frame.turns[frame.next++];
    Position after = apply_turn(config, frame.pos, turn);
    if (winner(config, after) == Player::p1) return Verdict::win;
    if (frame.depth + 1 >= limits.max_depth) {
      truncated = true;
      continue;
    }
    auto stepped = opponent_step(std::move(after),
                                 next_phase(instance.rolls, frame.phase));
    if (!stepped) continue;
    if (winner(config, stepped->first) == Player::p1) return Verdict::win;
    auto key = std::make_pair(stepped->second, stepped->first);
    if (visited.contains(key)) continue;
    if (static_cast<std::int64_t>(visited.size()) >= limits.max_states) {
      capped = true;
      continue;
    }
    visited.insert(key);
    std::int64_t depth = frame.depth + 2;
    DiceRoll roll = roll_at(instance.rolls, stepped->first, stepped->second);
    auto turns = legal_turns(config, stepped->first, roll);
    stack.push_back(Frame{stepped->second, std::move(stepped->first), depth,
                          std::move(turns)});
  }

  return truncated || capped ? Verdict::inconclusive : Verdict::loss;
}

// ---------------- USKR / USUR: AND-OR attractor ----------------

namespace {

// Reachable-graph attractor.  States are (script phase, position); each
// state owns one group per possible roll.  A state is winning when every
// roll group is winning; a group is winning when some (P1, existential) or
// every (P2, universal) successor turn leads to a winning state or an
// immediate P1 win.  Backward counter propagation computes the least
// fixpoint, so cycles (endless play) are correctly not winning.
class AttractorSearch {
 public:
  AttractorSearch(const ReductionInstance& instance, const SearchLimits& limits,
                  bool universal_rolls, bool p2_universal,
                  std::int64_t depth_cap)
      : instance_(instance),
        config_(instance.config),
        limits_(limits),
        universal_rolls_(universal_rolls),
        p2_universal_(p2_universal),
        depth_cap_(depth_cap) {}

  Verdict run() {
    if (auto champion = winner(config_, instance_.initial))
      return *champion == Player::p1 ? Verdict::win : Verdict::loss;

    roll_universe_ = all_rolls(config_);
    int root = intern(0, instance_.initial, 0);
    for (std::size_t cursor = 0; cursor < order_.size(); ++cursor)
      expand(order_[cursor]);
    propagate();

    if (states_[static_cast<std::size_t>(root)].winning) return Verdict::win;
    if (truncated_ || capped_) return Verdict::inconclusive;
    return Verdict::loss;
  }

 private:
  struct Group {
    Player owner = Player::p1;
    bool dead = false;     // a universal group with an opponent-win branch
    bool winning = false;
    int pending = 0;       // universal: successors not yet winning
    bool has_win = false;  // existential: an immediate winning branch
    std::vector<int> succ;
  };

  struct State {
    std::int64_t phase = 0;
    Position pos;
    std::int64_t depth = 0;
    bool winning = false;
    int pending_groups = 0;
    std::vector<Group> groups;
  };

  int intern(std::int64_t phase, const Position& pos, std::int64_t depth) {
    auto key = std::make_pair(phase, pos);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    if (static_cast<std::int64_t>(states_.size()) >= limits_.max_states) {
      capped_ = true;
      return -1;
    }
    int id = static_cast<int>(states_.size());
    ids_.emplace(std::move(key), id);
    states_.push_back(State{phase, pos, depth});
    preds_.emplace_back();
    order_.push_back(id);
    return id;
  }

  std::vector<Turn> opponent_turns(const Position& pos, const DiceRoll& roll) {
    if (p2_universal_) return legal_turns(config_, pos, roll);
    for (const DecisionPoint& dp : instance_.opponent.decisions) {
      if (dp.roll && !(*dp.roll == roll)) continue;
      if (!guards_hold(dp.when, pos)) continue;
      std::vector<Turn> out;
      for (const DecisionOption& option : dp.options) {
        if (!guards_hold(option.when, pos)) continue;
        out.push_back(interpret_action(config_, option.action, pos, roll));
      }
      if (out.empty())
        throw StrategyDomainError("decision point '" + dp.name +
                                  "' offers no legal option");
      return out;
    }
    return {rule_table_turn(config_, instance_.opponent.rules, pos, roll)};
  }

  void expand(int id) {
    // Indices stay valid: states_ only grows and expand reads by value.
    if (states_[static_cast<std::size_t>(id)].depth >= depth_cap_) {
      truncated_ = true;
      return;
    }
    const std::int64_t phase = states_[static_cast<std::size_t>(id)].phase;
    const std::int64_t depth = states_[static_cast<std::size_t>(id)].depth;
    const Position pos = states_[static_cast<std::size_t>(id)].pos;
    const Player mover = pos.to_move;

    std::vector<DiceRoll> rolls;
    if (universal_rolls_)
      rolls = roll_universe_;
    else
      rolls = {roll_at(instance_.rolls, pos, phase)};

    std::vector<Group> groups;
    for (const DiceRoll& roll : rolls) {
      Group group;
      group.owner = mover;
      std::vector<Turn> turns = mover == Player::p1
                                    ? legal_turns(config_, pos, roll)
                                    : opponent_turns(pos, roll);
      std::set<std::pair<std::int64_t, Position>> seen;
      for (const Turn& turn : turns) {
        Position after = apply_turn(config_, pos, turn);
        auto champion = winner(config_, after);
        if (champion == Player::p1) {
          group.has_win = true;
          continue;
        }
        if (champion == Player::p2) {
          if (mover == Player::p2) group.dead = true;
          continue;
        }
        std::int64_t phase2 = next_phase(instance_.rolls, phase);
        if (!seen.insert({phase2, after}).second) continue;
        int succ = intern(phase2, after, depth + 1);
        if (succ < 0) {
          // State budget exhausted: treat the branch as unknowable.
          if (mover == Player::p2) group.dead = true;
          continue;
        }
        group.succ.push_back(succ);
      }
      if (mover == Player::p1) {
        group.winning = group.has_win;
      } else {
        group.pending = static_cast<int>(group.succ.size());
        group.winning = !group.dead && group.pending == 0;
      }
      groups.push_back(std::move(group));
    }

    State& state = states_[static_cast<std::size_t>(id)];
    state.groups = std::move(groups);
    state.pending_groups = 0;
    for (std::size_t g = 0; g < state.groups.size(); ++g) {
      if (!state.groups[g].winning) ++state.pending_groups;
      for (int succ : state.groups[g].succ)
        preds_[static_cast<std::size_t>(succ)].push_back(
            {id, static_cast<int>(g)});
    }
    if (state.pending_groups == 0 && !state.groups.empty()) {
      state.winning = true;
      newly_winning_.push_back(id);
    }
  }

  void propagate() {
    while (!newly_winning_.empty()) {
      int id = newly_winning_.front();
      newly_winning_.pop_front();
      for (auto [pred, g] : preds_[static_cast<std::size_t>(id)]) {
        State& state = states_[static_cast<std::size_t>(pred)];
        Group& group = state.groups[static_cast<std::size_t>(g)];
        if (group.winning || group.dead) continue;
        bool fires =
            group.owner == Player::p1 ? true : --group.pending == 0;
        if (!fires) continue;
        group.winning = true;
        if (--state.pending_groups == 0 && !state.winning) {
          state.winning = true;
          newly_winning_.push_back(pred);
        }
      }
    }
  }

  const ReductionInstance& instance_;
  const BoardConfig& config_;
  const SearchLimits& limits_;
  bool universal_rolls_;
  bool p2_universal_;
  std::int64_t depth_cap_;
  std::vector<DiceRoll> roll_universe_;

  std::map<std::pair<std::int64_t, Position>, int> ids_;
  std::vector<State> states_;
  std::vector<std::vector<std::pair<int, int>>> preds_;
  std::vector<int> order_;
  std::deque<int> newly_winning_;
  bool truncated_ = false;
  bool capped_ = false;
};

}  // namespace

Verdict decide_uskr(const ReductionInstance& instance, UskrMode mode,
                    const SearchLimits& limits) {
  limits.validate();
  if (instance.variant != Variant::uskr)
    throw std::domain_error("decide_uskr requires a USKR instance");
  if (instance.rolls.kind != RollSource::Kind::scripted)
    throw std::domain_error("USKR instances use scripted rolls");
  AttractorSearch search(instance, limits, /*universal_rolls=*/false,
                         /*p2_universal=*/mode == UskrMode::universal,
                         limits.max_depth);
  return search.run();
}

Verdict decide_usur(const ReductionInstance& instance, UsurMode mode,
                    const SearchLimits& limits) {
  limits.validate();
  if (instance.variant != Variant::usur)
    throw std::domain_error("decide_usur requires a USUR instance");
  std::int64_t depth_cap = limits.max_depth;
  if (instance.win_horizon > 0 && instance.win_horizon < depth_cap)
    depth_cap = instance.win_horizon;
  bool universal = mode == UsurMode::universal;
  AttractorSearch search(instance, limits, /*universal_rolls=*/universal,
                         /*p2_universal=*/universal, depth_cap);
  return search.run();
}

}  // namespace bghard
