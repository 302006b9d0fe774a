// Compiles 3-CNF satisfiability into a known-rolls, known-strategy
// backgammon instance.  Player 1 wins the scripted game iff the formula is
// satisfiable, and the only turns where Player 1 ever has more than one
// legal move are one two-way commitment turn per two-sided variable.
//
// Board geography, Player 1 moving toward higher points:
//
//   1..6        Player 2 home.  Every point carries a white pair, so a
//               captured Player 1 piece can never re-enter while the pairs
//               stand.
//   7..19       white reservoir.  Filler pieces parked on 19 absorb the
//               unspent dice of every white turn by shuffling leftward
//               inside the zone, keeping white turns fully consumed without
//               touching the machinery.
//   variable windows of 24 points each, based at 21 + 24(i-1).  Locals:
//         2   true stack (occurrences + 1 pieces when the variable appears
//             positively, else empty)
//         4   true door: a white pair the opponent opens on cue
//         6   white stock that re-closes the true door
//         7   true landing, where a courier through door 4 parks
//         14/16/18/19  the mirrored false side; local 19 is the track head
//         5, 8, 9, 10, 17, 20, 21, 22  permanent white pairs that leave
//             every scripted Player 1 roll a single interpretation
//         1, 13  dumping grounds for opened door pairs; 11 the same for
//             late reopenings of the false door
//   a 12-point gap, then clause windows of 24 points each.  Locals:
//         9   clause stack: a lone black piece until a courier arrives
//         10  attacker pair: captures the clause piece if it is still lone
//             when the sweep comes
//         11, 15  permanent white pairs
//         12  drain door, opened after all deliveries to let the clause
//             stack run home
//         7   approach: where arriving couriers land; 14: drain exit
//   a buffer, then Player 1 home [n-5 .. n] with white pairs on n-9, n-8,
//   n-7 and n-4..n-1, and a black anchor pair on n-10.  Evacuated pieces
//   pile on n; drained clause stacks land on n-5, whose pip distance to
//   bear off is exactly six.  The anchors sit boxed in, a 2, 3 or 6 away
//   from a white pair in every direction, and box white in right back:
//   the n-4 pair would need n-10 free to ever move a six.
//
// Travel works in whole-window hops: from a track head (variable local 19
// or clause approach 7) a double six moves one courier four steps of six,
// crossing only points that are empty in every reachable script state.
// Deliveries run nv - i + j hops from variable i to clause j; evacuations
// run nv + nc - i + 1 hops to the buffer point n-12 and finish with two
// (6,3) legs onto n; drained clause pieces run nc - j + 1 hops from the
// drain exit straight onto n-5.
//
// Per variable the script opens both doors, gives Player 1 one (2,3) whose
// only two maximal turns are "stack courier through the true door" or
// "through the false door", then runs both sides' delivery and evacuation
// slots.  Whichever side was not chosen finds its slots dead: the doors it
// would need are closed and every alternative die is blocked, so the turns
// are forced passes.  White conduct is a guard table, not a move list, so
// one table serves every Player 1 choice.  After the last variable a white
// (1,1) sweep captures a clause piece iff some clause went without a
// delivery.  After a capture white switches to a home march that never
// gives up the entry seals or the n-4 pair, so the captured piece never
// re-enters, white never finishes coming home (the anchors deny the n-4
// pair its six) and so never reaches bear-off, and the game freezes into
// repetition with Player 1 short of a win.  Otherwise the drains run every
// clause stack home, white vacates n-7 so the anchors can come in behind
// them, and the bear-off block finishes Player 1's win inside the scripted
// prefix.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bghard/compilers.hpp"
#include "bghard/dimacs.hpp"
#include "bghard/movegen.hpp"

namespace bghard {
namespace {

constexpr int window_size = 24;
constexpr int reservoir_lo = 7;
constexpr int reservoir_hi = 19;
// One filler piece can absorb this many pips before it hits the zone floor.
constexpr int reservoir_piece_pips = reservoir_hi - reservoir_lo;

// ---------------- Plan ----------------

struct VarPlan {
  int occ_true = 0;               // positive occurrences
  int occ_false = 0;              // negative occurrences
  std::vector<int> clauses_true;  // 1-based clause targets, delivery order
  std::vector<int> clauses_false;
  int stack_true = 0;   // pieces staged on local 2: occ_true + 1, or 0
  int stack_false = 0;  // pieces staged on local 14: occ_false + 1, or 0

  bool absent() const { return occ_true == 0 && occ_false == 0; }
  bool two_sided() const { return occ_true > 0 && occ_false > 0; }
};

struct Plan {
  CnfFormula formula;
  int nv = 0;
  int nc = 0;
  int n = 0;
  std::vector<VarPlan> vars;  // index 0 unused
  std::vector<int> widths;    // clause widths, index 0 unused

  int var_base(int i) const { return 21 + window_size * (i - 1); }
  int clause_base(int j) const {
    return 21 + window_size * nv + 12 + window_size * (j - 1);
  }
  int vl(int i, int local) const { return var_base(i) + local - 1; }
  int cl(int j, int local) const { return clause_base(j) + local - 1; }

  int bear_low() const { return n - 5; }  // exact-six bear-off point
  int bear_high() const { return n; }     // evacuation pile

  // Whole-window hops (one double six each) along the through track.
  int hops_to_clause(int i, int j) const { return nv - i + j; }
  int hops_to_buffer(int i) const { return nv + nc - i + 1; }
  int drain_hops(int j) const { return nc - j + 1; }

  // No clauses: nothing to deliver or capture, the board degenerates to a
  // single bear-off and Player 1 always wins (an empty conjunction holds).
  bool degenerate() const { return nc == 0; }
};

Plan build_plan(const CnfFormula& formula) {
  Plan plan;
  plan.formula = formula;
  plan.nv = formula.var_count;
  plan.nc = static_cast<int>(formula.clauses.size());
  plan.n = window_size * plan.nv + window_size * plan.nc + 51;
  plan.vars.resize(static_cast<std::size_t>(plan.nv) + 1);
  plan.widths.assign(static_cast<std::size_t>(plan.nc) + 1, 0);
  for (int j = 1; j <= plan.nc; ++j) {
    // A clause is a set of literals: a repeated literal would schedule a
    // redundant delivery to the same clause stack, so deduplicate first.
    Clause clause = formula.clauses[static_cast<std::size_t>(j - 1)];
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    plan.widths[static_cast<std::size_t>(j)] = static_cast<int>(clause.size());
    for (const Literal& literal : clause) {
      VarPlan& var = plan.vars[static_cast<std::size_t>(literal.variable)];
      if (literal.positive) {
        ++var.occ_true;
        var.clauses_true.push_back(j);
      } else {
        ++var.occ_false;
        var.clauses_false.push_back(j);
      }
    }
  }
  for (VarPlan& var : plan.vars) {
    var.stack_true = var.occ_true > 0 ? var.occ_true + 1 : 0;
    var.stack_false = var.occ_false > 0 ? var.occ_false + 1 : 0;
  }
  return plan;
}

// ---------------- Initial position ----------------

struct Board {
  Position initial;
  int pieces = 0;  // per-player piece count, set by the white inventory
  std::int64_t white_pips = 0;
};

Board build_board(const Plan& plan, int filler) {
  Position pos;
  pos.points.assign(static_cast<std::size_t>(plan.n) + 1, 0);
  pos.to_move = Player::p1;
  auto white = [&](int point, int count) {
    pos.points[static_cast<std::size_t>(point)] =
        static_cast<std::int16_t>(pos.points[static_cast<std::size_t>(point)] -
                                  count);
  };
  auto black = [&](int point, int count) {
    pos.points[static_cast<std::size_t>(point)] =
        static_cast<std::int16_t>(pos.points[static_cast<std::size_t>(point)] +
                                  count);
  };

  for (int q = 1; q <= 6; ++q) white(q, 2);
  white(reservoir_hi, filler);
  white(plan.n - 9, 2);
  for (int q = plan.n - 4; q <= plan.n - 1; ++q) white(q, 2);
  if (!plan.degenerate()) {
    // Player 1 anchor pair.  Its reachable squares are all paired white
    // (n-8, n-7 below, n-4 above) until white vacates n-7 at the very end
    // of the schedule, so in every other line it stands still.  It denies
    // Player 1 bear-off rights for the whole game, and it denies white's
    // n-4 pair its six, so after a capture white can never finish coming
    // home and the game freezes instead of racing.
    black(plan.n - 10, 2);
    white(plan.n - 8, 2);
    white(plan.n - 7, 2);
  }

  for (int i = 1; i <= plan.nv; ++i) {
    const VarPlan& var = plan.vars[static_cast<std::size_t>(i)];
    if (var.absent()) continue;
    black(plan.vl(i, 2), var.stack_true);
    black(plan.vl(i, 14), var.stack_false);
    white(plan.vl(i, 4), 2);
    white(plan.vl(i, 16), 2);
    for (int local : {5, 8, 9, 10, 17, 20, 21, 22}) white(plan.vl(i, local), 2);
    // Stocks re-close a door once per courier plus the lead-in, two pieces
    // per closing.
    white(plan.vl(i, 6), 2 * (var.occ_true + 2));
    white(plan.vl(i, 18), 2 * (var.occ_false + 2));
  }
  for (int j = 1; j <= plan.nc; ++j) {
    black(plan.cl(j, 9), 1);
    for (int local : {10, 11, 12, 15}) white(plan.cl(j, local), 2);
  }
  if (plan.degenerate()) black(plan.bear_high(), 1);

  int whites = 0;
  int blacks = 0;
  std::int64_t white_pips = 0;
  for (int q = 1; q <= plan.n; ++q) {
    int c = pos.points[static_cast<std::size_t>(q)];
    if (c < 0) {
      whites += -c;
      white_pips += static_cast<std::int64_t>(-c) * q;
    } else {
      blacks += c;
    }
  }
  // Both sides field the same piece total; Player 1's surplus starts borne
  // off, so its win needs exactly the on-board pieces brought home.
  pos.off_p1 = whites - blacks;
  pos.off_p2 = 0;

  Board board;
  board.pieces = whites;
  board.white_pips = white_pips;
  board.initial = std::move(pos);
  return board;
}

// ---------------- White rule table ----------------

Guard point_is(int point, int value) {
  Guard guard;
  guard.subject = Guard::Subject::point;
  guard.point = point;
  guard.op = Guard::Op::eq;
  guard.value = value;
  return guard;
}

Guard point_at_least(int point, int value) {
  Guard guard = point_is(point, value);
  guard.op = Guard::Op::ge;
  return guard;
}

Guard point_at_most(int point, int value) {
  Guard guard = point_is(point, value);
  guard.op = Guard::Op::le;
  return guard;
}

Guard no_p1_between(int lo, int hi) {
  Guard guard;
  guard.subject = Guard::Subject::region_p1;
  guard.lo = lo;
  guard.hi = hi;
  guard.op = Guard::Op::eq;
  guard.value = 0;
  return guard;
}

Guard p1_on_bar() {
  Guard guard;
  guard.subject = Guard::Subject::bar_p1;
  guard.op = Guard::Op::ge;
  guard.value = 1;
  return guard;
}

Action act_moves(std::vector<CheckerMove> moves) {
  Action action;
  action.kind = Action::Kind::moves;
  action.moves = std::move(moves);
  return action;
}

Action act_moves_then_shuffle(std::vector<CheckerMove> moves) {
  Action action;
  action.kind = Action::Kind::moves_then_shuffle;
  action.moves = std::move(moves);
  action.lo = reservoir_lo;
  action.hi = reservoir_hi;
  return action;
}

Action act_shuffle() {
  Action action;
  action.kind = Action::Kind::shuffle;
  action.lo = reservoir_lo;
  action.hi = reservoir_hi;
  return action;
}

std::vector<StrategyRule> build_rules(const Plan& plan) {
  std::vector<StrategyRule> rules;
  auto rule = [&](std::string name, DiceRoll roll, std::vector<Guard> when,
                  Action action) {
    StrategyRule r;
    r.name = std::move(name);
    r.roll = roll;
    r.when = std::move(when);
    r.action = std::move(action);
    rules.push_back(std::move(r));
  };

  // Once a clause piece has been captured the script is over for white: it
  // marches everything that can still move toward home, never giving up a
  // pair listed in keep_paired.  The entry points 2, 3 and 6 stay sealed,
  // so the captured piece never re-enters, and the n-4 pair keeps standing
  // in front of the Player 1 anchors that block its own six.  White can
  // therefore never finish coming home and never reaches bear-off; once
  // the marchers have drained, both sides pass and the position repeats.
  // The second trigger is a belt for off-script lines where white did
  // reach bear-off anyway: it keeps white in the endgame through that
  // final stretch rather than falling back into the gadget rules.
  {
    StrategyRule endgame;
    endgame.name = "endgame";
    endgame.when = {p1_on_bar()};
    endgame.action.kind = Action::Kind::endgame;
    endgame.action.keep_paired = {2, 3, 6};
    if (!plan.degenerate()) endgame.action.keep_paired.push_back(plan.n - 4);
    rules.push_back(endgame);
    endgame.name = "endgame_won_race";
    Guard has_borne_off;
    has_borne_off.subject = Guard::Subject::off_p2;
    has_borne_off.op = Guard::Op::ge;
    has_borne_off.value = 1;
    endgame.when = {has_borne_off};
    rules.push_back(std::move(endgame));
  }

  for (int i = 1; i <= plan.nv; ++i) {
    const VarPlan& var = plan.vars[static_cast<std::size_t>(i)];
    if (var.absent()) continue;
    const std::string tag = "_v" + std::to_string(i);
    // Earlier variable windows are fully evacuated before this window's
    // rules may fire; the first window needs no such fence.
    std::vector<Guard> prior;
    if (i > 1) prior = {no_p1_between(plan.var_base(1), plan.var_base(i) - 1)};
    auto guarded = [&](std::vector<Guard> rest) {
      std::vector<Guard> when = prior;
      when.insert(when.end(), rest.begin(), rest.end());
      return when;
    };
    auto mv = [&](int from_local, int to_local, int pips) {
      return CheckerMove{plan.vl(i, from_local), plan.vl(i, to_local), pips};
    };

    rule("open_doors" + tag, DiceRoll{3, 3},
         guarded({point_is(plan.vl(i, 4), -2), point_is(plan.vl(i, 16), -2),
                  point_is(plan.vl(i, 2), var.stack_true),
                  point_is(plan.vl(i, 14), var.stack_false)}),
         act_moves({mv(4, 1, 3), mv(4, 1, 3), mv(16, 13, 3), mv(16, 13, 3)}));
    rule("reopen_false_door" + tag, DiceRoll{3, 3},
         guarded({point_is(plan.vl(i, 2), var.stack_true),
                  point_at_least(plan.vl(i, 14), 2),
                  point_is(plan.vl(i, 16), -2)}),
         act_moves_then_shuffle({mv(16, 13, 3), mv(16, 13, 3)}));
    rule("reopen_true_door" + tag, DiceRoll{3, 3},
         guarded({point_is(plan.vl(i, 13), 0),
                  point_is(plan.vl(i, 14), var.stack_false),
                  point_at_least(plan.vl(i, 2), 2),
                  point_is(plan.vl(i, 4), -2)}),
         act_moves_then_shuffle({mv(4, 1, 3), mv(4, 1, 3)}));
    rule("reopen_true_door_late" + tag, DiceRoll{3, 3},
         guarded({point_is(plan.vl(i, 14), 0), point_is(plan.vl(i, 13), 0),
                  point_is(plan.vl(i, 7), 0), point_at_least(plan.vl(i, 2), 1),
                  point_is(plan.vl(i, 4), -2)}),
         act_moves_then_shuffle({mv(4, 1, 3), mv(4, 1, 3)}));
    if (var.two_sided()) {
      // Evacuation reopenings after the first ride a (1,1) instead of the
      // (3,3) above.  Once this window has emptied, a (3,3) landing on a
      // later slot would spring the next window's pristine door rules; a
      // (1,1) cannot, because every two-sided window still has its false
      // stack in place and one-sided variables never need this rule.
      rule("reopen_true_door_next" + tag, DiceRoll{1, 1},
           guarded({point_is(plan.vl(i, 14), 0), point_is(plan.vl(i, 13), 0),
                    point_is(plan.vl(i, 7), 0),
                    point_at_least(plan.vl(i, 2), 1),
                    point_is(plan.vl(i, 4), -2)}),
           act_moves_then_shuffle({mv(4, 3, 1), mv(4, 3, 1)}));
    }
    // Local 1 collects the true door's opening dumps and nothing ever
    // clears it, so it doubles as a this-window-was-opened marker.  Without
    // it a dead evacuation slot of a fully emptied variable with no true
    // stack would spring this rule on the next, still untouched window.
    rule("reopen_false_door_late" + tag, DiceRoll{5, 5},
         guarded({point_at_most(plan.vl(i, 1), -2),
                  point_is(plan.vl(i, 16), -2),
                  point_at_least(plan.vl(i, 14), 1)}),
         act_moves_then_shuffle({mv(16, 11, 5), mv(16, 11, 5)}));
    if (var.occ_false >= 1) {
      // Fires exactly once, when the commitment went through the false
      // door: re-closes the true door and parks a pair on its landing so
      // the true side's delivery slots stay dead.
      rule("close_true_door_and_block" + tag, DiceRoll{2, 2},
           guarded({point_is(plan.vl(i, 4), 0),
                    point_is(plan.vl(i, 2), var.stack_true),
                    point_is(plan.vl(i, 14), var.stack_false - 1),
                    point_is(plan.vl(i, 9), -2)}),
           act_moves({mv(6, 4, 2), mv(6, 4, 2), mv(9, 7, 2), mv(9, 7, 2)}));
    }
    rule("close_true_door" + tag, DiceRoll{2, 2},
         guarded({point_is(plan.vl(i, 4), 0)}),
         act_moves_then_shuffle({mv(6, 4, 2), mv(6, 4, 2)}));
    rule("close_false_door" + tag, DiceRoll{2, 2},
         guarded({point_is(plan.vl(i, 16), 0)}),
         act_moves_then_shuffle({mv(18, 16, 2), mv(18, 16, 2)}));
    rule("unblock_true_landing" + tag, DiceRoll{2, 2},
         guarded({point_is(plan.vl(i, 7), -2), point_is(plan.vl(i, 14), 0),
                  point_at_least(plan.vl(i, 2), 1)}),
         act_moves_then_shuffle({mv(7, 5, 2), mv(7, 5, 2)}));
    rule("clear_midpoint" + tag, DiceRoll{4, 4},
         guarded({point_at_most(plan.vl(i, 13), -4)}),
         act_moves({mv(13, 9, 4), mv(13, 9, 4), mv(13, 9, 4), mv(13, 9, 4)}));
    rule("clear_midpoint_rest" + tag, DiceRoll{4, 4},
         guarded({point_is(plan.vl(i, 13), -2)}),
         act_moves_then_shuffle({mv(13, 9, 4), mv(13, 9, 4)}));
  }

  if (!plan.degenerate()) {
    const int windows_lo = plan.var_base(1);
    const int windows_hi = plan.clause_base(1) - 1;
    {
      StrategyRule sweep;
      sweep.name = "capture_exposed_clause";
      sweep.roll = DiceRoll{1, 1};
      sweep.when = {no_p1_between(windows_lo, windows_hi)};
      sweep.action.kind = Action::Kind::capture_then_shuffle;
      for (int j = 1; j <= plan.nc; ++j)
        sweep.action.capture_pairs.push_back({plan.cl(j, 10), plan.cl(j, 9)});
      sweep.action.lo = reservoir_lo;
      sweep.action.hi = reservoir_hi;
      rules.push_back(std::move(sweep));
    }
    for (int j = 1; j <= plan.nc; ++j) {
      std::vector<Guard> when = {no_p1_between(windows_lo, windows_hi)};
      if (j > 1)
        when.push_back(
            no_p1_between(plan.clause_base(1), plan.clause_base(j) - 1));
      when.push_back(point_is(plan.cl(j, 12), -2));
      when.push_back(point_at_least(plan.cl(j, 9), 1));
      // A (2,4) appears nowhere else in the schedule, so the drain cannot
      // open off cue even though its guards come true as soon as the last
      // variable window empties.  The 4 parks a piece on clause local 8,
      // which no Player 1 route ever crosses again.
      rule("open_drain_c" + std::to_string(j), DiceRoll{2, 4}, std::move(when),
           act_moves({CheckerMove{plan.cl(j, 12), plan.cl(j, 10), 2},
                      CheckerMove{plan.cl(j, 12), plan.cl(j, 8), 4}}));
    }
    // After the last drain the anchor pair is the only Player 1 presence
    // outside home.  Vacating n-7 onto the n-9 pair opens its one route in,
    // a 3 to n-7 and a 2 onto the bear-off pile; n-8 stays put so the
    // two-pip approach remains shut and nothing white ever stands alone.
    // Player 1 absence from every window certifies the drains are done, and
    // the emptied n-7 point retires the rule.
    rule("open_anchor_route", DiceRoll{2, 2},
         {no_p1_between(windows_lo, windows_hi),
          no_p1_between(plan.clause_base(1), plan.clause_base(plan.nc) + 23),
          point_is(plan.n - 7, -2)},
         act_moves_then_shuffle({CheckerMove{plan.n - 7, plan.n - 9, 2},
                                 CheckerMove{plan.n - 7, plan.n - 9, 2}}));
  }

  {
    StrategyRule idle;
    idle.name = "idle_shuffle";
    idle.action = act_shuffle();
    rules.push_back(std::move(idle));
  }
  return rules;
}

// ---------------- Roll schedule ----------------

int pips_of(const DiceRoll& roll) {
  int sum = 0;
  for (int value : roll.values) sum += value;
  bool doubled = !roll.values.empty() &&
                 std::all_of(roll.values.begin(), roll.values.end(),
                             [&](int v) { return v == roll.values[0]; });
  return doubled ? 2 * sum : sum;
}

// Emits the roll schedule.  Turn parity is kept automatically: a white duty
// requested on Player 1's turn is preceded by a white (1,2) spent in the
// reservoir, and a Player 1 duty requested on white's turn by a dead (2,3).
// Every white turn is charged to the reservoir budget for the pips its duty
// rule is not guaranteed to consume as scripted moves.
struct Emitter {
  std::vector<DiceRoll> rolls;
  std::int64_t reservoir_pips = 0;
  std::int64_t capture_turn = -1;

  bool p1_to_roll() const { return rolls.size() % 2 == 0; }

  void p1(DiceRoll roll) {
    if (!p1_to_roll()) white(DiceRoll{1, 2}, 0);
    rolls.push_back(std::move(roll));
  }

  // structural: pips the matching duty rule spends on literal moves in the
  // cheapest branch; the remainder must fit in the reservoir.
  void white(DiceRoll roll, int structural) {
    if (p1_to_roll()) rolls.push_back(DiceRoll{2, 3});  // dead turn
    reservoir_pips += pips_of(roll) - structural;
    rolls.push_back(std::move(roll));
  }
};

Emitter emit_schedule(const Plan& plan) {
  Emitter em;
  auto hop_pair = [&](int hops) {
    for (int h = 0; h < hops; ++h) {
      em.p1(DiceRoll{6, 6});
      em.white(DiceRoll{1, 2}, 0);
    }
  };

  for (int i = 1; i <= plan.nv; ++i) {
    const VarPlan& var = plan.vars[static_cast<std::size_t>(i)];
    if (var.absent()) continue;

    em.p1(DiceRoll{2, 3});       // dead
    em.white(DiceRoll{3, 3}, 12);  // open both doors
    em.p1(DiceRoll{2, 3});       // the commitment turn
    em.white(DiceRoll{2, 2}, 4);   // restore the true side
    em.p1(DiceRoll{6, 6});       // false side: first hop; true side: dead
    em.white(DiceRoll{2, 2}, 4);   // re-close the false door

    // Deliveries to the clauses holding this variable negatively.  The
    // commitment courier doubles as the first delivery and has one hop
    // behind it already.
    for (int m = 1; m <= var.occ_false; ++m) {
      if (m > 1) {
        em.white(DiceRoll{3, 3}, 0);  // reopen the false door
        em.p1(DiceRoll{2, 3});      // next courier to the track head
        em.white(DiceRoll{2, 2}, 0);  // re-close
      }
      int target = var.clauses_false[static_cast<std::size_t>(m - 1)];
      hop_pair(plan.hops_to_clause(i, target) - (m == 1 ? 1 : 0));
      em.p1(DiceRoll{2, 3});  // tuck the courier onto the clause stack
    }

    // Sweep the door junk off the track midpoint before the true-side legs
    // need it clear.
    int sweeps = std::max(1, (var.occ_false + 1) / 2);
    for (int t = 0; t < sweeps; ++t) {
      em.white(DiceRoll{4, 4}, 0);
      em.p1(DiceRoll{2, 3});  // dead
    }

    // Deliveries to the clauses holding this variable positively.  True
    // couriers start on the landing and take two legs to the track head.
    for (int m = 1; m <= var.occ_true; ++m) {
      if (m > 1) {
        em.white(DiceRoll{3, 3}, 0);
        em.p1(DiceRoll{2, 3});
        em.white(DiceRoll{2, 2}, 0);
      }
      em.p1(DiceRoll{3, 6});  // landing to midpoint
      em.white(DiceRoll{1, 2}, 0);
      em.p1(DiceRoll{3, 6});  // midpoint to track head
      em.white(DiceRoll{1, 2}, 0);
      hop_pair(plan.hops_to_clause(
          i, var.clauses_true[static_cast<std::size_t>(m - 1)]));
      em.p1(DiceRoll{2, 3});
    }

    // Evacuate what remains of the false stack.
    for (int m = 1; m <= var.stack_false; ++m) {
      em.white(DiceRoll{5, 5}, m == 1 ? 10 : 0);  // late reopen
      em.p1(DiceRoll{2, 3});                    // courier to the track head
      em.white(DiceRoll{2, 2}, m == 1 ? 4 : 0);   // re-close
      hop_pair(plan.hops_to_buffer(i));
      em.p1(DiceRoll{3, 6});  // buffer to n-6
      em.white(DiceRoll{1, 2}, 0);
      em.p1(DiceRoll{3, 6});  // n-6 to the evacuation pile
    }

    em.white(DiceRoll{2, 2}, 0);  // unblock the true landing if it was held

    // Evacuate what remains of the true stack.  Reopenings after the first
    // use the (1,1) rule; see build_rules.
    for (int m = 1; m <= var.stack_true; ++m) {
      em.white(m == 1 ? DiceRoll{3, 3} : DiceRoll{1, 1}, m == 1 ? 6 : 0);
      em.p1(DiceRoll{2, 3});
      em.white(DiceRoll{2, 2}, m == 1 ? 4 : 0);
      em.p1(DiceRoll{3, 6});
      em.white(DiceRoll{1, 2}, 0);
      em.p1(DiceRoll{3, 6});
      em.white(DiceRoll{1, 2}, 0);
      hop_pair(plan.hops_to_buffer(i));
      em.p1(DiceRoll{3, 6});
      em.white(DiceRoll{1, 2}, 0);
      em.p1(DiceRoll{3, 6});
    }
  }

  int actives = plan.degenerate() ? 1 : plan.nc;
  for (const VarPlan& var : plan.vars)
    actives += var.stack_true + var.stack_false;

  if (!plan.degenerate()) {
    em.p1(DiceRoll{2, 3});  // dead
    em.white(DiceRoll{1, 1}, 0);  // the capture sweep
    em.capture_turn = static_cast<std::int64_t>(em.rolls.size()) - 1;

    for (int j = 1; j <= plan.nc; ++j) {
      em.white(DiceRoll{2, 4}, 6);  // open the drain door
      for (int m = 0; m <= plan.widths[static_cast<std::size_t>(j)]; ++m) {
        em.p1(DiceRoll{2, 3});  // bridge: stack to drain exit, or dead
        em.white(DiceRoll{1, 2}, 0);
        hop_pair(plan.drain_hops(j));
      }
    }

    em.white(DiceRoll{2, 2}, 4);  // vacate n-7: the anchors' route opens
    em.p1(DiceRoll{2, 3});        // first anchor home, a 3 then a 2
    em.p1(DiceRoll{2, 3});        // second anchor home
  }

  for (int t = 0; t < (actives + 3) / 4 + 2; ++t) {
    em.p1(DiceRoll{6, 6});  // bear off up to four pieces
    em.white(DiceRoll{1, 2}, 0);
  }
  return em;
}

std::vector<DiceRoll> tail_cycle() {
  // Endless continuation past the scheduled prefix.  Both sides roll
  // nothing but (6,6).  After a capture Player 1 is frozen for good: a
  // player on the bar may move nothing until it enters, and the entry for
  // a six is point 6, sealed by a white pair that, sitting in white's
  // home, can never move a six itself.  White marches whatever can still
  // move a six toward home; its n-4 pair cannot, with the anchors holding
  // n-10, so white never finishes coming home, never reaches bear-off,
  // and the position goes still and repeats, closing the line as no win.
  // Off-script lines either freeze the same way or run the reservoir
  // shuffle out of legal placements, which also ends them short of a win.
  return {DiceRoll{6, 6}, DiceRoll{6, 6}};
}

// ---------------- Assembly ----------------

GadgetMap build_gadgets(const Plan& plan) {
  GadgetMap map;
  for (int i = 1; i <= plan.nv; ++i) {
    GadgetEntry entry;
    entry.kind = "variable";
    entry.source_index = i;
    entry.window_lo = plan.var_base(i);
    entry.window_hi = plan.var_base(i) + window_size - 1;
    entry.anchors = {
        {"stack_true", plan.vl(i, 2)},    {"door_true", plan.vl(i, 4)},
        {"stock_true", plan.vl(i, 6)},    {"landing_true", plan.vl(i, 7)},
        {"stack_false", plan.vl(i, 14)},  {"door_false", plan.vl(i, 16)},
        {"stock_false", plan.vl(i, 18)},  {"landing_false", plan.vl(i, 19)},
    };
    map.entries.push_back(std::move(entry));
  }
  for (int j = 1; j <= plan.nc; ++j) {
    GadgetEntry entry;
    entry.kind = "clause";
    entry.source_index = j;
    entry.window_lo = plan.clause_base(j);
    entry.window_hi = plan.clause_base(j) + window_size - 1;
    entry.anchors = {
        {"payload", plan.cl(j, 9)},    {"attacker", plan.cl(j, 10)},
        {"drain_door", plan.cl(j, 12)}, {"drain_exit", plan.cl(j, 14)},
        {"approach", plan.cl(j, 7)},
    };
    map.entries.push_back(std::move(entry));
  }
  return map;
}

ReductionInstance assemble(const Plan& plan, const Emitter& em, int filler) {
  Board board = build_board(plan, filler);

  ReductionInstance instance;
  instance.variant = Variant::kskr;
  instance.config = BoardConfig{plan.n, 6, 2, 6, board.pieces};
  instance.initial = std::move(board.initial);
  instance.rolls.kind = RollSource::Kind::scripted;
  instance.rolls.script.prefix = em.rolls;
  instance.rolls.script.cycle = tail_cycle();
  instance.opponent.kind = OpponentStrategy::Kind::scripted;
  instance.opponent.program_id = "threesat_doorkeeper";
  instance.opponent.rules = build_rules(plan);
  instance.gadgets = build_gadgets(plan);
  instance.win_horizon = static_cast<std::int64_t>(em.rolls.size()) +
                         2 * (board.white_pips + board.pieces + 64);
  instance.provenance = digest_hex(emit_dimacs(plan.formula));
  return instance;
}

// ---------------- Self-check ----------------

// Replays one probe assignment end to end.  A probe expected to satisfy the
// formula must win on schedule; a falsifying probe must see its clause
// piece captured and Player 1 sealed out for good.
void replay_probe(const ReductionInstance& instance, const Plan& plan,
                  std::int64_t capture_turn, bool probe_value) {
  std::vector<bool> probe(static_cast<std::size_t>(plan.nv) + 1, probe_value);
  // One-sided variables never reach their commitment turn with a choice;
  // the forced side overrides the probe when predicting the outcome.
  std::vector<bool> effective = probe;
  for (int i = 1; i <= plan.nv; ++i) {
    const VarPlan& var = plan.vars[static_cast<std::size_t>(i)];
    if (var.occ_true > 0 && var.occ_false == 0)
      effective[static_cast<std::size_t>(i)] = true;
    if (var.occ_false > 0 && var.occ_true == 0)
      effective[static_cast<std::size_t>(i)] = false;
  }
  const bool expect_win = plan.formula.evaluate(effective);
  const std::int64_t prefix =
      static_cast<std::int64_t>(instance.rolls.script.prefix.size());
  const std::int64_t cap = expect_win ? prefix + 4 : capture_turn + 40;
  const P1Policy policy = assignment_policy(instance, probe);

  Position pos = instance.initial;
  for (std::int64_t t = 0; t < cap; ++t) {
    DiceRoll roll = roll_at(instance.rolls, pos, t);
    Turn turn;
    if (pos.to_move == Player::p1) {
      turn = policy(pos, roll);
      if (!expect_win && t > capture_turn && !turn.is_pass())
        throw ReductionIntegrityError(
            "a sealed-out Player 1 still had a move on turn " +
            std::to_string(t));
    } else {
      turn = strategy_move(instance.config, instance.opponent, pos, roll);
    }
    pos = apply_turn(instance.config, pos, turn);
    if (auto champion = winner(instance.config, pos)) {
      if (*champion == Player::p1 && expect_win) return;
      throw ReductionIntegrityError(
          std::string(player_name(*champion)) +
          " finished unexpectedly on turn " + std::to_string(t));
    }
    if (!expect_win && t >= capture_turn) {
      if (pos.bar_p1 < 1)
        throw ReductionIntegrityError(
            "no clause piece was captured for a falsifying assignment");
      for (int entry : {2, 3, 6})
        if (pos.points[static_cast<std::size_t>(entry)] > -2)
          throw ReductionIntegrityError(
              "entry point " + std::to_string(entry) +
              " came unsealed while Player 1 was on the bar");
      // The pair in front of the anchors is what keeps white from ever
      // finishing its march home; losing it would put bear-off, and with
      // it the seals, back in play.
      if (pos.points[static_cast<std::size_t>(plan.n - 4)] > -2)
        throw ReductionIntegrityError(
            "white's n-4 pair came apart while Player 1 was on the bar");
    }
  }
  if (expect_win)
    throw ReductionIntegrityError("a satisfying assignment did not win on "
                                  "schedule");
}

void self_check(const ReductionInstance& instance, const Plan& plan,
                std::int64_t capture_turn) {
  auto problems = validate_position(instance.config, instance.initial);
  if (!problems.empty())
    throw ReductionIntegrityError("initial position invalid: " +
                                  problems.front());
  replay_probe(instance, plan, capture_turn, true);
  replay_probe(instance, plan, capture_turn, false);
}

}  // namespace

ReductionInstance compile_3sat(const CnfFormula& formula) {
  try {
    formula.validate();
  } catch (const std::domain_error& error) {
    throw CompileError(error.what());
  }
  if (!formula.is_three_cnf())
    throw CompileError("the known-rolls compiler needs clauses of width at "
                       "most three");

  Plan plan = build_plan(formula);
  Emitter em = emit_schedule(plan);
  if (em.rolls.size() % 2 != 0)
    throw ReductionIntegrityError("schedule ended on white's turn");
  if (!plan.degenerate() && em.capture_turn < 0)
    throw ReductionIntegrityError("schedule has no capture sweep");

  int filler = static_cast<int>(em.reservoir_pips / reservoir_piece_pips) + 8;
  std::string last_error;
  for (int attempt = 0; attempt < 4; ++attempt) {
    ReductionInstance instance = assemble(plan, em, filler);
    try {
      self_check(instance, plan, em.capture_turn);
      return instance;
    } catch (const StrategyDomainError& error) {
      // Either probe ran the reservoir dry; retry with more headroom.  The
      // schedule itself never depends on the filler count.
      last_error = error.what();
      filler += filler / 2 + 12;
    }
  }
  throw ReductionIntegrityError("self-check kept failing after reservoir "
                                "growth: " +
                                last_error);
}

P1Policy assignment_policy(const ReductionInstance& instance,
                           const std::vector<bool>& assignment) {
  if (instance.variant != Variant::kskr)
    throw CompileError("assignment replay needs a known-rolls instance");

  struct Commitment {
    int variable = 0;
    Turn set_true;
    Turn set_false;
  };
  std::vector<Commitment> commitments;
  int nv = 0;
  for (const GadgetEntry& entry : instance.gadgets.entries) {
    if (entry.kind != "variable") continue;
    nv = std::max(nv, entry.source_index);
    auto anchor = [&](const char* name) {
      auto it = entry.anchors.find(name);
      if (it == entry.anchors.end())
        throw CompileError("variable gadget lacks anchor '" +
                           std::string(name) + "'");
      return it->second;
    };
    int stack_true = anchor("stack_true");
    int stack_false = anchor("stack_false");
    // Only variables staged on both sides ever reach a two-way turn.
    if (instance.initial.points[static_cast<std::size_t>(stack_true)] <= 0 ||
        instance.initial.points[static_cast<std::size_t>(stack_false)] <= 0)
      continue;
    Commitment commitment;
    commitment.variable = entry.source_index;
    commitment.set_true =
        Turn{{CheckerMove{stack_true, anchor("door_true"), 2},
              CheckerMove{anchor("door_true"), anchor("landing_true"), 3}}};
    commitment.set_false =
        Turn{{CheckerMove{stack_false, anchor("door_false"), 2},
              CheckerMove{anchor("door_false"), anchor("landing_false"), 3}}};
    commitments.push_back(std::move(commitment));
  }
  if (nv < 1) throw CompileError("instance carries no variable gadgets");
  if (static_cast<int>(assignment.size()) < nv + 1)
    throw CompileError("assignment must cover variables 1.." +
                       std::to_string(nv) + " (index 0 unused)");

  return [config = instance.config, commitments,
          assignment](const Position& position, const DiceRoll& roll) -> Turn {
    std::vector<Turn> turns = legal_turns(config, position, roll);
    if (turns.size() == 1) return turns.front();
    if (turns.size() == 2) {
      for (const Commitment& commitment : commitments) {
        bool straight = turns[0] == commitment.set_true &&
                        turns[1] == commitment.set_false;
        bool flipped = turns[0] == commitment.set_false &&
                       turns[1] == commitment.set_true;
        if (straight || flipped)
          return assignment[static_cast<std::size_t>(commitment.variable)]
                     ? commitment.set_true
                     : commitment.set_false;
      }
    }
    throw ReductionIntegrityError(
        "replay reached a branching turn that is no variable commitment");
  };
}

}  // namespace bghard
