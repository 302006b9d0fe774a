#include "bghard/oracles.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

namespace bghard {

bool sat_brute(const CnfFormula& formula) {
  formula.validate();
  if (formula.var_count > 25)
    throw std::domain_error("sat_brute guard: var_count must be <= 25");
  int n = formula.var_count;
  std::vector<bool> assignment(n + 1, false);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    for (int v = 1; v <= n; ++v) assignment[v] = (bits >> (v - 1)) & 1;
    if (formula.evaluate(assignment)) return true;
  }
  return false;
}

namespace {

// Minimax for the positive-CNF setting game.  State: which variables are
// already set, and which of those are True.  Unset-but-eventually-False
// variables never help a positive formula, so tracking True bits suffices.
bool gpos_minimax(const CnfFormula& formula, std::uint32_t set_mask,
                  std::uint32_t true_mask, bool p1_turn,
                  std::map<std::tuple<std::uint32_t, std::uint32_t, bool>,
                           bool>& memo) {
  int n = formula.var_count;
  std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  if (set_mask == full) {
    std::vector<bool> assignment(n + 1, false);
    for (int v = 1; v <= n; ++v) assignment[v] = (true_mask >> (v - 1)) & 1;
    return formula.evaluate(assignment);
  }
  auto key = std::make_tuple(set_mask, true_mask, p1_turn);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool result = !p1_turn;  // existential for P1, universal for P2
  for (int v = 1; v <= n; ++v) {
    std::uint32_t bit = 1u << (v - 1);
    if (set_mask & bit) continue;
    bool child = gpos_minimax(formula, set_mask | bit,
                              p1_turn ? (true_mask | bit) : true_mask,
                              !p1_turn, memo);
    if (p1_turn && child) {
      result = true;
      break;
    }
    if (!p1_turn && !child) {
      result = false;
      break;
    }
  }
  memo[key] = result;
  return result;
}

}  // namespace

bool gpos_solve(const CnfFormula& formula) {
  formula.validate();
  if (!formula.is_positive())
    throw std::domain_error("gpos_solve requires a positive formula");
  if (formula.var_count > 12)
    throw std::domain_error("gpos_solve guard: var_count must be <= 12");
  std::map<std::tuple<std::uint32_t, std::uint32_t, bool>, bool> memo;
  return gpos_minimax(formula, 0, 0, true, memo);
}

bool g6_solve(const G6Instance& instance) {
  instance.validate();
  int n = instance.formula.var_count;
  if (n > 10)
    throw std::domain_error("g6_solve guard: variable count must be <= 10");

  int state_count = 2 << n;  // assignment bits * player-to-move bit
  auto state_of = [&](std::uint32_t bits, bool p1_turn) {
    return static_cast<int>(bits << 1) | (p1_turn ? 1 : 0);
  };

  std::vector<std::uint8_t> satisfied(1u << n, 0);
  {
    std::vector<bool> assignment(n + 1, false);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      for (int v = 1; v <= n; ++v) assignment[v] = (bits >> (v - 1)) & 1;
      satisfied[bits] = instance.formula.evaluate(assignment) ? 1 : 0;
    }
  }

  // Successors: flip one own variable or pass.
  auto successors = [&](std::uint32_t bits, bool p1_turn) {
    std::vector<int> next;
    next.push_back(state_of(bits, !p1_turn));  // pass
    for (int v = 1; v <= n; ++v) {
      if (static_cast<bool>(instance.in_x[v]) != p1_turn) continue;
      next.push_back(state_of(bits ^ (1u << (v - 1)), !p1_turn));
    }
    return next;
  };

  // Least fixpoint: start from the target set (formula currently true) and
  // add Player-1 states with a winning successor and Player-2 states whose
  // successors all win, until stable.
  std::vector<std::uint8_t> winning(state_count, 0);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (satisfied[bits]) {
      winning[state_of(bits, true)] = 1;
      winning[state_of(bits, false)] = 1;
    }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      for (bool p1_turn : {true, false}) {
        int s = state_of(bits, p1_turn);
        if (winning[s]) continue;
        bool wins;
        if (p1_turn) {
          wins = false;
          for (int t : successors(bits, true))
            if (winning[t]) {
              wins = true;
              break;
            }
        } else {
          wins = true;
          for (int t : successors(bits, false))
            if (!winning[t]) {
              wins = false;
              break;
            }
        }
        if (wins) {
          winning[s] = 1;
          changed = true;
        }
      }
    }
  }

  // Closure audit: the fixpoint must be exactly self-consistent in both
  // directions, or the attractor loop is buggy.
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    for (bool p1_turn : {true, false}) {
      int s = state_of(bits, p1_turn);
      bool should_win;
      if (satisfied[bits]) {
        should_win = true;
      } else if (p1_turn) {
        should_win = false;
        for (int t : successors(bits, true))
          if (winning[t]) should_win = true;
      } else {
        should_win = true;
        for (int t : successors(bits, false))
          if (!winning[t]) should_win = false;
      }
      assert(static_cast<bool>(winning[s]) == should_win);
      if (static_cast<bool>(winning[s]) != should_win)
        throw std::logic_error("flip-game attractor failed closure audit");
    }
  }

  std::uint32_t start_bits = 0;
  for (int v = 1; v <= n; ++v)
    if (instance.initial_assignment[v]) start_bits |= 1u << (v - 1);
  return winning[state_of(start_bits, true)];
}

}  // namespace bghard
