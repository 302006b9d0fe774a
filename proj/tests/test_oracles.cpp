#include "doctest.h"

#include <map>
#include <random>

#include "bghard/oracles.hpp"

using namespace bghard;

namespace {

CnfFormula formula_of(int vars, std::vector<Clause> clauses) {
  return CnfFormula{vars, std::move(clauses)};
}

G6Instance flip_instance(int vars, std::vector<Clause> clauses,
                         std::vector<int> x_vars,
                         std::vector<int> initial_true) {
  G6Instance g;
  g.formula = formula_of(vars, std::move(clauses));
  g.in_x.assign(vars + 1, 0);
  for (int v : x_vars) g.in_x[v] = 1;
  g.initial_assignment.assign(vars + 1, 0);
  for (int v : initial_true) g.initial_assignment[v] = 1;
  return g;
}

}  // namespace

TEST_CASE("sat_brute on tiny formulas") {
  CHECK(sat_brute(formula_of(1, {{{1, true}}})));
  CHECK_FALSE(sat_brute(formula_of(1, {{{1, true}}, {{1, false}}})));
}

TEST_CASE("sat_brute agrees with direct enumeration on random formulas") {
  std::mt19937 rng(2024u);
  for (int trial = 0; trial < 60; ++trial) {
    CnfFormula f;
    f.var_count = 5;
    int clause_count = 1 + static_cast<int>(rng() % 8);
    for (int c = 0; c < clause_count; ++c) {
      Clause clause;
      int width = 1 + static_cast<int>(rng() % 3);
      for (int l = 0; l < width; ++l)
        clause.push_back({1 + static_cast<int>(rng() % 5), (rng() & 1) != 0});
      f.clauses.push_back(clause);
    }
    // Definitional re-check: every assignment, every clause, literal by
    // literal, with no shared helper.
    bool expected = false;
    for (int bits = 0; bits < 32 && !expected; ++bits) {
      bool all = true;
      for (const Clause& clause : f.clauses) {
        bool any = false;
        for (const Literal& lit : clause) {
          bool value = (bits >> (lit.variable - 1)) & 1;
          if (value == lit.positive) any = true;
        }
        if (!any) all = false;
      }
      expected = all;
    }
    CHECK(sat_brute(f) == expected);
  }
}

TEST_CASE("sat_brute guard") {
  CnfFormula big;
  big.var_count = 26;
  big.clauses = {{{1, true}}};
  CHECK_THROWS_AS(sat_brute(big), std::domain_error);
}

TEST_CASE("gpos_solve base cases") {
  // One variable: P1 moves first and sets it True.
  CHECK(gpos_solve(formula_of(1, {{{1, true}}})));
  // Two singleton clauses: P2 falsifies whichever variable P1 skipped.
  CHECK_FALSE(gpos_solve(formula_of(2, {{{1, true}}, {{2, true}}})));
  // A two-literal clause survives P2's one False.
  CHECK(gpos_solve(formula_of(2, {{{1, true}, {2, true}}})));
  // Three pairwise clauses over three variables: P1 True x_i, P2 False x_j,
  // the clause (x_i or x_k) with k unset decides the game on P1's second
  // pick.
  CHECK(gpos_solve(formula_of(3, {{{1, true}, {2, true}},
                                  {{1, true}, {3, true}},
                                  {{2, true}, {3, true}}})));
}

TEST_CASE("gpos_solve rejects negative formulas") {
  CHECK_THROWS_AS(gpos_solve(formula_of(1, {{{1, false}}})),
                  std::domain_error);
}

TEST_CASE("g6_solve immediate and unreachable wins") {
  // Formula already true at the start.
  CHECK(g6_solve(flip_instance(1, {{{1, true}}}, {}, {1})));
  // X empty and unsatisfied: P2 passes forever.
  CHECK_FALSE(g6_solve(flip_instance(1, {{{1, true}}}, {}, {})));
  // Single X variable: flip it.
  CHECK(g6_solve(flip_instance(1, {{{1, true}}}, {1}, {})));
  // P1 needs y1 which P2 never grants.
  CHECK_FALSE(g6_solve(
      flip_instance(2, {{{1, true}}, {{2, true}}}, {1}, {})));
}

namespace {

// Independent oracle: minimax to a fixed depth, formula checked at every
// node including the root.  Memoized on (assignment, mover, depth).
bool bounded_minimax(const G6Instance& g, std::uint32_t bits, bool p1_turn,
                     int depth,
                     std::map<std::tuple<std::uint32_t, bool, int>, bool>&
                         memo) {
  int n = g.formula.var_count;
  std::vector<bool> assignment(n + 1, false);
  for (int v = 1; v <= n; ++v) assignment[v] = (bits >> (v - 1)) & 1;
  if (g.formula.evaluate(assignment)) return true;
  if (depth == 0) return false;
  auto key = std::make_tuple(bits, p1_turn, depth);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<std::uint32_t> nexts{bits};  // pass
  for (int v = 1; v <= n; ++v)
    if (static_cast<bool>(g.in_x[v]) == p1_turn)
      nexts.push_back(bits ^ (1u << (v - 1)));

  bool result;
  if (p1_turn) {
    result = false;
    for (auto nb : nexts)
      if (bounded_minimax(g, nb, false, depth - 1, memo)) {
        result = true;
        break;
      }
  } else {
    result = true;
    for (auto nb : nexts)
      if (!bounded_minimax(g, nb, true, depth - 1, memo)) {
        result = false;
        break;
      }
  }
  memo[key] = result;
  return result;
}

}  // namespace

TEST_CASE("g6_solve agrees with depth-bounded minimax on random instances") {
  std::mt19937 rng(5150u);
  for (int trial = 0; trial < 40; ++trial) {
    G6Instance g;
    g.formula.var_count = 4;
    int clause_count = 1 + static_cast<int>(rng() % 4);
    for (int c = 0; c < clause_count; ++c) {
      Clause clause;
      int width = 1 + static_cast<int>(rng() % 3);
      for (int l = 0; l < width; ++l)
        clause.push_back({1 + static_cast<int>(rng() % 4), (rng() & 1) != 0});
      g.formula.clauses.push_back(clause);
    }
    g.in_x = {0, 1, 1, 0, 0};  // n_x = n_y = 2
    g.initial_assignment.assign(5, 0);
    for (int v = 1; v <= 4; ++v)
      g.initial_assignment[v] = static_cast<std::uint8_t>(rng() & 1);

    std::uint32_t bits = 0;
    for (int v = 1; v <= 4; ++v)
      if (g.initial_assignment[v]) bits |= 1u << (v - 1);
    // Depth 2^(n+1) = 32 covers every distinct (assignment, mover) state.
    std::map<std::tuple<std::uint32_t, bool, int>, bool> memo;
    bool expected = bounded_minimax(g, bits, true, 32, memo);
    CHECK(g6_solve(g) == expected);
  }
}
