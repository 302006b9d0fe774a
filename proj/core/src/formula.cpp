#include "bghard/formula.hpp"

namespace bghard {

void CnfFormula::validate() const {
  if (var_count < 1) throw std::domain_error("formula needs a variable");
  for (const Clause& clause : clauses) {
    if (clause.empty()) throw std::domain_error("empty clause");
    for (const Literal& lit : clause)
      if (lit.variable < 1 || lit.variable > var_count)
        throw std::domain_error("literal index out of range");
  }
}

bool CnfFormula::is_three_cnf() const {
  for (const Clause& clause : clauses)
    if (clause.size() > 3) return false;
  return true;
}

bool CnfFormula::is_positive() const {
  for (const Clause& clause : clauses)
    for (const Literal& lit : clause)
      if (!lit.positive) return false;
  return true;
}

bool CnfFormula::clause_satisfied(const Clause& clause,
                                  const std::vector<bool>& assignment) const {
  for (const Literal& lit : clause)
    if (assignment[lit.variable] == lit.positive) return true;
  return false;
}

bool CnfFormula::evaluate(const std::vector<bool>& assignment) const {
  for (const Clause& clause : clauses)
    if (!clause_satisfied(clause, assignment)) return false;
  return true;
}

void G6Instance::validate() const {
  formula.validate();
  if (static_cast<int>(in_x.size()) != formula.var_count + 1)
    throw std::domain_error("X/Y partition has wrong length");
  if (static_cast<int>(initial_assignment.size()) != formula.var_count + 1)
    throw std::domain_error("initial assignment has wrong length");
}

int G6Instance::x_count() const {
  int count = 0;
  for (int v = 1; v <= formula.var_count; ++v)
    if (in_x[v]) ++count;
  return count;
}

int G6Instance::y_count() const { return formula.var_count - x_count(); }

}  // namespace bghard
