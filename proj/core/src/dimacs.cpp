#include "bghard/dimacs.hpp"

#include <sstream>

namespace bghard {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct RawFile {
  CnfFormula formula;
  std::vector<int> x_vars;
  std::vector<int> y_vars;
  std::vector<std::pair<int, int>> init_values;  // (variable, 0/1)
  bool has_extensions = false;
};

std::vector<int> parse_var_list(const std::string& rest, int line_no) {
  std::istringstream in(rest);
  std::vector<int> vars;
  int v;
  while (in >> v) {
    if (v < 1) throw ParseError(line_no, "variable index must be positive");
    vars.push_back(v);
  }
  std::string trailing;
  if (in.clear(), in >> trailing)
    throw ParseError(line_no, "unexpected token '" + trailing + "'");
  return vars;
}

RawFile parse_raw(const std::string& text) {
  RawFile raw;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool seen_header = false;
  int declared_clauses = 0;
  Clause pending;
  bool clause_open = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line

    if (first == "c") {
      std::string tag;
      if (!(ls >> tag)) continue;  // plain comment
      std::string rest;
      std::getline(ls, rest);
      if (tag == "x") {
        raw.has_extensions = true;
        for (int v : parse_var_list(rest, line_no)) raw.x_vars.push_back(v);
      } else if (tag == "y") {
        raw.has_extensions = true;
        for (int v : parse_var_list(rest, line_no)) raw.y_vars.push_back(v);
      } else if (tag == "init") {
        raw.has_extensions = true;
        std::istringstream rs(rest);
        std::string item;
        while (rs >> item) {
          auto eq = item.find('=');
          if (eq == std::string::npos)
            throw ParseError(line_no, "expected <var>=<0|1>, got '" + item + "'");
          int variable = 0, value = -1;
          try {
            variable = std::stoi(item.substr(0, eq));
            value = std::stoi(item.substr(eq + 1));
          } catch (const std::exception&) {
            throw ParseError(line_no, "malformed init entry '" + item + "'");
          }
          if (variable < 1)
            throw ParseError(line_no, "variable index must be positive");
          if (value != 0 && value != 1)
            throw ParseError(line_no, "init value must be 0 or 1");
          raw.init_values.emplace_back(variable, value);
        }
      }
      continue;  // other "c" lines are plain comments
    }

    if (first == "p") {
      if (seen_header) throw ParseError(line_no, "duplicate header");
      std::string kind;
      if (!(ls >> kind) || kind != "cnf")
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      if (!(ls >> raw.formula.var_count >> declared_clauses))
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      if (raw.formula.var_count < 1)
        throw ParseError(line_no, "variable count must be positive");
      if (declared_clauses < 0)
        throw ParseError(line_no, "clause count must be non-negative");
      seen_header = true;
      continue;
    }

    if (!seen_header)
      throw ParseError(line_no, "clause data before 'p cnf' header");

    // Clause line: integers, each clause terminated by 0.
    std::istringstream cs(line);
    int token;
    if (!(cs >> token))
      throw ParseError(line_no, "malformed clause line");
    for (;;) {
      if (token == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        raw.formula.clauses.push_back(pending);
        pending.clear();
        clause_open = false;
      } else {
        int variable = token > 0 ? token : -token;
        if (variable > raw.formula.var_count)
          throw ParseError(line_no, "literal index exceeds variable count");
        pending.push_back({variable, token > 0});
        clause_open = true;
      }
      if (!(cs >> token)) {
        if (cs.eof()) break;
        throw ParseError(line_no, "malformed clause token");
      }
    }
  }

  if (clause_open) throw ParseError(line_no, "unterminated clause");
  if (!seen_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (static_cast<int>(raw.formula.clauses.size()) != declared_clauses)
    throw ParseError(line_no, "clause count differs from header");
  raw.formula.validate();
  return raw;
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  return parse_raw(text).formula;
}

std::variant<CnfFormula, G6Instance> parse_game_file(const std::string& text) {
  RawFile raw = parse_raw(text);
  if (!raw.has_extensions) {
    if (!raw.formula.is_positive())
      throw ParseError(0, "positive-CNF game file contains a negative literal");
    return raw.formula;
  }

  G6Instance instance;
  instance.formula = raw.formula;
  int n = raw.formula.var_count;
  instance.in_x.assign(n + 1, 0);
  instance.initial_assignment.assign(n + 1, 0);
  std::vector<std::uint8_t> side_known(n + 1, 0), init_known(n + 1, 0);

  for (int v : raw.x_vars) {
    if (v > n) throw ParseError(0, "X variable exceeds variable count");
    if (side_known[v]) throw ParseError(0, "variable declared twice in X/Y");
    side_known[v] = 1;
    instance.in_x[v] = 1;
  }
  for (int v : raw.y_vars) {
    if (v > n) throw ParseError(0, "Y variable exceeds variable count");
    if (side_known[v]) throw ParseError(0, "variable declared twice in X/Y");
    side_known[v] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!side_known[v])
      throw ParseError(0, "variable " + std::to_string(v) +
                              " missing from the X/Y partition");

  for (auto [v, value] : raw.init_values) {
    if (v > n) throw ParseError(0, "init variable exceeds variable count");
    if (init_known[v]) throw ParseError(0, "duplicate init value");
    init_known[v] = 1;
    instance.initial_assignment[v] = static_cast<std::uint8_t>(value);
  }
  for (int v = 1; v <= n; ++v)
    if (!init_known[v])
      throw ParseError(0, "variable " + std::to_string(v) +
                              " missing an initial value");

  instance.validate();
  return instance;
}

std::string emit_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.var_count << ' ' << formula.clauses.size()
      << '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause)
      out << (lit.positive ? lit.variable : -lit.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string emit_game_file(const G6Instance& instance) {
  std::ostringstream out;
  int n = instance.formula.var_count;
  out << "c x";
  for (int v = 1; v <= n; ++v)
    if (instance.in_x[v]) out << ' ' << v;
  out << "\nc y";
  for (int v = 1; v <= n; ++v)
    if (!instance.in_x[v]) out << ' ' << v;
  out << "\nc init";
  for (int v = 1; v <= n; ++v)
    out << ' ' << v << '=' << static_cast<int>(instance.initial_assignment[v]);
  out << '\n' << emit_dimacs(instance.formula);
  return out.str();
}

}  // namespace bghard
