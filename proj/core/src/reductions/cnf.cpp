#include "dyncx/reductions/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

#include "dyncx/framework/errors.hpp"
#include "dyncx/util/text.hpp"

namespace dyncx::reductions {

void CnfInstance::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const CnfClause& c = clauses[j];
    if (c.empty()) throw MalformedClause("clause " + std::to_string(j) + " is empty");
    std::vector<std::uint32_t> vars;
    for (const auto& lit : c) {
      if (lit.var >= num_vars) throw VarOutOfRange("variable " + std::to_string(lit.var) + " out of range");
      vars.push_back(lit.var);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw MalformedClause("clause " + std::to_string(j) + " repeats a variable");
    }
  }
}

bool cnf_clause_satisfied(const CnfClause& clause, const std::vector<bool>& assignment) {
  return std::any_of(clause.begin(), clause.end(), [&](const dnf::Literal& l) { return l.satisfied_by(assignment[l.var]); });
}

bool cnf_satisfied(const CnfInstance& cnf, const std::vector<bool>& assignment) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const CnfClause& c) { return cnf_clause_satisfied(c, assignment); });
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfInstance& cnf, std::size_t max_vars) {
  cnf.validate();
  if (cnf.num_vars > max_vars) throw BudgetExceeded("too many variables for exhaustive search");
  std::vector<bool> a(cnf.num_vars, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.num_vars); ++mask) {
    for (std::size_t i = 0; i < cnf.num_vars; ++i) a[i] = (mask >> i) & 1U;
    if (cnf_satisfied(cnf, a)) return a;
  }
  return std::nullopt;
}

CnfInstance parse_cnf(std::istream& in) {
  text::LineReader reader(in, "c");
  text::LineTokens t;
  if (!reader.next(t)) throw ParseError(reader.line_no() + 1, 1, "missing 'p cnf' header");
  if (t.token(0) != "p") t.fail(0, "expected 'p cnf <n> <m>' header");
  t.expect_size(4);
  if (t.token(1) != "cnf") t.fail(1, "expected format 'cnf'");
  CnfInstance cnf;
  cnf.num_vars = t.index(2);
  const std::size_t m = t.index(3);
  CnfClause current;
  std::vector<bool> used(cnf.num_vars, false);
  while (reader.next(t)) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::int64_t lit = t.integer(i);
      if (lit == 0) {
        if (current.empty()) t.fail(i, "empty clause");
        if (cnf.clauses.size() == m) t.fail(i, "more clauses than the header declares");
        for (const auto& l : current) used[l.var] = false;
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      auto var = static_cast<std::size_t>(std::llabs(lit));
      if (var > cnf.num_vars) t.fail(i, "variable " + std::to_string(var) + " exceeds n=" + std::to_string(cnf.num_vars));
      if (used[var - 1]) t.fail(i, "variable " + std::to_string(var) + " repeated in clause");
      used[var - 1] = true;
      current.push_back(dnf::Literal{static_cast<std::uint32_t>(var - 1), lit > 0});
    }
  }
  if (!current.empty()) throw ParseError(reader.line_no(), 1, "last clause is missing its terminating 0");
  if (cnf.clauses.size() != m) {
    throw ParseError(reader.line_no() + 1, 1,
                     "expected " + std::to_string(m) + " clauses, got " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

CnfInstance parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cnf(in);
}

void write_cnf(std::ostream& out, const CnfInstance& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c) out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    out << "0\n";
  }
}

}  // namespace dyncx::reductions
