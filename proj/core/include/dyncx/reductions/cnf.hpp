#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dyncx/dnf/formula.hpp"

namespace dyncx::reductions {

// A disjunction of literals; must be nonempty.
using CnfClause = std::vector<dnf::Literal>;

struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<CnfClause> clauses;

  // Throws MalformedClause for an empty clause or a repeated variable,
  // VarOutOfRange for a variable past num_vars.
  void validate() const;
};

bool cnf_clause_satisfied(const CnfClause& clause, const std::vector<bool>& assignment);
bool cnf_satisfied(const CnfInstance& cnf, const std::vector<bool>& assignment);

// Exhaustive search; returns the first satisfying assignment in counting
// order (variable 0 least significant). Throws BudgetExceeded past
// 2^max_vars assignments.
std::optional<std::vector<bool>> sat_bruteforce(const CnfInstance& cnf, std::size_t max_vars = 24);

// DIMACS `p cnf <n> <m>`, clauses of signed 1-based variables terminated by
// 0 (a clause may span lines), 'c' comments.
CnfInstance parse_cnf(std::istream& in);
CnfInstance parse_cnf(std::string_view text);
void write_cnf(std::ostream& out, const CnfInstance& cnf);

}  // namespace dyncx::reductions
