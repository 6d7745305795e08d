#include "dyncx/dnf/formula.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::dnf {

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment) {
  return std::all_of(clause.begin(), clause.end(),
                     [&](const Literal& l) { return l.satisfied_by(assignment[l.var]); });
}

std::size_t DnfInstance::width() const {
  std::size_t w = 0;
  for (const Clause& c : clauses) w = std::max(w, c.size());
  return w;
}

void DnfInstance::validate() const {
  if (assignment.size() != num_vars) {
    throw InvalidInstance("assignment has " + std::to_string(assignment.size()) + " bits for " +
                          std::to_string(num_vars) + " variables");
  }
  std::vector<std::size_t> seen_in(num_vars, static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    for (const Literal& l : clauses[j]) {
      if (l.var >= num_vars) {
        throw VarOutOfRange("clause " + std::to_string(j) + " uses variable " + std::to_string(l.var) +
                            " of " + std::to_string(num_vars));
      }
      if (seen_in[l.var] == j) {
        throw MalformedClause("clause " + std::to_string(j) + " repeats variable " + std::to_string(l.var));
      }
      seen_in[l.var] = j;
    }
  }
}

void apply_update(DnfInstance& inst, const Update& update) {
  if (const auto* set = std::get_if<VarSet>(&update)) {
    if (set->var >= inst.num_vars) throw VarOutOfRange("variable " + std::to_string(set->var) + " out of range");
    inst.assignment[set->var] = set->bit;
    return;
  }
  if (std::holds_alternative<QueryMarker>(update)) return;
  throw UndecodableUpdate("dDNF accepts only variable updates, got '" + format_update(update) + "'");
}

bool eval_bruteforce(const DnfInstance& inst) {
  return std::any_of(inst.clauses.begin(), inst.clauses.end(),
                     [&](const Clause& c) { return clause_satisfied(c, inst.assignment); });
}

std::size_t count_satisfied_bruteforce(const DnfInstance& inst) {
  return static_cast<std::size_t>(std::count_if(inst.clauses.begin(), inst.clauses.end(), [&](const Clause& c) {
    return clause_satisfied(c, inst.assignment);
  }));
}

void FirstDnfInstance::validate() const {
  base.validate();
  if (order.size() != base.clauses.size()) {
    throw InvalidInstance("clause order lists " + std::to_string(order.size()) + " clauses, formula has " +
                          std::to_string(base.clauses.size()));
  }
  std::vector<bool> seen(order.size(), false);
  for (std::size_t j : order) {
    if (j >= order.size() || seen[j]) throw InvalidInstance("clause order is not a permutation");
    seen[j] = true;
  }
}

std::optional<std::size_t> first_satisfied_bruteforce(const FirstDnfInstance& inst) {
  for (std::size_t j : inst.order) {
    if (clause_satisfied(inst.base.clauses[j], inst.base.assignment)) return j;
  }
  return std::nullopt;
}

}  // namespace dyncx::dnf
