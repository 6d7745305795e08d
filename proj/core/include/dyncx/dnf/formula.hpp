#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyncx/framework/update.hpp"

namespace dyncx::dnf {

struct Literal {
  std::uint32_t var = 0;
  bool positive = true;

  bool satisfied_by(bool value) const { return value == positive; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// A conjunction of literals. The empty clause is true.
using Clause = std::vector<Literal>;

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment);

// A DNF formula with its current assignment. The empty formula is false.
struct DnfInstance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<bool> assignment;

  std::size_t num_clauses() const { return clauses.size(); }
  // Largest literal count over all clauses.
  std::size_t width() const;

  // Throws VarOutOfRange for a literal past num_vars, MalformedClause for a
  // variable repeated within a clause, InvalidInstance for an assignment of
  // the wrong length.
  void validate() const;
};

// Applies a VarSet (QueryMarker is a no-op). Throws UndecodableUpdate or
// VarOutOfRange.
void apply_update(DnfInstance& inst, const Update& update);

// Full scan: true iff some clause is satisfied.
bool eval_bruteforce(const DnfInstance& inst);
std::size_t count_satisfied_bruteforce(const DnfInstance& inst);

// A DNF instance plus a total order over its clauses. order[k] is the clause
// at position k, so order[0] is the first clause.
struct FirstDnfInstance {
  DnfInstance base;
  std::vector<std::size_t> order;

  // Checks the base instance and that order is a permutation of 0..m-1.
  void validate() const;
};

// Earliest satisfied clause in order, as an index into base.clauses.
std::optional<std::size_t> first_satisfied_bruteforce(const FirstDnfInstance& inst);

}  // namespace dyncx::dnf
