#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyncx/dnf/formula.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx::dnf {

// Incremental dDNF evaluation. Each clause keeps the number of its literals
// currently false; a clause is satisfied iff that number is zero. Setting a
// variable touches exactly the clauses in its occurrence list.
class ClauseCounters {
 public:
  // Throws like DnfInstance::validate().
  explicit ClauseCounters(const DnfInstance& inst);

  bool answer() const { return satisfied_ > 0; }

  // Sets `var` to `bit` and returns F(assignment). Setting a variable to its
  // current value is a no-op. Throws VarOutOfRange.
  bool flip(std::size_t var, bool bit);
  bool toggle(std::size_t var);

  // VarSet and QueryMarker are understood; anything else throws
  // UndecodableUpdate.
  bool apply(const Update& update);

  std::size_t num_vars() const { return occurrences_.size(); }
  std::size_t num_clauses() const { return unsatisfied_.size(); }
  std::size_t unsatisfied_literals(std::size_t clause) const { return unsatisfied_[clause]; }
  bool clause_satisfied(std::size_t clause) const { return unsatisfied_[clause] == 0; }
  std::size_t satisfied_count() const { return satisfied_; }
  const std::vector<bool>& assignment() const { return assignment_; }
  std::size_t occurrence_count(std::size_t var) const { return occurrences_[var].size(); }

  // Cumulative number of clause counters touched by updates.
  std::uint64_t probes() const { return probes_; }

 private:
  struct Occurrence {
    std::uint32_t clause;
    bool positive;
  };

  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::uint32_t> unsatisfied_;
  std::vector<bool> assignment_;
  std::size_t satisfied_ = 0;
  std::uint64_t probes_ = 0;
};

// Baseline that rescans every clause after each update. Probes count
// literals read.
class NaiveDnfEvaluator {
 public:
  explicit NaiveDnfEvaluator(DnfInstance inst);

  bool answer() const { return answer_; }
  bool flip(std::size_t var, bool bit);
  bool apply(const Update& update);

  std::uint64_t probes() const { return probes_; }

 private:
  bool rescan();

  DnfInstance inst_;
  bool answer_ = false;
  std::uint64_t probes_ = 0;
};

}  // namespace dyncx::dnf
