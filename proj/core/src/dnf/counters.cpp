#include "dyncx/dnf/counters.hpp"

#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::dnf {
namespace {

void check_var(std::size_t var, std::size_t n) {
  if (var >= n) throw VarOutOfRange("variable " + std::to_string(var) + " out of range for " + std::to_string(n));
}

}  // namespace

ClauseCounters::ClauseCounters(const DnfInstance& inst)
    : occurrences_(inst.num_vars), unsatisfied_(inst.clauses.size(), 0), assignment_(inst.assignment) {
  inst.validate();
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    for (const Literal& l : inst.clauses[j]) {
      occurrences_[l.var].push_back({static_cast<std::uint32_t>(j), l.positive});
      if (!l.satisfied_by(assignment_[l.var])) ++unsatisfied_[j];
    }
    if (unsatisfied_[j] == 0) ++satisfied_;
  }
}

bool ClauseCounters::flip(std::size_t var, bool bit) {
  check_var(var, occurrences_.size());
  if (assignment_[var] == bit) return answer();
  assignment_[var] = bit;
  for (const Occurrence& occ : occurrences_[var]) {
    ++probes_;
    std::uint32_t& count = unsatisfied_[occ.clause];
    if (occ.positive == bit) {
      if (--count == 0) ++satisfied_;
    } else {
      if (count++ == 0) --satisfied_;
    }
  }
  return answer();
}

bool ClauseCounters::toggle(std::size_t var) {
  check_var(var, occurrences_.size());
  return flip(var, !assignment_[var]);
}

bool ClauseCounters::apply(const Update& update) {
  if (const auto* set = std::get_if<VarSet>(&update)) return flip(set->var, set->bit);
  if (std::holds_alternative<QueryMarker>(update)) return answer();
  throw UndecodableUpdate("dDNF accepts only variable updates, got '" + format_update(update) + "'");
}

NaiveDnfEvaluator::NaiveDnfEvaluator(DnfInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  answer_ = rescan();
}

bool NaiveDnfEvaluator::rescan() {
  for (const Clause& c : inst_.clauses) {
    bool ok = true;
    for (const Literal& l : c) {
      ++probes_;
      if (!l.satisfied_by(inst_.assignment[l.var])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool NaiveDnfEvaluator::flip(std::size_t var, bool bit) {
  check_var(var, inst_.num_vars);
  inst_.assignment[var] = bit;
  answer_ = rescan();
  return answer_;
}

bool NaiveDnfEvaluator::apply(const Update& update) {
  if (const auto* set = std::get_if<VarSet>(&update)) return flip(set->var, set->bit);
  if (std::holds_alternative<QueryMarker>(update)) return answer_;
  throw UndecodableUpdate("dDNF accepts only variable updates, got '" + format_update(update) + "'");
}

}  // namespace dyncx::dnf
