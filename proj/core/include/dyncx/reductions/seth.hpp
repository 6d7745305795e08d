#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "dyncx/equiv/problems.hpp"
#include "dyncx/reductions/cnf.hpp"
#include "dyncx/util/budget.hpp"

namespace dyncx::reductions {

// Dynamic all-white on the transposed orientation (right side colored),
// counting black neighbors per left node. A color flip costs the degree of
// the flipped node.
class AllWhiteCounters {
 public:
  explicit AllWhiteCounters(const equiv::TransposedAllWhite& aw);

  bool apply(const Update& update);
  bool answer() const { return !zero_.empty(); }
  std::optional<std::size_t> witness() const;
  std::size_t operations() const { return operations_; }

 private:
  std::vector<std::vector<std::size_t>> right_adj_;
  std::vector<Color> colors_;
  std::vector<std::size_t> black_;
  std::set<std::size_t> zero_;
  std::size_t operations_ = 0;
};

// Full rescan on every query.
class AllWhiteRescan {
 public:
  explicit AllWhiteRescan(const equiv::TransposedAllWhite& aw) : aw_(aw) {}
  bool apply(const Update& update);
  bool answer() const { return equiv::all_white_bruteforce(aw_); }

 private:
  equiv::TransposedAllWhite aw_;
};

// Splits the variables into halves X1 (low indices) and X2 (high indices,
// plus a dummy when n is odd). Left nodes are the partial assignments of X1
// (bit i of the node id is variable i), right nodes are clauses, and an
// edge joins u1 to c when u1 satisfies none of c's literals. Phases walk
// the assignments of X2 in Gray-code order; a clause is white while the
// current X2 assignment satisfies it.
class SethDriver {
 public:
  SethDriver(const CnfInstance& cnf, std::size_t budget = enumeration_budget());

  const equiv::TransposedAllWhite& instance() const { return aw_; }
  std::size_t half() const { return half_; }
  std::size_t phase_count() const { return std::size_t{1} << half_; }
  std::size_t phase() const { return phase_; }

  // Moves to the next phase and returns the color updates that take the
  // instance there (clauses whose status changed).
  std::vector<Update> advance();
  // Left node with an all-white neighborhood under the current colors.
  std::optional<std::size_t> witness_node() const;
  // Full assignment (original variables only) for left node u1 and the
  // current phase.
  std::vector<bool> assignment(std::size_t u1) const;

 private:
  CnfInstance cnf_;
  std::size_t half_ = 0;
  std::size_t phase_ = 0;
  std::uint64_t gray_ = 0;
  equiv::TransposedAllWhite aw_;
  std::vector<std::size_t> satisfied_x2_;               // per clause
  std::vector<std::vector<std::pair<std::size_t, bool>>> occurrences_;  // X2 var -> (clause, positive)
};

struct SatResult {
  bool satisfiable = false;
  std::size_t phases = 0;
  std::size_t color_updates = 0;
  std::size_t queries = 0;
  std::size_t max_phase_updates = 0;
  std::optional<std::vector<bool>> witness;
};

// Drives a dynamic all-white solver through the phases. Stops at the first
// YES. Solver needs a constructor from TransposedAllWhite, apply(Update)
// and answer().
template <class Solver = AllWhiteCounters>
SatResult sat_via_allwhite(const CnfInstance& cnf, std::size_t budget = enumeration_budget()) {
  SethDriver driver(cnf, budget);
  Solver solver(driver.instance());
  SatResult result;
  for (std::size_t p = 0; p < driver.phase_count(); ++p) {
    if (p > 0) {
      std::vector<Update> updates = driver.advance();
      for (const Update& u : updates) solver.apply(u);
      result.color_updates += updates.size();
      result.max_phase_updates = std::max(result.max_phase_updates, updates.size());
    }
    ++result.phases;
    ++result.queries;
    if (solver.answer()) {
      result.satisfiable = true;
      if (auto node = driver.witness_node()) result.witness = driver.assignment(*node);
      return result;
    }
  }
  return result;
}

}  // namespace dyncx::reductions
