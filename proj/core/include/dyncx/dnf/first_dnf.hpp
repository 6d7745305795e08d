#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dyncx/dnf/counters.hpp"
#include "dyncx/dnf/formula.hpp"

namespace dyncx::dnf {

// A First-DNF instance rewritten as a plain DNF whose clause index equals
// its rank, with 2 * levels search variables appended after the base
// variables. Clause j carries one search literal per level spelling out the
// binary expansion of j, most significant bit first. All search variables
// start at 1, where the augmented formula agrees with the base formula.
struct AugmentedDnf {
  DnfInstance formula;
  std::size_t base_vars = 0;
  std::size_t levels = 0;
  std::vector<std::size_t> rank_to_clause;

  // Variable index of the search variable for `level` (0-based) and `bit`.
  std::size_t search_var(std::size_t level, bool bit) const {
    return base_vars + (bit ? levels : 0) + level;
  }
};

// levels = ceil(log2 m). An empty formula comes back unchanged.
AugmentedDnf augment_with_search_vars(const FirstDnfInstance& inst);

struct FirstQuery {
  std::optional<std::size_t> rank;
  // Variable assignments issued, including no-op ones. At most 5 * levels.
  std::size_t flips = 0;
};

// Finds the lowest-rank satisfied clause by killing half of the surviving
// ranks per level, then puts every search variable back to 1. Requires all
// search variables to be 1 on entry. The base variables are never touched.
FirstQuery first_dnf_query(ClauseCounters& counters, const AugmentedDnf& layout);

// fDNF answered through dDNF: counters over the augmented formula plus the
// binary search above.
class FirstDnfEvaluator {
 public:
  explicit FirstDnfEvaluator(const FirstDnfInstance& inst);

  // Sets a base variable.
  void set(std::size_t var, bool bit);
  // First satisfied clause, as an index into the original clause list.
  std::optional<std::size_t> first();

  std::size_t last_query_flips() const { return last_flips_; }
  bool search_vars_restored() const;
  const ClauseCounters& counters() const { return counters_; }
  const AugmentedDnf& layout() const { return layout_; }

 private:
  AugmentedDnf layout_;
  ClauseCounters counters_;
  std::size_t last_flips_ = 0;
};

}  // namespace dyncx::dnf
