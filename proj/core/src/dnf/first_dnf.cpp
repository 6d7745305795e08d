#include "dyncx/dnf/first_dnf.hpp"

#include <cassert>
#include <string>

#include "dyncx/framework/errors.hpp"
#include "dyncx/util/budget.hpp"

namespace dyncx::dnf {

AugmentedDnf augment_with_search_vars(const FirstDnfInstance& inst) {
  inst.validate();
  AugmentedDnf out;
  const std::size_t m = inst.base.clauses.size();
  out.base_vars = inst.base.num_vars;
  out.levels = ceil_log2(m);
  out.rank_to_clause = inst.order;

  out.formula.num_vars = out.base_vars + 2 * out.levels;
  out.formula.assignment = inst.base.assignment;
  out.formula.assignment.resize(out.formula.num_vars, true);
  out.formula.clauses.reserve(m);
  for (std::size_t rank = 0; rank < m; ++rank) {
    Clause c = inst.base.clauses[inst.order[rank]];
    for (std::size_t level = 0; level < out.levels; ++level) {
      bool bit = (rank >> (out.levels - 1 - level)) & 1U;
      c.push_back(Literal{static_cast<std::uint32_t>(out.search_var(level, bit)), true});
    }
    out.formula.clauses.push_back(std::move(c));
  }
  return out;
}

FirstQuery first_dnf_query(ClauseCounters& counters, const AugmentedDnf& layout) {
  FirstQuery q;
  if (!counters.answer()) return q;
  auto set = [&](std::size_t var, bool bit) {
    counters.flip(var, bit);
    ++q.flips;
  };
  std::size_t rank = 0;
  for (std::size_t level = 0; level < layout.levels; ++level) {
    const std::size_t s0 = layout.search_var(level, false);
    const std::size_t s1 = layout.search_var(level, true);
    assert(counters.assignment()[s0] && counters.assignment()[s1]);
    set(s1, false);
    if (!counters.answer()) {
      // Nothing survives with this bit at 0: keep the upper half instead.
      set(s0, false);
      set(s1, true);
      rank = 2 * rank + 1;
    } else {
      set(s0, true);
      set(s1, false);
      rank = 2 * rank;
    }
  }
  assert(counters.answer());
  q.rank = rank;
  for (std::size_t level = 0; level < layout.levels; ++level) {
    set(layout.search_var(level, false), true);
    set(layout.search_var(level, true), true);
  }
  return q;
}

FirstDnfEvaluator::FirstDnfEvaluator(const FirstDnfInstance& inst)
    : layout_(augment_with_search_vars(inst)), counters_(layout_.formula) {}

void FirstDnfEvaluator::set(std::size_t var, bool bit) {
  if (var >= layout_.base_vars) {
    throw VarOutOfRange("variable " + std::to_string(var) + " out of range for " + std::to_string(layout_.base_vars));
  }
  counters_.flip(var, bit);
}

std::optional<std::size_t> FirstDnfEvaluator::first() {
  FirstQuery q = first_dnf_query(counters_, layout_);
  last_flips_ = q.flips;
  if (!q.rank) return std::nullopt;
  return layout_.rank_to_clause[*q.rank];
}

bool FirstDnfEvaluator::search_vars_restored() const {
  for (std::size_t v = layout_.base_vars; v < layout_.formula.num_vars; ++v) {
    if (!counters_.assignment()[v]) return false;
  }
  return true;
}

}  // namespace dyncx::dnf
