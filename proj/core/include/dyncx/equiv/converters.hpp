#pragma once

#include <cstddef>
#include <vector>

#include "dyncx/dnf/formula.hpp"
#include "dyncx/equiv/problems.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx::equiv {

// How a problem's updates carry their bit: kVariable uses VarSet, kColor
// uses ColorSet with white read as 1.
enum class UpdateKind { kVariable, kColor };

// Maps one source update to target updates through an immutable index map:
// source index i becomes, for every target (j, invert) listed for i, an
// update of j to bit ^ invert. Indices mapped to nothing (pruned) produce no
// target update. QueryMarker passes through.
class UpdateTranslator {
 public:
  struct Target {
    std::size_t index;
    bool invert;
  };

  UpdateTranslator(UpdateKind source, UpdateKind target, std::vector<std::vector<Target>> map);

  std::vector<Update> operator()(const Update& update) const;
  std::size_t max_fanout() const;

 private:
  UpdateKind source_;
  UpdateKind target_;
  std::vector<std::vector<Target>> map_;
};

// A converted instance plus its update translator. When negates_answer is
// set, the target's YES corresponds to the source's NO (the dIndep side asks
// "independent?", the others ask "exists?").
template <class T>
struct Conversion {
  T instance;
  UpdateTranslator translate;
  bool negates_answer = false;
};

// Literal nodes: x_i -> left node 2i, not x_i -> left node 2i+1. One variable
// update becomes two color updates.
Conversion<AllWhiteInstance> dnf_to_aw(const dnf::DnfInstance& inst);
// Hyperedge j = neighborhood of right node j; S = white nodes.
Conversion<HypergraphInstance> aw_to_indep(const AllWhiteInstance& aw);
// Positive clause per hyperedge; x_i = [v_i in S].
Conversion<dnf::DnfInstance> indep_to_dnf(const HypergraphInstance& h);
// V = bi-adjacency matrix, u = indicator of black left nodes.
Conversion<SparseOvInstance> aw_to_ov(const AllWhiteInstance& aw);
Conversion<AllWhiteInstance> ov_to_aw(const SparseOvInstance& ov);

// Drops left nodes without neighbors (they never affect the answer) and
// keeps an index map; updates to dropped nodes translate to nothing.
Conversion<AllWhiteInstance> prune_isolated(const AllWhiteInstance& aw);

}  // namespace dyncx::equiv
