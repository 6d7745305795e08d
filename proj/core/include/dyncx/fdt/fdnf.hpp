#pragma once

#include <cstddef>
#include <vector>

#include "dyncx/dnf/formula.hpp"
#include "dyncx/fdt/tree.hpp"

namespace dyncx::fdt {

// One clause per root-to-leaf path: a negative literal for each left turn
// at a read node, a positive one for each right turn. Clauses are listed
// tree by tree in left-first path order; `first.order` ranks them by
// descending leaf rank, then tree index, then path order.
struct FdtAsDnf {
  dnf::FirstDnfInstance first;
  std::vector<std::size_t> clause_tree;  // per clause
  std::vector<std::size_t> clause_leaf;  // leaf node id per clause
};

// Throws NotNormalized.
FdtAsDnf fdt_to_fdnf(const FdtInstance& inst);

}  // namespace dyncx::fdt
