#pragma once

#include <cstddef>
#include <vector>

#include "dyncx/dnf/formula.hpp"
#include "dyncx/fdt/tree.hpp"
#include "dyncx/framework/proof.hpp"
#include "dyncx/util/budget.hpp"

namespace dyncx::fdt {

// The dDNF verifier's per-step check unrolled into one tree per proof.
// Memory is the assignment. Tree j (j < m) reads clause j's literals in
// order and ends at (1, 1, rank 1) when all hold, at (0, -1, rank -1) on
// the first failing literal. The last tree is a lone (0, 0, rank 0) leaf
// standing for the empty proof.
struct CompiledVerifier {
  FdtInstance instance;
  std::vector<Proof> tree_proofs;  // proof encoded by each tree
};

// Throws BudgetExceeded when m + 1 trees exceed `budget`.
CompiledVerifier compile_dnf_verifier_to_trees(const dnf::DnfInstance& inst,
                                               std::size_t budget = enumeration_budget());

}  // namespace dyncx::fdt
