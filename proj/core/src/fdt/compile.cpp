#include "dyncx/fdt/compile.hpp"

#include <string>

#include "dyncx/framework/errors.hpp"

namespace dyncx::fdt {

CompiledVerifier compile_dnf_verifier_to_trees(const dnf::DnfInstance& inst, std::size_t budget) {
  inst.validate();
  if (inst.clauses.size() + 1 > budget) {
    throw BudgetExceeded(std::to_string(inst.clauses.size() + 1) + " trees exceed budget " + std::to_string(budget));
  }
  CompiledVerifier out;
  out.instance.memory = inst.assignment;
  const EndNode accept{true, 1, 1};
  const EndNode reject{false, -1, -1};
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const dnf::Clause& c = inst.clauses[j];
    // node 2i reads literal i, 2i+1 is its rejecting leaf, 2w accepts
    std::vector<TreeNode> nodes;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t pass = 2 * i + 2;
      const std::size_t fail = 2 * i + 1;
      nodes.push_back(c[i].positive ? ReadNode{c[i].var, fail, pass} : ReadNode{c[i].var, pass, fail});
      nodes.push_back(reject);
    }
    nodes.push_back(accept);
    out.instance.trees.emplace_back(std::move(nodes));
    out.tree_proofs.push_back(Proof::from_index(static_cast<std::uint32_t>(j)));
  }
  out.instance.trees.push_back(DecisionTree::constant(EndNode{false, 0, 0}));
  out.tree_proofs.push_back(Proof::none());
  return out;
}

}  // namespace dyncx::fdt
