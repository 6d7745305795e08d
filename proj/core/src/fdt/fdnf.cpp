#include "dyncx/fdt/fdnf.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace dyncx::fdt {

FdtAsDnf fdt_to_fdnf(const FdtInstance& inst) {
  inst.validate();
  FdtAsDnf out;
  dnf::DnfInstance& f = out.first.base;
  f.num_vars = inst.memory.size();
  f.assignment = inst.memory;
  std::vector<std::int64_t> ranks;

  for (std::size_t ti = 0; ti < inst.trees.size(); ++ti) {
    const DecisionTree& tree = inst.trees[ti];
    std::vector<std::pair<std::size_t, dnf::Clause>> stack{{0, {}}};
    while (!stack.empty()) {
      auto [id, clause] = std::move(stack.back());
      stack.pop_back();
      const TreeNode& n = tree.node(id);
      if (const auto* r = std::get_if<ReadNode>(&n)) {
        dnf::Clause right = clause;
        right.push_back({static_cast<std::uint32_t>(r->index), true});
        clause.push_back({static_cast<std::uint32_t>(r->index), false});
        stack.emplace_back(r->right, std::move(right));
        stack.emplace_back(r->left, std::move(clause));
      } else if (const auto* w = std::get_if<WriteNode>(&n)) {
        stack.emplace_back(w->child, std::move(clause));
      } else {
        f.clauses.push_back(std::move(clause));
        out.clause_tree.push_back(ti);
        out.clause_leaf.push_back(id);
        ranks.push_back(std::get<EndNode>(n).rank);
      }
    }
  }

  std::vector<std::size_t>& order = out.first.order;
  order.resize(f.clauses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // clause index already follows (tree, path order)
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ranks[a] > ranks[b]; });
  return out;
}

}  // namespace dyncx::fdt
