#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dyncx/equiv/problems.hpp"

namespace dyncx::equiv {

// Graph obtained from a 2k-uniform hypergraph: one node per k-subset of the
// hypergraph's nodes, and an edge between two k-subsets whenever their union
// is a hyperedge. A query set S maps to the k-subsets contained in S, and
// the image is independent in the graph iff S is independent in the
// hypergraph.
class LiftedGraph {
 public:
  std::size_t k() const { return k_; }
  std::size_t base_nodes() const { return base_nodes_; }
  std::size_t num_nodes() const { return subsets_.size(); }
  const std::vector<std::vector<std::size_t>>& subsets() const { return subsets_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t node_of(const std::vector<std::size_t>& sorted_subset) const;

  // Indicator of {v_T : T subset of S} for an indicator of S.
  std::vector<bool> query_set(const std::vector<bool>& in_set) const;
  // True iff no edge has both endpoints in `nodes`.
  bool independent(const std::vector<bool>& nodes) const;

 private:
  friend LiftedGraph hypergraph_lift(const HypergraphInstance&, std::size_t, std::size_t);

  std::size_t k_ = 0;
  std::size_t base_nodes_ = 0;
  std::vector<std::vector<std::size_t>> subsets_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Throws InvalidInstance unless every hyperedge has exactly 2k nodes, and
// BudgetExceeded when C(n, k) exceeds `budget`.
LiftedGraph hypergraph_lift(const HypergraphInstance& h, std::size_t k, std::size_t budget);

}  // namespace dyncx::equiv
