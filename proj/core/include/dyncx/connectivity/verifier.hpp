#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "dyncx/connectivity/forest.hpp"
#include "dyncx/connectivity/graph.hpp"
#include "dyncx/framework/proof.hpp"
#include "dyncx/framework/verifier.hpp"

namespace dyncx::conn {

// Connectivity verifier. Keeps the graph G and a forest F inside G.
//   preprocessing  F = greedy spanning forest of the initial G, y = 0
//   insert         link into F when that keeps F acyclic, y = 0
//   delete non-F   y = 0
//   delete F edge  cut it, then read the proof: none -> y = 0; an edge of G
//                  that F accepts -> link it, y = 1; anything else -> y = -1
// x = 1 iff F spans all N nodes in one tree.
class ConnVerifier {
 public:
  explicit ConnVerifier(DynamicGraph initial);

  VerifierOutput step(const Step& step, const Proof& proof);
  std::vector<Proof> proof_space(const Step& step) const;
  std::size_t max_proof_bytes() const { return 8; }

  const DynamicGraph& graph() const { return graph_; }
  const DynamicForest& forest() const { return forest_; }
  // Pairwise query on F.
  bool connected(std::size_t u, std::size_t v) const { return forest_.connected(u, v); }
  bool spanning() const { return forest_.edge_count() + 1 >= graph_.num_nodes(); }
  // F is a forest inside G (linear time).
  bool forest_inside_graph() const;
  // True when the step is a deletion of a current F edge.
  bool deletes_tree_edge(const Step& step) const;
  std::uint64_t last_step_probes() const { return last_step_probes_; }

 private:
  DynamicGraph graph_;
  DynamicForest forest_;
  std::uint64_t last_step_probes_ = 0;
};

// First edge of G, in sorted order, whose endpoints F (after the cut) no
// longer connects; none when there is none or the step is not a tree-edge
// deletion. This is the earliest proof with reward 1 in proof_space order.
Proof honest_conn_prover(const ConnVerifier& v, const Step& step);

}  // namespace dyncx::conn
