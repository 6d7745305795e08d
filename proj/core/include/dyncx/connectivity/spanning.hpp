#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "dyncx/connectivity/forest.hpp"
#include "dyncx/connectivity/graph.hpp"
#include "dyncx/connectivity/oracle.hpp"

namespace dyncx::conn {

class SpanningForestProtocol;

using OracleFactory = std::function<std::unique_ptr<ConnectivityOracle>(DynamicGraph)>;
// Called after the deleted tree edge has been cut from F.
using ReplacementProver = std::function<std::optional<Edge>(const SpanningForestProtocol&, Edge deleted)>;

struct ForestStep {
  std::size_t step = 0;
  Step update;
  bool tree_edge_deleted = false;
  bool oracle_connected = false;  // answer for G' without the deleted edge
  std::optional<Edge> replacement;
  bool replacement_valid = false;
  // The protocol claims F is a spanning forest of G. Cleared for good once
  // a replacement fails verification.
  bool vouched = true;
};

// Maintains a spanning forest F of G using only a connectivity subroutine
// and prover-supplied replacement edges. The subroutine runs on G', which is
// G plus a super node s = N joined to one representative per tree of F (the
// smallest node id of that tree), so G' is always connected and G' - e is
// connected iff the deleted tree edge e has a replacement.
class SpanningForestProtocol {
 public:
  SpanningForestProtocol(DynamicGraph initial, const OracleFactory& make_oracle);

  ForestStep step(const Update& update, const ReplacementProver& prover);

  const DynamicGraph& graph() const { return graph_; }
  const DynamicForest& forest() const { return forest_; }
  const std::set<std::size_t>& representatives() const { return reps_; }
  std::size_t super_node() const { return graph_.num_nodes(); }
  const ConnectivityOracle& oracle() const { return *oracle_; }
  bool in_sync() const { return in_sync_; }
  std::size_t steps() const { return steps_; }

  // A valid replacement for `deleted` against the current (cut) forest.
  bool is_replacement(Edge f, Edge deleted) const;

 private:
  DynamicGraph graph_;
  DynamicForest forest_;
  std::set<std::size_t> reps_;
  std::unique_ptr<ConnectivityOracle> oracle_;
  bool in_sync_ = true;
  std::size_t steps_ = 0;
};

// First edge of G in sorted order that reconnects the two sides.
std::optional<Edge> honest_replacement(const SpanningForestProtocol& p, Edge deleted);

// F inside G, acyclic by construction, and with as many trees as G has
// components.
bool is_spanning_forest_of(const DynamicForest& f, const DynamicGraph& g);

}  // namespace dyncx::conn
