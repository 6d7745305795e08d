#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "dyncx/connectivity/graph.hpp"
#include "dyncx/connectivity/oracle.hpp"
#include "dyncx/framework/proof.hpp"
#include "dyncx/framework/verifier.hpp"
#include "dyncx/util/budget.hpp"

namespace dyncx::conn {

// Verifier for "G is less than k edge-connected". The proof is an edge set
// S with |S| <= k - 1 (none means S empty). The verifier deletes S from its
// connectivity subroutine, asks whether the rest is connected and puts S
// back: disconnected -> (1, 1), connected -> (0, 0). A malformed, oversized
// or foreign S -> (0, -1).
class KConnVerifier {
 public:
  KConnVerifier(DynamicGraph initial, std::size_t k, std::size_t max_k = 16);
  KConnVerifier(const KConnVerifier& other);
  KConnVerifier& operator=(const KConnVerifier& other);
  KConnVerifier(KConnVerifier&&) noexcept = default;
  KConnVerifier& operator=(KConnVerifier&&) noexcept = default;

  VerifierOutput step(const Step& step, const Proof& proof);
  // Every subset of the post-update edge set with at most k - 1 edges,
  // smallest first, lexicographic within a size. Throws BudgetExceeded past
  // `budget` subsets.
  std::vector<Proof> proof_space(const Step& step) const;
  std::size_t max_proof_bytes() const { return 8 * max_k_; }

  std::size_t k() const { return k_; }
  const DynamicGraph& graph() const { return graph_; }
  // Subroutine calls spent checking the last proof (graph maintenance
  // excluded).
  std::size_t last_check_calls() const { return last_check_calls_; }
  std::size_t oracle_calls() const { return oracle_->calls(); }
  void set_budget(std::size_t budget) { budget_ = budget; }

 private:
  DynamicGraph graph_;
  std::unique_ptr<ConnectivityOracle> oracle_;
  std::size_t k_;
  std::size_t max_k_;
  std::size_t last_check_calls_ = 0;
  std::size_t budget_ = enumeration_budget();
};

struct MinCut {
  std::size_t value = std::numeric_limits<std::size_t>::max();  // max() when N < 2
  std::vector<Edge> witness;                                     // sorted
};

// Global minimum edge cut via unit-capacity max-flow from node 0 to every
// other node. Throws BudgetExceeded when N exceeds max_nodes.
MinCut mincut_bruteforce(const DynamicGraph& g, std::size_t max_nodes = 4096);

// Honest prover: a minimum cut when it is smaller than k, else none.
Proof honest_kconn_prover(const KConnVerifier& v, const Step& step);

}  // namespace dyncx::conn
