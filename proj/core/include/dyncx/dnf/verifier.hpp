#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dyncx/dnf/formula.hpp"
#include "dyncx/framework/verifier.hpp"

namespace dyncx::dnf {

// dNP verifier for dDNF. A proof is a clause index j; the verifier reads
// only the literals of C_j.
//   j satisfied      -> (x=1, y= 1)
//   j unsatisfied    -> (x=0, y=-1)  (also for out-of-range or malformed j)
//   no proof         -> (x=0, y= 0)
// The formula is shared between copies, so snapshots copy only the
// assignment.
class DnfVerifier {
 public:
  explicit DnfVerifier(const DnfInstance& inst);

  // Applies the update first, then checks the proof.
  VerifierOutput step(const Step& step, const Proof& proof);

  // No proof first, then every clause index in increasing order.
  std::vector<Proof> proof_space(const Step& step) const;
  std::size_t max_proof_bytes() const { return 4; }

  const std::vector<bool>& assignment() const { return assignment_; }
  std::size_t num_clauses() const { return clauses_->size(); }
  // Memory probes (assignment bits read or written) during the last step.
  std::uint64_t last_step_probes() const { return last_probes_; }

 private:
  std::shared_ptr<const std::vector<Clause>> clauses_;
  std::vector<bool> assignment_;
  std::uint64_t last_probes_ = 0;
};

}  // namespace dyncx::dnf
