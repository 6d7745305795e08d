#include "dyncx/connectivity/oracle.hpp"

namespace dyncx::conn {

VerifierBackedConnectivity::VerifierBackedConnectivity(DynamicGraph g) : verifier_(std::move(g)) {
  x_ = verifier_.step(std::nullopt, Proof::none()).x;
}

void VerifierBackedConnectivity::feed(const Update& u) {
  Step step = u;
  Proof proof = honest_conn_prover(verifier_, step);
  x_ = verifier_.step(step, proof).x;
}

}  // namespace dyncx::conn
