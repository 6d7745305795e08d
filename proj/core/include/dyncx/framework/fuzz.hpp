#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dyncx/framework/protocol.hpp"

namespace dyncx {

// A verifier in its initial state, the stream to feed it, and the ground
// truth per step (truth[0] is the preprocessing answer) from a brute-force
// oracle.
template <Verifier V>
struct LabeledScenario {
  V verifier;
  UpdateStream stream;
  std::vector<bool> truth;
};

template <Verifier V>
struct NamedProver {
  std::string name;
  std::function<Proof(const V&, const Step&, std::mt19937_64&)> choose;
};

struct ProtocolViolation {
  std::size_t trial = 0;
  std::string prover;
  std::size_t step = 0;
  VerifierOutput output;
};

// Runs every prover strategy on `trials` generated scenarios. A violation is
// a step whose ground truth is NO but the verifier answered x = 1.
template <Verifier V, class Generator>
std::vector<ProtocolViolation> fuzz_soundness(Generator&& generate, const std::vector<NamedProver<V>>& provers,
                                              std::size_t trials, std::uint64_t seed) {
  std::vector<ProtocolViolation> violations;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    LabeledScenario<V> scenario = generate(rng);
    for (const NamedProver<V>& prover : provers) {
      V verifier = scenario.verifier;
      auto choose = [&](const V& v, const Step& s) { return prover.choose(v, s, rng); };
      ProofTranscript transcript = run_protocol(verifier, choose, scenario.stream);
      for (const ProofRecord& r : transcript) {
        if (r.output.x && !scenario.truth.at(r.step)) {
          violations.push_back({trial, prover.name, r.step, r.output});
        }
      }
    }
  }
  return violations;
}

// Steps where the verifier's answer differs from the ground truth.
inline std::vector<std::size_t> answer_mismatches(const ProofTranscript& transcript, const std::vector<bool>& truth) {
  std::vector<std::size_t> bad;
  for (const ProofRecord& r : transcript) {
    if (r.step >= truth.size() || r.output.x != truth[r.step]) bad.push_back(r.step);
  }
  return bad;
}

}  // namespace dyncx
