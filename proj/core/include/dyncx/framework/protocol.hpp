#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dyncx/framework/errors.hpp"
#include "dyncx/framework/verifier.hpp"

namespace dyncx {

// Answers of a deterministic algorithm: index 0 is the preprocessing answer,
// index t the answer after the t-th update.
template <DynamicAlgorithm A>
std::vector<bool> run_deterministic(A& algorithm, const UpdateStream& stream) {
  std::vector<bool> answers;
  answers.reserve(stream.size() + 1);
  answers.push_back(static_cast<bool>(algorithm.answer()));
  for (const Update& u : stream) answers.push_back(static_cast<bool>(algorithm.apply(u)));
  return answers;
}

struct ProofRecord {
  std::size_t step = 0;
  Step update;
  Proof proof;
  VerifierOutput output;
};

class ProofTranscript {
 public:
  void push(ProofRecord record) { records_.push_back(std::move(record)); }

  std::size_t size() const { return records_.size(); }
  const ProofRecord& operator[](std::size_t i) const { return records_[i]; }
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  std::vector<bool> answers() const;

  // JSON array of {step, update, proof_hex, x, y}; `update` is null at the
  // preprocessing step and the stream token otherwise.
  std::string to_json() const;

  friend bool operator==(const ProofTranscript& a, const ProofTranscript& b);

 private:
  std::vector<ProofRecord> records_;
};

template <class V>
using Prover = std::function<Proof(const V&, const Step&)>;

// Drives `verifier` through the preprocessing step and then every update of
// `stream`, asking `prover` for the proof of each step. The prover sees the
// verifier state before the step. Throws ProofOutOfSpace if a proof exceeds
// the verifier's declared proof size.
template <Verifier V, class P>
ProofTranscript run_protocol(V& verifier, P&& prover, const UpdateStream& stream) {
  ProofTranscript transcript;
  auto run_step = [&](std::size_t t, const Step& step) {
    Proof proof = prover(std::as_const(verifier), step);
    if (proof.size() > verifier.max_proof_bytes()) {
      throw ProofOutOfSpace("step " + std::to_string(t) + ": proof of " + std::to_string(proof.size()) +
                            " bytes exceeds the verifier's " + std::to_string(verifier.max_proof_bytes()));
    }
    VerifierOutput out = verifier.step(step, proof);
    transcript.push(ProofRecord{t, step, std::move(proof), out});
  };
  run_step(0, std::nullopt);
  for (std::size_t t = 0; t < stream.size(); ++t) run_step(t + 1, stream[t]);
  return transcript;
}

template <class V>
struct ProverChoice {
  Proof proof;
  VerifierOutput output;
  std::size_t candidates = 0;
};

// Simulates one step on a copy of the verifier for every proof in its proof
// space and keeps the reward maximizer. Ties go to the earliest proof in
// enumeration order.
template <Verifier V>
ProverChoice<V> maximize_reward(const V& verifier, const Step& step) {
  std::vector<Proof> space = verifier.proof_space(step);
  if (space.empty()) throw EmptyProofSpace("verifier published an empty proof space");
  ProverChoice<V> best;
  bool have = false;
  for (Proof& p : space) {
    V snapshot = verifier;
    VerifierOutput out = snapshot.step(step, p);
    ++best.candidates;
    if (!have || out.y > best.output.y) {
      best.proof = std::move(p);
      best.output = out;
      have = true;
    }
  }
  return best;
}

template <Verifier V>
class RewardMaximizingProver {
 public:
  Proof operator()(const V& verifier, const Step& step) const { return maximize_reward(verifier, step).proof; }
};

// Picks a uniformly random element of the published proof space.
template <Verifier V>
class RandomProofProver {
 public:
  explicit RandomProofProver(std::uint64_t seed) : rng_(seed) {}
  Proof operator()(const V& verifier, const Step& step) {
    std::vector<Proof> space = verifier.proof_space(step);
    if (space.empty()) throw EmptyProofSpace("verifier published an empty proof space");
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    return space[pick(rng_)];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dyncx
