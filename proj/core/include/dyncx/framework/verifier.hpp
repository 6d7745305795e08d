#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyncx/framework/proof.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx {

// Per-step output of a verifier: the answer bit and the reward. Rewards are
// signed; invalid proofs conventionally earn -1.
struct VerifierOutput {
  bool x = false;
  std::int64_t y = 0;
  friend bool operator==(const VerifierOutput&, const VerifierOutput&) = default;
};

// A nondeterministic dynamic algorithm. `step` consumes the update (nullopt at
// preprocessing) together with a proof. Copies must be independent snapshots:
// the reward-maximizing prover simulates a step on a copy and discards it.
template <class V>
concept Verifier = std::copy_constructible<V> &&
                   requires(V& v, const V& cv, const Step& s, const Proof& p) {
                     { v.step(s, p) } -> std::same_as<VerifierOutput>;
                     { cv.proof_space(s) } -> std::same_as<std::vector<Proof>>;
                     { cv.max_proof_bytes() } -> std::convertible_to<std::size_t>;
                   };

// A deterministic dynamic algorithm: preprocessing happens in the
// constructor, `apply` processes one update and returns the new answer.
template <class A>
concept DynamicAlgorithm = requires(A& a, const A& ca, const Update& u) {
  { ca.answer() } -> std::convertible_to<bool>;
  { a.apply(u) } -> std::convertible_to<bool>;
};

}  // namespace dyncx
