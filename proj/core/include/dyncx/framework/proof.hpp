#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dyncx/framework/update.hpp"

namespace dyncx {

// A proof handed to a verifier at one step.
//
// The payload is an opaque byte string; the empty payload is the "no proof"
// symbol. On the wire a proof is length-prefixed: a 16-bit little-endian
// payload length followed by the payload. Verifiers interpret payloads as
//   - a clause / tree index: 4 bytes, little-endian u32;
//   - an edge: two little-endian u32 endpoints (8 bytes);
//   - an edge set: a concatenation of edges.
// Anything else is an invalid proof for that verifier, never an exception.
class Proof {
 public:
  Proof() = default;
  explicit Proof(std::vector<std::uint8_t> payload);

  static Proof none() { return Proof(); }
  static Proof from_index(std::uint32_t index);
  static Proof from_edge(Edge e);
  static Proof from_edges(std::span<const Edge> edges);

  bool is_none() const { return payload_.empty(); }
  std::size_t size() const { return payload_.size(); }
  std::span<const std::uint8_t> payload() const { return payload_; }

  std::optional<std::uint32_t> as_index() const;
  std::optional<Edge> as_edge() const;
  std::optional<std::vector<Edge>> as_edges() const;

  std::vector<std::uint8_t> encode() const;
  // Throws ProofOutOfSpace on a truncated or inconsistent encoding.
  static Proof decode(std::span<const std::uint8_t> bytes);

  // Hex of encode().
  std::string hex() const;
  // Short human-readable form: "none", "#3", "(0,2)", "{(0,1),(2,3)}".
  std::string describe() const;

  friend auto operator<=>(const Proof&, const Proof&) = default;

 private:
  std::vector<std::uint8_t> payload_;
};

}  // namespace dyncx
