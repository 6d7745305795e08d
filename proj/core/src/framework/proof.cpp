#include "dyncx/framework/proof.hpp"

#include <limits>

#include "dyncx/framework/errors.hpp"

namespace dyncx {
namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at + i]) << (8 * i);
  return v;
}

std::uint32_t narrow(std::size_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max()) throw ProofOutOfSpace("node index does not fit in a proof");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Proof::Proof(std::vector<std::uint8_t> payload) : payload_(std::move(payload)) {
  if (payload_.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw ProofOutOfSpace("proof payload exceeds the 16-bit length prefix");
  }
}

Proof Proof::from_index(std::uint32_t index) {
  std::vector<std::uint8_t> p;
  put_u32(p, index);
  return Proof(std::move(p));
}

Proof Proof::from_edge(Edge e) {
  std::vector<std::uint8_t> p;
  put_u32(p, narrow(e.u));
  put_u32(p, narrow(e.v));
  return Proof(std::move(p));
}

Proof Proof::from_edges(std::span<const Edge> edges) {
  std::vector<std::uint8_t> p;
  p.reserve(edges.size() * 8);
  for (const Edge& e : edges) {
    put_u32(p, narrow(e.u));
    put_u32(p, narrow(e.v));
  }
  return Proof(std::move(p));
}

std::optional<std::uint32_t> Proof::as_index() const {
  if (payload_.size() != 4) return std::nullopt;
  return get_u32(payload_, 0);
}

std::optional<Edge> Proof::as_edge() const {
  if (payload_.size() != 8) return std::nullopt;
  return Edge{get_u32(payload_, 0), get_u32(payload_, 4)};
}

std::optional<std::vector<Edge>> Proof::as_edges() const {
  if (payload_.size() % 8 != 0) return std::nullopt;
  std::vector<Edge> edges;
  for (std::size_t at = 0; at < payload_.size(); at += 8) {
    edges.push_back(Edge{get_u32(payload_, at), get_u32(payload_, at + 4)});
  }
  return edges;
}

std::vector<std::uint8_t> Proof::encode() const {
  std::vector<std::uint8_t> out;
  out.reserve(payload_.size() + 2);
  out.push_back(static_cast<std::uint8_t>(payload_.size() & 0xff));
  out.push_back(static_cast<std::uint8_t>(payload_.size() >> 8));
  out.insert(out.end(), payload_.begin(), payload_.end());
  return out;
}

Proof Proof::decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) throw ProofOutOfSpace("proof encoding shorter than its length prefix");
  std::size_t length = bytes[0] | (static_cast<std::size_t>(bytes[1]) << 8);
  if (bytes.size() != length + 2) throw ProofOutOfSpace("proof length prefix does not match payload");
  return Proof(std::vector<std::uint8_t>(bytes.begin() + 2, bytes.end()));
}

std::string Proof::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : encode()) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

std::string Proof::describe() const {
  if (is_none()) return "none";
  if (auto i = as_index()) return "#" + std::to_string(*i);
  if (auto edges = as_edges()) {
    auto one = [](const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; };
    if (edges->size() == 1) return one(edges->front());
    std::string s = "{";
    for (std::size_t i = 0; i < edges->size(); ++i) s += (i ? "," : "") + one((*edges)[i]);
    return s + "}";
  }
  return "0x" + hex();
}

}  // namespace dyncx
