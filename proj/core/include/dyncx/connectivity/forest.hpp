#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncx/framework/update.hpp"

namespace dyncx::conn {

// Dynamic forest as Euler tours kept in implicit treaps. Every node owns one
// element of its tree's tour and every tree edge owns two arc elements.
// Link, cut and connectivity work in expected O(log N) node visits; probes()
// counts those visits.
class DynamicForest {
 public:
  enum class LinkResult { kOk, kWouldCycle };
  enum class CutResult { kOk, kNotTreeEdge };

  explicit DynamicForest(std::size_t n = 0, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

  std::size_t num_nodes() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  LinkResult link(std::size_t u, std::size_t v);
  CutResult cut(std::size_t u, std::size_t v);
  bool connected(std::size_t u, std::size_t v) const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t component_size(std::size_t v) const;
  // Smallest node id in v's tree.
  std::size_t component_min(std::size_t v) const;
  std::size_t component_count() const { return n_ - edge_count_; }

  // Linear-time listings.
  std::vector<std::size_t> component_nodes(std::size_t v) const;
  std::vector<Edge> edges() const;  // normalized, sorted

  std::uint64_t probes() const { return probes_; }
  std::uint64_t last_op_probes() const { return last_op_probes_; }
  std::uint64_t max_op_probes() const { return max_op_probes_; }
  void reset_probe_stats() const;
  // Per-operation budget: 16 * ceil_log2(N + 2)^2.
  std::uint64_t probe_budget() const;

 private:
  static constexpr std::uint32_t kNil = 0xffffffffU;

  struct Item {
    std::uint32_t left = kNil;
    std::uint32_t right = kNil;
    std::uint32_t parent = kNil;
    std::uint64_t priority = 0;
    std::uint32_t size = 1;
    std::uint32_t min_node = kNil;  // kNil for arcs
  };

  class OpScope;

  std::uint32_t size(std::uint32_t x) const { return x == kNil ? 0 : items_[x].size; }
  std::uint32_t min_of(std::uint32_t x) const { return x == kNil ? kNil : items_[x].min_node; }
  void pull(std::uint32_t x);
  std::uint32_t root(std::uint32_t x) const;
  std::uint32_t index(std::uint32_t x) const;
  std::pair<std::uint32_t, std::uint32_t> split(std::uint32_t t, std::uint32_t k);
  std::uint32_t merge(std::uint32_t a, std::uint32_t b);
  std::uint32_t reroot(std::uint32_t v);
  std::uint32_t new_arc();
  void check_node(std::size_t v) const;
  static std::uint64_t arc_key(std::size_t u, std::size_t v) { return (std::uint64_t{u} << 32) | v; }
  std::uint64_t next_priority();

  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::uint64_t rng_state_;
  std::vector<Item> items_;
  std::vector<std::uint32_t> free_;
  std::unordered_map<std::uint64_t, std::uint32_t> arcs_;
  mutable std::uint64_t probes_ = 0;
  mutable std::uint64_t last_op_probes_ = 0;
  mutable std::uint64_t max_op_probes_ = 0;
};

}  // namespace dyncx::conn
