#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "dyncx/framework/update.hpp"

namespace dyncx::conn {

// Simple undirected graph on nodes 0..N-1 with edge insert/delete.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  bool contains(Edge e) const;

  // IndexOutOfRange for a node past N, InvalidEdge for a self-loop or an
  // edge already present.
  void insert(Edge e);
  // UnknownEdge when absent.
  void erase(Edge e);
  // EdgeUpdate only; QueryMarker is a no-op, anything else UndecodableUpdate.
  void apply(const Update& update);

 private:
  std::set<Edge> edges_;
  std::vector<std::set<std::size_t>> adj_;
};

// Component label per node (labels are the smallest node id of the
// component), by BFS.
std::vector<std::size_t> component_labels(const DynamicGraph& g);
std::size_t component_count(const DynamicGraph& g);
bool is_connected(const DynamicGraph& g);

//   p graph <N>
//   k <K>          optional, for k-connectivity runs
//   e <u> <v>      0-based; a bare "u v" line is an edge too
struct GraphFile {
  DynamicGraph graph;
  std::optional<std::size_t> k;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph(std::string_view text);
void write_graph(std::ostream& out, const DynamicGraph& g, std::optional<std::size_t> k = std::nullopt);

}  // namespace dyncx::conn
