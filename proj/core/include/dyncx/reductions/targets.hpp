#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyncx/equiv/problems.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx::reductions {

enum class TargetKind { kMaxFlow, kSubgraphConnectivity, kDiameter, kStReach, kCountReach, kCountScc };

std::string_view target_name(TargetKind kind);
// Accepts maxflow, subconn, diameter, streach, countreach, countscc.
TargetKind parse_target(std::string_view name);

// Shared target representation. Undirected graphs store each edge once
// with u < v. `on` is all true except for the node-subgraph target.
struct TargetGraph {
  std::size_t num_nodes = 0;
  bool directed = false;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> edges;  // capacity, 1 when unused
  std::vector<bool> on;
  std::size_t s = 0;
  std::size_t t = 0;  // max-flow sink and diameter's black hub
};

struct TargetUpdate {
  enum class Op { kInsertEdge, kDeleteEdge, kNodeOn, kNodeOff };
  Op op = Op::kInsertEdge;
  std::size_t u = 0;
  std::size_t v = 0;  // unused for node toggles
  std::int64_t capacity = 1;

  friend bool operator==(const TargetUpdate&, const TargetUpdate&) = default;
};

std::string format_target_update(const TargetUpdate& u);

inline constexpr std::int64_t kInfiniteDistance = std::numeric_limits<std::int64_t>::max();

// A target instance built from a transposed all-white instance (left side
// queried, right side colored). Node ids: left l -> l, right r -> |L| + r,
// then s, then t (max-flow, diameter), then the diameter hub.
//
// value() runs the brute-force target solver:
//   maxflow     max s-t flow                 YES iff value != |L|
//   subconn     1 if the on-nodes induce a connected graph, else 0   YES iff 0
//   diameter    diameter, kInfiniteDistance when disconnected        YES iff >= 4
//   streach     1 if s reaches every left node, else 0              YES iff 0
//   countreach  nodes reachable from s, s excluded                  YES iff != |L| + #black
//   countscc    number of strongly connected components             YES iff != 1 + #white
class Reduction {
 public:
  Reduction(TargetKind kind, const equiv::TransposedAllWhite& source);

  TargetKind kind() const { return kind_; }
  const TargetGraph& graph() const { return graph_; }
  const std::vector<Color>& colors() const { return colors_; }
  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  std::size_t black_count() const;

  // Target updates for a color update against the current colors: one for
  // an actual flip, none for a repeated color or a query marker.
  std::vector<TargetUpdate> translate(const Update& update) const;
  void apply(const TargetUpdate& update);
  // translate + apply + color bookkeeping.
  std::vector<TargetUpdate> step(const Update& update);

  std::int64_t value() const;
  bool decode(std::int64_t value) const;
  bool answer() const { return decode(value()); }

 private:
  TargetUpdate black_edge(std::size_t r, bool insert) const;

  TargetKind kind_;
  std::size_t left_;
  std::size_t right_;
  std::vector<Color> colors_;
  TargetGraph graph_;
};

Reduction build_maxflow(const equiv::TransposedAllWhite& aw);
Reduction build_subgraph_connectivity(const equiv::TransposedAllWhite& aw);
// The graph also gets a hub node adjacent to s and every right node, which
// keeps distances among non-witness pairs at most 3. Requires |L| >= 1.
Reduction build_diameter(const equiv::TransposedAllWhite& aw);
Reduction build_st_reach(const equiv::TransposedAllWhite& aw);
Reduction build_count_reach(const equiv::TransposedAllWhite& aw);
Reduction build_count_scc(const equiv::TransposedAllWhite& aw);

// Brute-force solvers on a TargetGraph.
std::int64_t max_flow(const TargetGraph& g, std::size_t s, std::size_t t);
bool on_subgraph_connected(const TargetGraph& g);
std::int64_t diameter(const TargetGraph& g);
std::vector<bool> reachable_from(const TargetGraph& g, std::size_t s);
std::size_t count_scc(const TargetGraph& g);

}  // namespace dyncx::reductions
