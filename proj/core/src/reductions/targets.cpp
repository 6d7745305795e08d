#include "dyncx/reductions/targets.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <variant>

#include <boost/property_map/property_map.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <boost/graph/strong_components.hpp>
#include <boost/pending/disjoint_sets.hpp>

#include "dyncx/framework/errors.hpp"

namespace dyncx::reductions {
namespace {

std::vector<std::vector<std::size_t>> adjacency(const TargetGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.num_nodes);
  for (const auto& [e, cap] : g.edges) {
    if (!g.on[e.first] || !g.on[e.second]) continue;
    adj[e.first].push_back(e.second);
    if (!g.directed) adj[e.second].push_back(e.first);
  }
  return adj;
}

std::vector<std::int64_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t src) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::pair<std::size_t, std::size_t> key(const TargetGraph& g, std::size_t u, std::size_t v) {
  if (!g.directed && v < u) std::swap(u, v);
  return {u, v};
}

void add_edge(TargetGraph& g, std::size_t u, std::size_t v, std::int64_t cap = 1) { g.edges[key(g, u, v)] = cap; }

}  // namespace

std::string_view target_name(TargetKind kind) {
  switch (kind) {
    case TargetKind::kMaxFlow: return "maxflow";
    case TargetKind::kSubgraphConnectivity: return "subconn";
    case TargetKind::kDiameter: return "diameter";
    case TargetKind::kStReach: return "streach";
    case TargetKind::kCountReach: return "countreach";
    case TargetKind::kCountScc: return "countscc";
  }
  return "?";
}

TargetKind parse_target(std::string_view name) {
  for (TargetKind k : {TargetKind::kMaxFlow, TargetKind::kSubgraphConnectivity, TargetKind::kDiameter,
                       TargetKind::kStReach, TargetKind::kCountReach, TargetKind::kCountScc}) {
    if (target_name(k) == name) return k;
  }
  throw Error("unknown reduction target '" + std::string(name) + "'");
}

std::string format_target_update(const TargetUpdate& u) {
  std::ostringstream out;
  switch (u.op) {
    case TargetUpdate::Op::kInsertEdge: out << "e + " << u.u << ' ' << u.v; break;
    case TargetUpdate::Op::kDeleteEdge: out << "e - " << u.u << ' ' << u.v; break;
    case TargetUpdate::Op::kNodeOn: out << "n + " << u.u; break;
    case TargetUpdate::Op::kNodeOff: out << "n - " << u.u; break;
  }
  if (u.capacity != 1) out << " cap " << u.capacity;
  return out.str();
}

Reduction::Reduction(TargetKind kind, const equiv::TransposedAllWhite& source)
    : kind_(kind), left_(source.left), right_(source.right), colors_(source.colors) {
  source.validate();
  const std::size_t base = left_ + right_;
  graph_.s = base;
  graph_.t = base + 1;
  switch (kind_) {
    case TargetKind::kMaxFlow:
      graph_.num_nodes = base + 2;
      graph_.directed = true;
      break;
    case TargetKind::kSubgraphConnectivity:
      graph_.num_nodes = base + 1;
      break;
    case TargetKind::kDiameter:
      if (left_ == 0) throw InvalidInstance("diameter reduction needs at least one left node");
      graph_.num_nodes = base + 3;
      break;
    case TargetKind::kStReach:
    case TargetKind::kCountReach:
    case TargetKind::kCountScc:
      graph_.num_nodes = base + 1;
      graph_.directed = true;
      break;
  }
  graph_.on.assign(graph_.num_nodes, true);
  const std::size_t s = graph_.s;

  for (const auto& [l, r] : source.edges) {
    if (kind_ == TargetKind::kMaxFlow) {
      add_edge(graph_, l, left_ + r);
    } else if (graph_.directed) {
      add_edge(graph_, left_ + r, l);
    } else {
      add_edge(graph_, l, left_ + r);
    }
  }

  switch (kind_) {
    case TargetKind::kMaxFlow:
      for (std::size_t l = 0; l < left_; ++l) add_edge(graph_, s, l);
      break;
    case TargetKind::kSubgraphConnectivity:
      for (std::size_t r = 0; r < right_; ++r) {
        add_edge(graph_, s, left_ + r);
        graph_.on[left_ + r] = colors_[r] == Color::kBlack;
      }
      break;
    case TargetKind::kDiameter: {
      const std::size_t hub = base + 2;
      for (std::size_t l = 0; l < left_; ++l) add_edge(graph_, s, l);
      for (std::size_t r = 0; r < right_; ++r) add_edge(graph_, hub, left_ + r);
      add_edge(graph_, hub, s);
      break;
    }
    case TargetKind::kCountScc:
      for (std::size_t l = 0; l < left_; ++l) add_edge(graph_, l, s);
      break;
    default:
      break;
  }
  if (kind_ != TargetKind::kSubgraphConnectivity) {
    for (std::size_t r = 0; r < right_; ++r) {
      if (colors_[r] == Color::kBlack) apply(black_edge(r, true));
    }
  }
}

std::size_t Reduction::black_count() const {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), Color::kBlack));
}

TargetUpdate Reduction::black_edge(std::size_t r, bool insert) const {
  TargetUpdate u;
  u.op = insert ? TargetUpdate::Op::kInsertEdge : TargetUpdate::Op::kDeleteEdge;
  const std::size_t node = left_ + r;
  switch (kind_) {
    case TargetKind::kMaxFlow:
      u.u = node;
      u.v = graph_.t;
      u.capacity = static_cast<std::int64_t>(left_);
      break;
    case TargetKind::kDiameter:
      u.u = node;
      u.v = graph_.t;
      break;
    case TargetKind::kSubgraphConnectivity:
      u.op = insert ? TargetUpdate::Op::kNodeOn : TargetUpdate::Op::kNodeOff;
      u.u = node;
      break;
    case TargetKind::kStReach:
    case TargetKind::kCountReach:
    case TargetKind::kCountScc:
      u.u = graph_.s;
      u.v = node;
      break;
  }
  return u;
}

std::vector<TargetUpdate> Reduction::translate(const Update& update) const {
  if (std::holds_alternative<QueryMarker>(update)) return {};
  const auto* c = std::get_if<ColorSet>(&update);
  if (c == nullptr) throw UndecodableUpdate("reductions accept only color updates, got '" + format_update(update) + "'");
  if (c->node >= right_) throw IndexOutOfRange("colored node " + std::to_string(c->node) + " out of range");
  if (colors_[c->node] == c->color) return {};
  // count-SCC needs both directions between s and a black node; the reverse
  // edge rides along as the same logical update.
  return {black_edge(c->node, c->color == Color::kBlack)};
}

void Reduction::apply(const TargetUpdate& update) {
  switch (update.op) {
    case TargetUpdate::Op::kInsertEdge:
      add_edge(graph_, update.u, update.v, update.capacity);
      if (kind_ == TargetKind::kCountScc) add_edge(graph_, update.v, update.u);
      break;
    case TargetUpdate::Op::kDeleteEdge:
      graph_.edges.erase(key(graph_, update.u, update.v));
      if (kind_ == TargetKind::kCountScc) graph_.edges.erase(key(graph_, update.v, update.u));
      break;
    case TargetUpdate::Op::kNodeOn: graph_.on[update.u] = true; break;
    case TargetUpdate::Op::kNodeOff: graph_.on[update.u] = false; break;
  }
}

std::vector<TargetUpdate> Reduction::step(const Update& update) {
  std::vector<TargetUpdate> out = translate(update);
  for (const auto& u : out) apply(u);
  if (const auto* c = std::get_if<ColorSet>(&update)) colors_[c->node] = c->color;
  return out;
}

std::int64_t Reduction::value() const {
  switch (kind_) {
    case TargetKind::kMaxFlow: return max_flow(graph_, graph_.s, graph_.t);
    case TargetKind::kSubgraphConnectivity: return on_subgraph_connected(graph_) ? 1 : 0;
    case TargetKind::kDiameter: return diameter(graph_);
    case TargetKind::kStReach: {
      std::vector<bool> seen = reachable_from(graph_, graph_.s);
      return std::all_of(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(left_), [](bool b) { return b; }) ? 1 : 0;
    }
    case TargetKind::kCountReach: {
      std::vector<bool> seen = reachable_from(graph_, graph_.s);
      return static_cast<std::int64_t>(std::count(seen.begin(), seen.end(), true)) - 1;
    }
    case TargetKind::kCountScc: return static_cast<std::int64_t>(count_scc(graph_));
  }
  return 0;
}

bool Reduction::decode(std::int64_t value) const {
  const auto black = static_cast<std::int64_t>(black_count());
  const auto white = static_cast<std::int64_t>(right_) - black;
  switch (kind_) {
    case TargetKind::kMaxFlow: return value != static_cast<std::int64_t>(left_);
    case TargetKind::kSubgraphConnectivity: return value == 0;
    case TargetKind::kDiameter: return value >= 4;
    case TargetKind::kStReach: return value == 0;
    case TargetKind::kCountReach: return value != static_cast<std::int64_t>(left_) + black;
    case TargetKind::kCountScc: return value != 1 + white;
  }
  return false;
}

Reduction build_maxflow(const equiv::TransposedAllWhite& aw) { return Reduction(TargetKind::kMaxFlow, aw); }
Reduction build_subgraph_connectivity(const equiv::TransposedAllWhite& aw) {
  return Reduction(TargetKind::kSubgraphConnectivity, aw);
}
Reduction build_diameter(const equiv::TransposedAllWhite& aw) { return Reduction(TargetKind::kDiameter, aw); }
Reduction build_st_reach(const equiv::TransposedAllWhite& aw) { return Reduction(TargetKind::kStReach, aw); }
Reduction build_count_reach(const equiv::TransposedAllWhite& aw) { return Reduction(TargetKind::kCountReach, aw); }
Reduction build_count_scc(const equiv::TransposedAllWhite& aw) { return Reduction(TargetKind::kCountScc, aw); }

std::int64_t max_flow(const TargetGraph& g, std::size_t s, std::size_t t) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, std::int64_t,
                      boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  Graph flow(g.num_nodes);
  auto cap = boost::get(boost::edge_capacity, flow);
  auto rev = boost::get(boost::edge_reverse, flow);
  auto link = [&](std::size_t u, std::size_t v, std::int64_t c) {
    auto e = boost::add_edge(u, v, flow).first;
    auto r = boost::add_edge(v, u, flow).first;
    cap[e] = c;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };
  for (const auto& [e, c] : g.edges) {
    if (!g.on[e.first] || !g.on[e.second]) continue;
    link(e.first, e.second, c);
    if (!g.directed) link(e.second, e.first, c);
  }
  return boost::edmonds_karp_max_flow(flow, s, t);
}

bool on_subgraph_connected(const TargetGraph& g) {
  std::vector<std::size_t> rank(g.num_nodes), parent(g.num_nodes);
  auto index = boost::identity_property_map();
  boost::disjoint_sets sets(boost::make_iterator_property_map(rank.begin(), index),
                            boost::make_iterator_property_map(parent.begin(), index));
  for (std::size_t v = 0; v < g.num_nodes; ++v) sets.make_set(v);
  for (const auto& [e, c] : g.edges) {
    if (g.on[e.first] && g.on[e.second]) sets.union_set(e.first, e.second);
  }
  std::size_t root = g.num_nodes;
  for (std::size_t v = 0; v < g.num_nodes; ++v) {
    if (!g.on[v]) continue;
    std::size_t r = sets.find_set(v);
    if (root == g.num_nodes) {
      root = r;
    } else if (r != root) {
      return false;
    }
  }
  return true;
}

std::int64_t diameter(const TargetGraph& g) {
  auto adj = adjacency(g);
  std::int64_t best = 0;
  for (std::size_t v = 0; v < g.num_nodes; ++v) {
    if (!g.on[v]) continue;
    auto dist = bfs(adj, v);
    for (std::size_t w = 0; w < g.num_nodes; ++w) {
      if (!g.on[w]) continue;
      if (dist[w] < 0) return kInfiniteDistance;
      best = std::max(best, dist[w]);
    }
  }
  return best;
}

std::vector<bool> reachable_from(const TargetGraph& g, std::size_t s) {
  auto dist = bfs(adjacency(g), s);
  std::vector<bool> seen(g.num_nodes);
  for (std::size_t v = 0; v < g.num_nodes; ++v) seen[v] = dist[v] >= 0;
  return seen;
}

std::size_t count_scc(const TargetGraph& g) {
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> graph(g.num_nodes);
  for (const auto& [e, c] : g.edges) boost::add_edge(e.first, e.second, graph);
  std::vector<int> comp(g.num_nodes);
  if (g.num_nodes == 0) return 0;
  return static_cast<std::size_t>(boost::strong_components(
      graph, boost::make_iterator_property_map(comp.begin(), boost::get(boost::vertex_index, graph))));
}

}  // namespace dyncx::reductions
