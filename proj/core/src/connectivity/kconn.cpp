#include "dyncx/connectivity/kconn.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <variant>

#include <boost/property_map/property_map.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "dyncx/framework/errors.hpp"

namespace dyncx::conn {

KConnVerifier::KConnVerifier(DynamicGraph initial, std::size_t k, std::size_t max_k)
    : graph_(std::move(initial)), k_(k), max_k_(max_k) {
  if (k_ == 0) throw InvalidInstance("k must be at least 1");
  if (k_ > max_k_) throw InvalidInstance("k=" + std::to_string(k_) + " exceeds the bound " + std::to_string(max_k_));
  oracle_ = std::make_unique<RebuildConnectivity>(graph_);
}

KConnVerifier::KConnVerifier(const KConnVerifier& other)
    : graph_(other.graph_),
      oracle_(other.oracle_->clone()),
      k_(other.k_),
      max_k_(other.max_k_),
      last_check_calls_(other.last_check_calls_),
      budget_(other.budget_) {}

KConnVerifier& KConnVerifier::operator=(const KConnVerifier& other) {
  if (this != &other) {
    KConnVerifier copy(other);
    *this = std::move(copy);
  }
  return *this;
}

VerifierOutput KConnVerifier::step(const Step& step, const Proof& proof) {
  if (step) {
    if (const auto* e = std::get_if<EdgeUpdate>(&*step)) {
      graph_.apply(*e);
      if (e->insert) {
        oracle_->insert({e->u, e->v});
      } else {
        oracle_->erase({e->u, e->v});
      }
    } else if (!std::holds_alternative<QueryMarker>(*step)) {
      throw UndecodableUpdate("k-connectivity accepts only edge updates, got '" + format_update(*step) + "'");
    }
  }
  last_check_calls_ = 0;
  std::optional<std::vector<Edge>> cut = proof.as_edges();
  if (!cut || cut->size() > k_ - 1) return {false, -1};
  std::set<Edge> seen;
  for (Edge& e : *cut) {
    e = e.normalized();
    if (e.v >= graph_.num_nodes() || !graph_.contains(e) || !seen.insert(e).second) return {false, -1};
  }
  const std::size_t before = oracle_->calls();
  for (const Edge& e : *cut) oracle_->erase(e);
  const bool connected = oracle_->connected();
  for (const Edge& e : *cut) oracle_->insert(e);
  last_check_calls_ = oracle_->calls() - before;
  if (!connected) return {true, 1};
  return {false, 0};
}

std::vector<Proof> KConnVerifier::proof_space(const Step& step) const {
  DynamicGraph g = graph_;
  if (step) g.apply(*step);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Proof> space{Proof::none()};
  std::vector<std::size_t> pick;
  // lexicographic subsets by size
  for (std::size_t size = 1; size + 1 <= k_ && size <= edges.size(); ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (space.size() >= budget_) throw BudgetExceeded("k-connectivity proof space exceeds budget");
      std::vector<Edge> s;
      for (std::size_t i : pick) s.push_back(edges[i]);
      space.push_back(Proof::from_edges(s));
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == edges.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return space;
}

MinCut mincut_bruteforce(const DynamicGraph& g, std::size_t max_nodes) {
  const std::size_t n = g.num_nodes();
  if (n > max_nodes) throw BudgetExceeded("min cut on " + std::to_string(n) + " nodes exceeds " + std::to_string(max_nodes));
  MinCut best;
  if (n < 2) return best;

  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  Graph flow(n);
  auto cap = boost::get(boost::edge_capacity, flow);
  auto rev = boost::get(boost::edge_reverse, flow);
  auto res = boost::get(boost::edge_residual_capacity, flow);
  for (const Edge& e : g.edges()) {
    // an undirected unit edge is a pair of opposite unit arcs, each the
    // other's reverse
    auto a = boost::add_edge(e.u, e.v, flow).first;
    auto b = boost::add_edge(e.v, e.u, flow).first;
    cap[a] = 1;
    cap[b] = 1;
    rev[a] = b;
    rev[b] = a;
  }
  for (std::size_t t = 1; t < n; ++t) {
    const auto value = static_cast<std::size_t>(boost::edmonds_karp_max_flow(flow, 0, t));
    if (value >= best.value) continue;
    best.value = value;
    std::vector<bool> source_side(n, false);
    std::deque<std::size_t> queue{0};
    source_side[0] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto [it, end] = boost::out_edges(x, flow); it != end; ++it) {
        std::size_t y = boost::target(*it, flow);
        if (!source_side[y] && res[*it] > 0) {
          source_side[y] = true;
          queue.push_back(y);
        }
      }
    }
    best.witness.clear();
    for (const Edge& e : g.edges()) {
      if (source_side[e.u] != source_side[e.v]) best.witness.push_back(e);
    }
    if (best.value == 0) break;
  }
  return best;
}

Proof honest_kconn_prover(const KConnVerifier& v, const Step& step) {
  DynamicGraph g = v.graph();
  if (step) g.apply(*step);
  MinCut cut = mincut_bruteforce(g);
  if (cut.value >= v.k()) return Proof::none();
  return Proof::from_edges(cut.witness);
}

}  // namespace dyncx::conn
