#include "dyncx/connectivity/spanning.hpp"

#include <algorithm>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::conn {

SpanningForestProtocol::SpanningForestProtocol(DynamicGraph initial, const OracleFactory& make_oracle)
    : graph_(std::move(initial)), forest_(graph_.num_nodes()) {
  const std::size_t n = graph_.num_nodes();
  for (const Edge& e : graph_.edges()) forest_.link(e.u, e.v);
  DynamicGraph super(n + 1);
  for (const Edge& e : graph_.edges()) super.insert(e);
  for (std::size_t v = 0; v < n; ++v) {
    if (forest_.component_min(v) == v) {
      reps_.insert(v);
      super.insert({v, n});
    }
  }
  oracle_ = make_oracle(std::move(super));
}

bool SpanningForestProtocol::is_replacement(Edge f, Edge deleted) const {
  const std::size_t n = graph_.num_nodes();
  f = f.normalized();
  deleted = deleted.normalized();
  if (f.u >= n || f.v >= n || f == deleted || !graph_.contains(f)) return false;
  return (forest_.connected(f.u, deleted.u) && forest_.connected(f.v, deleted.v)) ||
         (forest_.connected(f.u, deleted.v) && forest_.connected(f.v, deleted.u));
}

ForestStep SpanningForestProtocol::step(const Update& update, const ReplacementProver& prover) {
  ForestStep out;
  out.step = ++steps_;
  out.update = update;
  const std::size_t s = super_node();
  if (const auto* e = std::get_if<EdgeUpdate>(&update)) {
    const Edge edge = Edge{e->u, e->v}.normalized();
    if (e->insert) {
      graph_.insert(edge);
      oracle_->insert(edge);
      if (!forest_.connected(edge.u, edge.v)) {
        const std::size_t drop = std::max(forest_.component_min(edge.u), forest_.component_min(edge.v));
        forest_.link(edge.u, edge.v);
        reps_.erase(drop);
        oracle_->erase({drop, s});
      }
    } else {
      graph_.erase(edge);
      oracle_->erase(edge);
      if (forest_.cut(edge.u, edge.v) == DynamicForest::CutResult::kOk) {
        out.tree_edge_deleted = true;
        out.oracle_connected = oracle_->connected();
        bool replaced = false;
        if (out.oracle_connected) {
          out.replacement = prover(*this, edge);
          if (out.replacement && is_replacement(*out.replacement, edge)) {
            out.replacement_valid = true;
            forest_.link(out.replacement->u, out.replacement->v);
            replaced = true;
          } else {
            in_sync_ = false;
          }
        }
        if (!replaced) {
          const std::size_t other = std::max(forest_.component_min(edge.u), forest_.component_min(edge.v));
          reps_.insert(other);
          oracle_->insert({other, s});
        }
      }
    }
  } else if (!std::holds_alternative<QueryMarker>(update)) {
    throw UndecodableUpdate("spanning forest accepts only edge updates, got '" + format_update(update) + "'");
  }
  out.vouched = in_sync_;
  return out;
}

std::optional<Edge> honest_replacement(const SpanningForestProtocol& p, Edge deleted) {
  for (const Edge& f : p.graph().edges()) {
    if (p.is_replacement(f, deleted)) return f;
  }
  return std::nullopt;
}

bool is_spanning_forest_of(const DynamicForest& f, const DynamicGraph& g) {
  if (f.num_nodes() != g.num_nodes()) return false;
  for (const Edge& e : f.edges()) {
    if (!g.contains(e)) return false;
  }
  return f.component_count() == component_count(g);
}

}  // namespace dyncx::conn
