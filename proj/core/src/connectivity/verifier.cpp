#include "dyncx/connectivity/verifier.hpp"

#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::conn {

ConnVerifier::ConnVerifier(DynamicGraph initial) : graph_(std::move(initial)), forest_(graph_.num_nodes()) {}

VerifierOutput ConnVerifier::step(const Step& step, const Proof& proof) {
  const std::uint64_t before = forest_.probes();
  std::int64_t y = 0;
  if (!step) {
    for (const Edge& e : graph_.edges()) {
      if (!forest_.has_edge(e.u, e.v)) forest_.link(e.u, e.v);
    }
  } else if (const auto* e = std::get_if<EdgeUpdate>(&*step)) {
    if (e->insert) {
      graph_.insert({e->u, e->v});
      forest_.link(e->u, e->v);
    } else {
      graph_.erase({e->u, e->v});
      if (forest_.cut(e->u, e->v) == DynamicForest::CutResult::kOk && !proof.is_none()) {
        std::optional<Edge> r = proof.as_edge();
        if (r && r->u < graph_.num_nodes() && r->v < graph_.num_nodes() && graph_.contains(*r) &&
            forest_.link(r->u, r->v) == DynamicForest::LinkResult::kOk) {
          y = 1;
        } else {
          y = -1;
        }
      }
    }
  } else if (!std::holds_alternative<QueryMarker>(*step)) {
    throw UndecodableUpdate("connectivity accepts only edge updates, got '" + format_update(*step) + "'");
  }
  last_step_probes_ = forest_.probes() - before;
  return {spanning(), y};
}

bool ConnVerifier::deletes_tree_edge(const Step& step) const {
  if (!step) return false;
  const auto* e = std::get_if<EdgeUpdate>(&*step);
  return e != nullptr && !e->insert && e->u < graph_.num_nodes() && e->v < graph_.num_nodes() &&
         forest_.has_edge(e->u, e->v);
}

std::vector<Proof> ConnVerifier::proof_space(const Step& step) const {
  std::vector<Proof> space{Proof::none()};
  if (!deletes_tree_edge(step)) return space;
  const std::size_t n = graph_.num_nodes();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) space.push_back(Proof::from_edge({a, b}));
  }
  return space;
}

bool ConnVerifier::forest_inside_graph() const {
  for (const Edge& e : forest_.edges()) {
    if (!graph_.contains(e)) return false;
  }
  return true;
}

Proof honest_conn_prover(const ConnVerifier& v, const Step& step) {
  if (!v.deletes_tree_edge(step)) return Proof::none();
  const auto& del = std::get<EdgeUpdate>(*step);
  const Edge gone = Edge{del.u, del.v}.normalized();
  DynamicForest f = v.forest();
  f.cut(gone.u, gone.v);
  for (const Edge& e : v.graph().edges()) {
    if (e != gone && !f.connected(e.u, e.v)) return Proof::from_edge(e);
  }
  return Proof::none();
}

}  // namespace dyncx::conn
