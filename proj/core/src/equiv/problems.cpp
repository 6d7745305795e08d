#include "dyncx/equiv/problems.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::equiv {
namespace {

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) throw IndexOutOfRange(std::string(what) + " " + std::to_string(i) + " out of range for " + std::to_string(n));
}

void check_bipartite(std::size_t left, std::size_t right, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     std::size_t colors, std::size_t colored_side) {
  for (const auto& [l, r] : edges) {
    if (l >= left || r >= right) {
      throw InvalidInstance("edge (" + std::to_string(l) + "," + std::to_string(r) + ") leaves the bipartition");
    }
  }
  if (colors != colored_side) throw InvalidInstance("color vector has the wrong length");
}

void check_sorted_unique(const std::vector<std::size_t>& xs, std::size_t n, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= n) throw InvalidInstance(std::string(what) + " index " + std::to_string(xs[i]) + " out of range");
    if (i > 0 && xs[i - 1] >= xs[i]) throw InvalidInstance(std::string(what) + " indices must be sorted and distinct");
  }
}

const ColorSet* color_update(const Update& update, const char* problem) {
  if (const auto* c = std::get_if<ColorSet>(&update)) return c;
  if (std::holds_alternative<QueryMarker>(update)) return nullptr;
  throw UndecodableUpdate(std::string(problem) + " accepts only color updates, got '" + format_update(update) + "'");
}

const VarSet* var_update(const Update& update, const char* problem) {
  if (const auto* v = std::get_if<VarSet>(&update)) return v;
  if (std::holds_alternative<QueryMarker>(update)) return nullptr;
  throw UndecodableUpdate(std::string(problem) + " accepts only bit updates, got '" + format_update(update) + "'");
}

}  // namespace

void AllWhiteInstance::validate() const { check_bipartite(left, right, edges, colors.size(), left); }

std::vector<std::vector<std::size_t>> AllWhiteInstance::right_neighbors() const {
  std::vector<std::vector<std::size_t>> adj(right);
  for (const auto& [l, r] : edges) adj[r].push_back(l);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::size_t AllWhiteInstance::max_right_degree() const {
  std::vector<std::size_t> deg(right, 0);
  for (const auto& e : edges) ++deg[e.second];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

AllWhiteInstance AllWhiteInstance::canonical() const {
  AllWhiteInstance c = *this;
  std::sort(c.edges.begin(), c.edges.end());
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
  return c;
}

void TransposedAllWhite::validate() const { check_bipartite(left, right, edges, colors.size(), right); }

std::vector<std::vector<std::size_t>> TransposedAllWhite::left_neighbors() const {
  std::vector<std::vector<std::size_t>> adj(left);
  for (const auto& [l, r] : edges) adj[l].push_back(r);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::size_t TransposedAllWhite::black_count() const {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), Color::kBlack));
}

TransposedAllWhite transpose(const AllWhiteInstance& aw) {
  TransposedAllWhite t;
  t.left = aw.right;
  t.right = aw.left;
  t.colors = aw.colors;
  t.edges.reserve(aw.edges.size());
  for (const auto& [l, r] : aw.edges) t.edges.emplace_back(r, l);
  return t;
}

AllWhiteInstance transpose(const TransposedAllWhite& aw) {
  AllWhiteInstance t;
  t.left = aw.right;
  t.right = aw.left;
  t.colors = aw.colors;
  t.edges.reserve(aw.edges.size());
  for (const auto& [l, r] : aw.edges) t.edges.emplace_back(r, l);
  return t;
}

void SparseOvInstance::validate() const {
  if (u.size() != dim) throw InvalidInstance("query vector has the wrong length");
  for (const auto& col : columns) check_sorted_unique(col, dim, "column");
}

std::size_t SparseOvInstance::max_nnz() const {
  std::size_t w = 0;
  for (const auto& col : columns) w = std::max(w, col.size());
  return w;
}

void HypergraphInstance::validate(bool allow_empty_edges) const {
  if (in_set.size() != num_nodes) throw InvalidInstance("set indicator has the wrong length");
  for (const auto& e : edges) {
    if (e.empty() && !allow_empty_edges) throw InvalidInstance("empty hyperedge");
    check_sorted_unique(e, num_nodes, "hyperedge");
  }
}

std::size_t HypergraphInstance::max_edge_size() const {
  std::size_t w = 0;
  for (const auto& e : edges) w = std::max(w, e.size());
  return w;
}

bool all_white_bruteforce(const AllWhiteInstance& aw) {
  std::vector<bool> has_black(aw.right, false);
  for (const auto& [l, r] : aw.edges) {
    if (aw.colors[l] == Color::kBlack) has_black[r] = true;
  }
  return std::find(has_black.begin(), has_black.end(), false) != has_black.end();
}

bool all_white_bruteforce(const TransposedAllWhite& aw) {
  std::vector<bool> has_black(aw.left, false);
  for (const auto& [l, r] : aw.edges) {
    if (aw.colors[r] == Color::kBlack) has_black[l] = true;
  }
  return std::find(has_black.begin(), has_black.end(), false) != has_black.end();
}

bool has_orthogonal_bruteforce(const SparseOvInstance& ov) {
  return std::any_of(ov.columns.begin(), ov.columns.end(), [&](const std::vector<std::size_t>& col) {
    return std::none_of(col.begin(), col.end(), [&](std::size_t i) { return ov.u[i]; });
  });
}

bool is_independent_bruteforce(const HypergraphInstance& h) {
  return std::none_of(h.edges.begin(), h.edges.end(), [&](const std::vector<std::size_t>& e) {
    return std::all_of(e.begin(), e.end(), [&](std::size_t v) { return h.in_set[v]; });
  });
}

void apply_update(AllWhiteInstance& aw, const Update& update) {
  if (const ColorSet* c = color_update(update, "dAW")) {
    check_index(c->node, aw.left, "left node");
    aw.colors[c->node] = c->color;
  }
}

void apply_update(TransposedAllWhite& aw, const Update& update) {
  if (const ColorSet* c = color_update(update, "dAW")) {
    check_index(c->node, aw.right, "right node");
    aw.colors[c->node] = c->color;
  }
}

void apply_update(SparseOvInstance& ov, const Update& update) {
  if (const VarSet* v = var_update(update, "dOV")) {
    check_index(v->var, ov.dim, "vector entry");
    ov.u[v->var] = v->bit;
  }
}

void apply_update(HypergraphInstance& h, const Update& update) {
  if (const VarSet* v = var_update(update, "dIndep")) {
    check_index(v->var, h.num_nodes, "node");
    h.in_set[v->var] = v->bit;
  }
}

}  // namespace dyncx::equiv
