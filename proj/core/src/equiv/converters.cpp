#include "dyncx/equiv/converters.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::equiv {

UpdateTranslator::UpdateTranslator(UpdateKind source, UpdateKind target, std::vector<std::vector<Target>> map)
    : source_(source), target_(target), map_(std::move(map)) {}

std::vector<Update> UpdateTranslator::operator()(const Update& update) const {
  if (std::holds_alternative<QueryMarker>(update)) return {QueryMarker{}};
  std::size_t index = 0;
  bool bit = false;
  if (source_ == UpdateKind::kVariable) {
    const auto* v = std::get_if<VarSet>(&update);
    if (v == nullptr) throw UndecodableUpdate("expected a variable update, got '" + format_update(update) + "'");
    index = v->var;
    bit = v->bit;
  } else {
    const auto* c = std::get_if<ColorSet>(&update);
    if (c == nullptr) throw UndecodableUpdate("expected a color update, got '" + format_update(update) + "'");
    index = c->node;
    bit = is_white(c->color);
  }
  if (index >= map_.size()) throw IndexOutOfRange("update index " + std::to_string(index) + " out of range");
  std::vector<Update> out;
  out.reserve(map_[index].size());
  for (const Target& t : map_[index]) {
    bool b = bit != t.invert;
    if (target_ == UpdateKind::kVariable) {
      out.push_back(VarSet{t.index, b});
    } else {
      out.push_back(ColorSet{t.index, color_from_bit(b)});
    }
  }
  return out;
}

std::size_t UpdateTranslator::max_fanout() const {
  std::size_t f = 0;
  for (const auto& targets : map_) f = std::max(f, targets.size());
  return f;
}

Conversion<AllWhiteInstance> dnf_to_aw(const dnf::DnfInstance& inst) {
  inst.validate();
  AllWhiteInstance aw;
  aw.left = 2 * inst.num_vars;
  aw.right = inst.clauses.size();
  aw.colors.resize(aw.left);
  for (std::size_t i = 0; i < inst.num_vars; ++i) {
    aw.colors[2 * i] = color_from_bit(inst.assignment[i]);
    aw.colors[2 * i + 1] = color_from_bit(!inst.assignment[i]);
  }
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    for (const dnf::Literal& l : inst.clauses[j]) aw.edges.emplace_back(2 * l.var + (l.positive ? 0 : 1), j);
  }
  std::vector<std::vector<UpdateTranslator::Target>> map(inst.num_vars);
  for (std::size_t i = 0; i < inst.num_vars; ++i) map[i] = {{2 * i, false}, {2 * i + 1, true}};
  return {std::move(aw), UpdateTranslator(UpdateKind::kVariable, UpdateKind::kColor, std::move(map)), false};
}

Conversion<HypergraphInstance> aw_to_indep(const AllWhiteInstance& aw) {
  aw.validate();
  HypergraphInstance h;
  h.num_nodes = aw.left;
  h.edges = aw.right_neighbors();
  for (auto& e : h.edges) e.erase(std::unique(e.begin(), e.end()), e.end());
  h.in_set.resize(aw.left);
  for (std::size_t l = 0; l < aw.left; ++l) h.in_set[l] = is_white(aw.colors[l]);
  std::vector<std::vector<UpdateTranslator::Target>> map(aw.left);
  for (std::size_t l = 0; l < aw.left; ++l) map[l] = {{l, false}};
  return {std::move(h), UpdateTranslator(UpdateKind::kColor, UpdateKind::kVariable, std::move(map)), true};
}

Conversion<dnf::DnfInstance> indep_to_dnf(const HypergraphInstance& h) {
  h.validate();
  dnf::DnfInstance inst;
  inst.num_vars = h.num_nodes;
  inst.assignment = h.in_set;
  inst.clauses.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    dnf::Clause c;
    for (std::size_t v : e) c.push_back(dnf::Literal{static_cast<std::uint32_t>(v), true});
    inst.clauses.push_back(std::move(c));
  }
  std::vector<std::vector<UpdateTranslator::Target>> map(h.num_nodes);
  for (std::size_t v = 0; v < h.num_nodes; ++v) map[v] = {{v, false}};
  return {std::move(inst), UpdateTranslator(UpdateKind::kVariable, UpdateKind::kVariable, std::move(map)), true};
}

Conversion<SparseOvInstance> aw_to_ov(const AllWhiteInstance& aw) {
  aw.validate();
  SparseOvInstance ov;
  ov.dim = aw.left;
  ov.columns = aw.right_neighbors();
  for (auto& col : ov.columns) col.erase(std::unique(col.begin(), col.end()), col.end());
  ov.u.resize(aw.left);
  for (std::size_t l = 0; l < aw.left; ++l) ov.u[l] = aw.colors[l] == Color::kBlack;
  std::vector<std::vector<UpdateTranslator::Target>> map(aw.left);
  for (std::size_t l = 0; l < aw.left; ++l) map[l] = {{l, true}};
  return {std::move(ov), UpdateTranslator(UpdateKind::kColor, UpdateKind::kVariable, std::move(map)), false};
}

Conversion<AllWhiteInstance> ov_to_aw(const SparseOvInstance& ov) {
  ov.validate();
  AllWhiteInstance aw;
  aw.left = ov.dim;
  aw.right = ov.columns.size();
  aw.colors.resize(ov.dim);
  for (std::size_t i = 0; i < ov.dim; ++i) aw.colors[i] = ov.u[i] ? Color::kBlack : Color::kWhite;
  for (std::size_t j = 0; j < ov.columns.size(); ++j) {
    for (std::size_t i : ov.columns[j]) aw.edges.emplace_back(i, j);
  }
  std::vector<std::vector<UpdateTranslator::Target>> map(ov.dim);
  for (std::size_t i = 0; i < ov.dim; ++i) map[i] = {{i, true}};
  return {std::move(aw), UpdateTranslator(UpdateKind::kVariable, UpdateKind::kColor, std::move(map)), false};
}

Conversion<AllWhiteInstance> prune_isolated(const AllWhiteInstance& aw) {
  aw.validate();
  std::vector<bool> used(aw.left, false);
  for (const auto& e : aw.edges) used[e.first] = true;
  std::vector<std::vector<UpdateTranslator::Target>> map(aw.left);
  std::vector<std::size_t> new_index(aw.left, 0);
  AllWhiteInstance out;
  out.right = aw.right;
  for (std::size_t l = 0; l < aw.left; ++l) {
    if (!used[l]) continue;
    new_index[l] = out.left++;
    out.colors.push_back(aw.colors[l]);
    map[l] = {{new_index[l], false}};
  }
  out.edges.reserve(aw.edges.size());
  for (const auto& [l, r] : aw.edges) out.edges.emplace_back(new_index[l], r);
  return {std::move(out), UpdateTranslator(UpdateKind::kColor, UpdateKind::kColor, std::move(map)), false};
}

}  // namespace dyncx::equiv
