#include "dyncx/connectivity/forest.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "dyncx/framework/errors.hpp"
#include "dyncx/util/budget.hpp"

namespace dyncx::conn {

// Records the probes spent by one public operation.
class DynamicForest::OpScope {
 public:
  explicit OpScope(const DynamicForest& f) : f_(f), start_(f.probes_) {}
  ~OpScope() {
    f_.last_op_probes_ = f_.probes_ - start_;
    f_.max_op_probes_ = std::max(f_.max_op_probes_, f_.last_op_probes_);
    assert(f_.last_op_probes_ <= f_.probe_budget());
  }

 private:
  const DynamicForest& f_;
  std::uint64_t start_;
};

DynamicForest::DynamicForest(std::size_t n, std::uint64_t seed) : n_(n), rng_state_(seed) {
  if (n >= kNil / 4) throw InvalidInstance("forest too large");
  items_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    items_[v].priority = next_priority();
    items_[v].min_node = static_cast<std::uint32_t>(v);
  }
}

std::uint64_t DynamicForest::next_priority() {
  // splitmix64
  std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void DynamicForest::reset_probe_stats() const {
  last_op_probes_ = 0;
  max_op_probes_ = 0;
}

std::uint64_t DynamicForest::probe_budget() const { return polylog_budget(n_, 16, 2); }

void DynamicForest::check_node(std::size_t v) const {
  if (v >= n_) throw IndexOutOfRange("node " + std::to_string(v) + " out of range for forest of " + std::to_string(n_));
}

void DynamicForest::pull(std::uint32_t x) {
  Item& it = items_[x];
  it.size = 1 + size(it.left) + size(it.right);
  std::uint32_t own = x < n_ ? x : kNil;
  it.min_node = std::min({own, min_of(it.left), min_of(it.right)});
}

std::uint32_t DynamicForest::root(std::uint32_t x) const {
  ++probes_;
  while (items_[x].parent != kNil) {
    x = items_[x].parent;
    ++probes_;
  }
  return x;
}

std::uint32_t DynamicForest::index(std::uint32_t x) const {
  ++probes_;
  std::uint32_t pos = size(items_[x].left);
  while (items_[x].parent != kNil) {
    std::uint32_t p = items_[x].parent;
    ++probes_;
    if (items_[p].right == x) pos += size(items_[p].left) + 1;
    x = p;
  }
  return pos;
}

std::pair<std::uint32_t, std::uint32_t> DynamicForest::split(std::uint32_t t, std::uint32_t k) {
  if (t == kNil) return {kNil, kNil};
  ++probes_;
  Item& it = items_[t];
  if (size(it.left) >= k) {
    auto [a, b] = split(it.left, k);
    items_[t].left = b;
    if (b != kNil) items_[b].parent = t;
    pull(t);
    items_[t].parent = kNil;
    if (a != kNil) items_[a].parent = kNil;
    return {a, t};
  }
  auto [a, b] = split(it.right, k - size(it.left) - 1);
  items_[t].right = a;
  if (a != kNil) items_[a].parent = t;
  pull(t);
  items_[t].parent = kNil;
  if (b != kNil) items_[b].parent = kNil;
  return {t, b};
}

std::uint32_t DynamicForest::merge(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  ++probes_;
  if (items_[a].priority > items_[b].priority) {
    std::uint32_t r = merge(items_[a].right, b);
    items_[a].right = r;
    items_[r].parent = a;
    pull(a);
    items_[a].parent = kNil;
    return a;
  }
  std::uint32_t l = merge(a, items_[b].left);
  items_[b].left = l;
  items_[l].parent = b;
  pull(b);
  items_[b].parent = kNil;
  return b;
}

// Rotates v's tour so that it starts at v; returns the treap root.
std::uint32_t DynamicForest::reroot(std::uint32_t v) {
  std::uint32_t r = root(v);
  std::uint32_t k = index(v);
  auto [a, b] = split(r, k);
  return merge(b, a);
}

std::uint32_t DynamicForest::new_arc() {
  std::uint32_t x;
  if (!free_.empty()) {
    x = free_.back();
    free_.pop_back();
    items_[x] = Item{};
  } else {
    x = static_cast<std::uint32_t>(items_.size());
    items_.emplace_back();
  }
  items_[x].priority = next_priority();
  return x;
}

DynamicForest::LinkResult DynamicForest::link(std::size_t u, std::size_t v) {
  check_node(u);
  check_node(v);
  OpScope scope(*this);
  const auto uu = static_cast<std::uint32_t>(u), vv = static_cast<std::uint32_t>(v);
  if (u == v || root(uu) == root(vv)) return LinkResult::kWouldCycle;
  std::uint32_t tu = reroot(uu);
  std::uint32_t tv = reroot(vv);
  std::uint32_t uv = new_arc(), vu = new_arc();
  arcs_[arc_key(u, v)] = uv;
  arcs_[arc_key(v, u)] = vu;
  merge(merge(merge(tu, uv), tv), vu);
  ++edge_count_;
  return LinkResult::kOk;
}

DynamicForest::CutResult DynamicForest::cut(std::size_t u, std::size_t v) {
  check_node(u);
  check_node(v);
  OpScope scope(*this);
  auto f = arcs_.find(arc_key(u, v));
  if (f == arcs_.end()) return CutResult::kNotTreeEdge;
  std::uint32_t a1 = f->second;
  std::uint32_t a2 = arcs_.at(arc_key(v, u));
  std::uint32_t r = root(a1);
  std::uint32_t p1 = index(a1), p2 = index(a2);
  if (p1 > p2) {
    std::swap(p1, p2);
    std::swap(a1, a2);
  }
  // tour = A a1 M a2 C  ->  trees A C and M
  auto [left, rest] = split(r, p1);
  auto [first_arc, rest2] = split(rest, 1);
  auto [middle, rest3] = split(rest2, p2 - p1 - 1);
  auto [second_arc, right] = split(rest3, 1);
  (void)middle;
  assert(first_arc == a1 && second_arc == a2);
  merge(left, right);
  arcs_.erase(arc_key(u, v));
  arcs_.erase(arc_key(v, u));
  free_.push_back(first_arc);
  free_.push_back(second_arc);
  --edge_count_;
  return CutResult::kOk;
}

bool DynamicForest::connected(std::size_t u, std::size_t v) const {
  check_node(u);
  check_node(v);
  OpScope scope(*this);
  return root(static_cast<std::uint32_t>(u)) == root(static_cast<std::uint32_t>(v));
}

bool DynamicForest::has_edge(std::size_t u, std::size_t v) const {
  check_node(u);
  check_node(v);
  return arcs_.count(arc_key(u, v)) > 0;
}

std::size_t DynamicForest::component_size(std::size_t v) const {
  check_node(v);
  OpScope scope(*this);
  // a tree with s nodes has a tour of s + 2(s - 1) elements
  return (items_[root(static_cast<std::uint32_t>(v))].size + 2) / 3;
}

std::size_t DynamicForest::component_min(std::size_t v) const {
  check_node(v);
  OpScope scope(*this);
  return items_[root(static_cast<std::uint32_t>(v))].min_node;
}

std::vector<std::size_t> DynamicForest::component_nodes(std::size_t v) const {
  check_node(v);
  std::vector<std::size_t> out;
  std::vector<std::uint32_t> stack{root(static_cast<std::uint32_t>(v))};
  while (!stack.empty()) {
    std::uint32_t x = stack.back();
    stack.pop_back();
    if (x < n_) out.push_back(x);
    if (items_[x].left != kNil) stack.push_back(items_[x].left);
    if (items_[x].right != kNil) stack.push_back(items_[x].right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> DynamicForest::edges() const {
  std::vector<Edge> out;
  for (const auto& [key, item] : arcs_) {
    std::size_t u = key >> 32, v = key & 0xffffffffU;
    if (u < v) out.push_back({u, v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dyncx::conn
