#include "dyncx/equiv/lift.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "dyncx/framework/errors.hpp"

namespace dyncx::equiv {
namespace {

// C(n, k), saturating at cap + 1.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (c > std::numeric_limits<std::size_t>::max() / (n - k + i)) return cap + 1;
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

// Calls f on each k-subset of `items` in lexicographic order.
template <class F>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, F&& f) {
  if (k > items.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::size_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[pick[i]];
    f(subset);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::size_t LiftedGraph::node_of(const std::vector<std::size_t>& sorted_subset) const {
  auto it = index_.find(sorted_subset);
  if (it == index_.end()) throw IndexOutOfRange("not a k-subset of the base nodes");
  return it->second;
}

std::vector<bool> LiftedGraph::query_set(const std::vector<bool>& in_set) const {
  if (in_set.size() != base_nodes_) throw InvalidInstance("query indicator has the wrong length");
  std::vector<bool> out(subsets_.size(), false);
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    out[i] = std::all_of(subsets_[i].begin(), subsets_[i].end(), [&](std::size_t v) { return in_set[v]; });
  }
  return out;
}

bool LiftedGraph::independent(const std::vector<bool>& nodes) const {
  return std::none_of(edges_.begin(), edges_.end(), [&](const auto& e) { return nodes[e.first] && nodes[e.second]; });
}

LiftedGraph hypergraph_lift(const HypergraphInstance& h, std::size_t k, std::size_t budget) {
  h.validate();
  for (const auto& e : h.edges) {
    if (e.size() != 2 * k) {
      throw InvalidInstance("hyperedge of size " + std::to_string(e.size()) + " in a " + std::to_string(2 * k) +
                            "-uniform lift");
    }
  }
  std::size_t count = binomial_capped(h.num_nodes, k, budget);
  if (count > budget) {
    throw BudgetExceeded("C(" + std::to_string(h.num_nodes) + "," + std::to_string(k) + ") exceeds budget " +
                         std::to_string(budget));
  }

  LiftedGraph g;
  g.k_ = k;
  g.base_nodes_ = h.num_nodes;
  std::vector<std::size_t> all(h.num_nodes);
  for (std::size_t v = 0; v < h.num_nodes; ++v) all[v] = v;
  for_each_subset(all, k, [&](const std::vector<std::size_t>& s) {
    g.index_.emplace(s, g.subsets_.size());
    g.subsets_.push_back(s);
  });

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : h.edges) {
    for_each_subset(e, k, [&](const std::vector<std::size_t>& first) {
      std::vector<std::size_t> second;
      std::set_difference(e.begin(), e.end(), first.begin(), first.end(), std::back_inserter(second));
      std::size_t a = g.index_.at(first);
      std::size_t b = g.index_.at(second);
      edges.emplace(std::min(a, b), std::max(a, b));
    });
  }
  g.edges_.assign(edges.begin(), edges.end());
  return g;
}

}  // namespace dyncx::equiv
