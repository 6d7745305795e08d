#pragma once

// Reference implementations used only by tests. Nothing here calls into the
// library's algorithms; they are deliberately slow and simple.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Literal as (var, positive).
using Lit = std::pair<std::size_t, bool>;
using Conj = std::vector<Lit>;

inline bool conj_true(const Conj& c, const std::vector<bool>& a) {
  for (auto [v, pos] : c) {
    if (a[v] != pos) return false;
  }
  return true;
}

inline bool dnf_true(const std::vector<Conj>& f, const std::vector<bool>& a) {
  for (const Conj& c : f) {
    if (conj_true(c, a)) return true;
  }
  return false;
}

inline std::optional<std::size_t> first_true(const std::vector<Conj>& f, const std::vector<std::size_t>& order,
                                             const std::vector<bool>& a) {
  for (std::size_t j : order) {
    if (conj_true(f[j], a)) return j;
  }
  return std::nullopt;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::size_t components(std::size_t n, const EdgeList& edges) {
  UnionFind uf(n);
  std::size_t c = n;
  for (auto [a, b] : edges) c -= uf.unite(a, b);
  return c;
}

inline bool connected(std::size_t n, const EdgeList& edges) { return components(n, edges) <= 1; }

// Canonical labels: each node gets the smallest id in its component.
inline std::vector<std::size_t> min_labels(std::size_t n, const EdgeList& edges) {
  UnionFind uf(n);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<std::size_t> best(n, n), out(n);
  for (std::size_t v = 0; v < n; ++v) best[uf.find(v)] = std::min(best[uf.find(v)], v);
  for (std::size_t v = 0; v < n; ++v) out[v] = best[uf.find(v)];
  return out;
}

// Global min cut by trying every bipartition with node 0 on one side.
inline std::size_t mincut_bipartitions(std::size_t n, const EdgeList& edges) {
  if (n < 2) return std::numeric_limits<std::size_t>::max();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::uint64_t side = mask << 1;
    std::size_t cut = 0;
    for (auto [a, b] : edges) cut += ((side >> a) & 1) != ((side >> b) & 1);
    best = std::min(best, cut);
  }
  return best;
}

// All-white in the queried-right orientation: does some right node see only
// white left nodes?
inline bool all_white(std::size_t right, const EdgeList& lr, const std::vector<bool>& left_white) {
  std::vector<bool> ok(right, true);
  for (auto [l, r] : lr) {
    if (!left_white[l]) ok[r] = false;
  }
  return std::find(ok.begin(), ok.end(), true) != ok.end();
}

// Same question with the sides swapped: some left node sees only white
// right nodes.
inline bool all_white_left(std::size_t left, const EdgeList& lr, const std::vector<bool>& right_white) {
  std::vector<bool> ok(left, true);
  for (auto [l, r] : lr) {
    if (!right_white[r]) ok[l] = false;
  }
  return std::find(ok.begin(), ok.end(), true) != ok.end();
}

struct Digraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> out;
  explicit Digraph(std::size_t nodes) : n(nodes), out(nodes) {}
  void arc(std::size_t a, std::size_t b) { out[a].push_back(b); }
  void edge(std::size_t a, std::size_t b) {
    arc(a, b);
    arc(b, a);
  }
};

inline std::vector<std::size_t> bfs(const Digraph& g, std::size_t s) {
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> d(g.n, inf);
  std::queue<std::size_t> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : g.out[v]) {
      if (d[w] == inf) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

// Largest finite-or-infinite BFS distance over all ordered pairs; max() when
// some pair is unreachable.
inline std::size_t diameter(const Digraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    for (std::size_t d : bfs(g, s)) best = std::max(best, d);
  }
  return best;
}

inline std::size_t reach_count(const Digraph& g, std::size_t s) {
  std::size_t c = 0;
  for (std::size_t d : bfs(g, s)) c += d != std::numeric_limits<std::size_t>::max();
  return c;
}

// Kosaraju, iterative.
inline std::size_t scc_count(const Digraph& g) {
  std::vector<std::vector<std::size_t>> rev(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    for (std::size_t w : g.out[v]) rev[w].push_back(v);
  }
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> st{{s, 0}};
    seen[s] = true;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < g.out[v].size()) {
        std::size_t w = g.out[v][i++];
        if (!seen[w]) {
          seen[w] = true;
          st.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        st.pop_back();
      }
    }
  }
  std::vector<bool> done(g.n, false);
  std::size_t count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (done[*it]) continue;
    ++count;
    std::vector<std::size_t> st{*it};
    done[*it] = true;
    while (!st.empty()) {
      std::size_t v = st.back();
      st.pop_back();
      for (std::size_t w : rev[v]) {
        if (!done[w]) {
          done[w] = true;
          st.push_back(w);
        }
      }
    }
  }
  return count;
}

// Max flow by repeated DFS augmentation on a capacity matrix.
inline std::int64_t max_flow(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& cap,
                             std::size_t s, std::size_t t) {
  std::vector<std::vector<std::int64_t>> r(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [e, c] : cap) r[e.first][e.second] += c;
  std::int64_t flow = 0;
  for (;;) {
    std::vector<std::size_t> prev(n, n);
    std::vector<std::size_t> st{s};
    prev[s] = s;
    while (!st.empty() && prev[t] == n) {
      std::size_t v = st.back();
      st.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (r[v][w] > 0 && prev[w] == n) {
          prev[w] = v;
          st.push_back(w);
        }
      }
    }
    if (prev[t] == n) return flow;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = t; v != s; v = prev[v]) push = std::min(push, r[prev[v]][v]);
    for (std::size_t v = t; v != s; v = prev[v]) {
      r[prev[v]][v] -= push;
      r[v][prev[v]] += push;
    }
    flow += push;
  }
}

// CNF clause as bitmasks over at most 64 variables.
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

inline std::optional<std::uint64_t> sat(std::size_t n, const std::vector<MaskClause>& cnf) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 0;; ++a) {
    bool ok = true;
    for (const MaskClause& c : cnf) {
      if (((a & c.pos) | (~a & c.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
    if (a == full) return std::nullopt;
  }
}

// Second interpreter for decision trees given as flat node tables.
struct TNode {
  char kind = 'E';  // R, W, E
  std::size_t index = 0;
  std::size_t a = 0;  // R: left, W: child
  std::size_t b = 0;  // R: right, W: bit
  std::int64_t x = 0, y = 0, rank = 0;
};

struct TLeaf {
  std::size_t id = 0;
  std::int64_t x = 0, y = 0, rank = 0;
};

inline TLeaf run_tree(const std::vector<TNode>& t, std::vector<bool>& mem) {
  std::size_t at = 0;
  for (;;) {
    const TNode& n = t[at];
    if (n.kind == 'R') {
      at = mem[n.index] ? n.b : n.a;
    } else if (n.kind == 'W') {
      mem[n.index] = n.b != 0;
      at = n.a;
    } else {
      return {at, n.x, n.y, n.rank};
    }
  }
}

inline std::size_t best_tree(const std::vector<std::vector<TNode>>& trees, const std::vector<bool>& mem) {
  std::size_t best = 0;
  std::int64_t rank = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    std::vector<bool> scratch = mem;
    TLeaf l = run_tree(trees[i], scratch);
    if (l.rank > rank) {
      rank = l.rank;
      best = i;
    }
  }
  return best;
}

inline std::size_t ceil_log2(std::size_t m) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

}  // namespace oracle
