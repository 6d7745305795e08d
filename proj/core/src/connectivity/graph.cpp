#include "dyncx/connectivity/graph.hpp"

#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"
#include "dyncx/util/text.hpp"

namespace dyncx::conn {

bool DynamicGraph::contains(Edge e) const { return edges_.count(e.normalized()) > 0; }

void DynamicGraph::insert(Edge e) {
  e = e.normalized();
  if (e.v >= adj_.size()) throw IndexOutOfRange("node " + std::to_string(e.v) + " out of range");
  if (e.u == e.v) throw InvalidEdge("self-loop at " + std::to_string(e.u));
  if (!edges_.insert(e).second) {
    throw InvalidEdge("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already present");
  }
  adj_[e.u].insert(e.v);
  adj_[e.v].insert(e.u);
}

void DynamicGraph::erase(Edge e) {
  e = e.normalized();
  if (edges_.erase(e) == 0) {
    throw UnknownEdge("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in the graph");
  }
  adj_[e.u].erase(e.v);
  adj_[e.v].erase(e.u);
}

void DynamicGraph::apply(const Update& update) {
  if (std::holds_alternative<QueryMarker>(update)) return;
  const auto* e = std::get_if<EdgeUpdate>(&update);
  if (e == nullptr) throw UndecodableUpdate("graph accepts only edge updates, got '" + format_update(update) + "'");
  if (e->insert) {
    insert({e->u, e->v});
  } else {
    erase({e->u, e->v});
  }
}

std::vector<std::size_t> component_labels(const DynamicGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> label(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    label[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : g.neighbors(x)) {
        if (label[y] == n) {
          label[y] = s;
          queue.push_back(y);
        }
      }
    }
  }
  return label;
}

std::size_t component_count(const DynamicGraph& g) {
  auto label = component_labels(g);
  std::size_t count = 0;
  for (std::size_t v = 0; v < label.size(); ++v) count += label[v] == v;
  return count;
}

bool is_connected(const DynamicGraph& g) { return component_count(g) <= 1; }

GraphFile parse_graph(std::istream& in) {
  text::LineReader reader(in, "c");
  text::LineTokens t;
  if (!reader.next(t)) throw ParseError(reader.line_no() + 1, 1, "missing 'p graph' header");
  if (t.token(0) != "p") t.fail(0, "expected 'p graph <N>' header");
  t.expect_size(3);
  if (t.token(1) != "graph") t.fail(1, "expected format 'graph'");
  GraphFile file{DynamicGraph(t.index(2)), std::nullopt};
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "k") {
      t.expect_size(2);
      if (file.k) t.fail(0, "duplicate 'k' line");
      file.k = t.index(1);
      continue;
    }
    std::size_t first = head == "e" ? 1 : 0;
    t.expect_size(first + 2);
    std::size_t u = t.index(first), v = t.index(first + 1);
    try {
      file.graph.insert({u, v});
    } catch (const IndexOutOfRange& e) {
      t.fail(u >= file.graph.num_nodes() ? first : first + 1, e.what());
    } catch (const InvalidEdge& e) {
      t.fail(first, e.what());
    }
  }
  return file;
}

GraphFile parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const DynamicGraph& g, std::optional<std::size_t> k) {
  out << "p graph " << g.num_nodes() << '\n';
  if (k) out << "k " << *k << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace dyncx::conn
