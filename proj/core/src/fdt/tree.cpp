#include "dyncx/fdt/tree.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "dyncx/framework/errors.hpp"
#include "dyncx/util/text.hpp"

namespace dyncx::fdt {
namespace {

std::vector<std::size_t> children(const TreeNode& n) {
  if (const auto* r = std::get_if<ReadNode>(&n)) return {r->left, r->right};
  if (const auto* w = std::get_if<WriteNode>(&n)) return {w->child};
  return {};
}

// Per path: memory index -> 1 read, 2 written.
std::optional<std::size_t> first_violation(const DecisionTree& t) {
  struct Frame {
    std::size_t id;
    std::vector<std::pair<std::size_t, int>> seen;
  };
  std::vector<Frame> stack{{0, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const TreeNode& n = t.node(f.id);
    auto known = [&](std::size_t idx) {
      return std::any_of(f.seen.begin(), f.seen.end(), [&](const auto& p) { return p.first == idx; });
    };
    if (const auto* r = std::get_if<ReadNode>(&n)) {
      if (known(r->index)) return f.id;
      f.seen.emplace_back(r->index, 1);
      stack.push_back({r->right, f.seen});
      stack.push_back({r->left, std::move(f.seen)});
    } else if (const auto* w = std::get_if<WriteNode>(&n)) {
      f.seen.emplace_back(w->index, 2);
      stack.push_back({w->child, std::move(f.seen)});
    }
  }
  return std::nullopt;
}

}  // namespace

DecisionTree::DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InvalidInstance("decision tree without nodes");
  std::vector<std::size_t> parents(nodes_.size(), 0);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    for (std::size_t c : children(nodes_[id])) {
      if (c >= nodes_.size()) throw InvalidInstance("node " + std::to_string(id) + " points past the tree");
      if (c == 0) throw InvalidInstance("node " + std::to_string(id) + " points back at the root");
      if (++parents[c] > 1) throw InvalidInstance("node " + std::to_string(c) + " has two parents");
    }
    std::visit(
        [&](const auto& n) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(n)>, EndNode>) {
            index_bound_ = std::max(index_bound_, n.index + 1);
          }
        },
        nodes_[id]);
  }
  // depth and reachability
  std::vector<std::size_t> level(nodes_.size(), 0);
  std::vector<bool> reached(nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    auto cs = children(nodes_[id]);
    if (cs.empty()) depth_ = std::max(depth_, level[id]);
    for (std::size_t c : cs) {
      if (reached[c]) throw InvalidInstance("node " + std::to_string(c) + " reached twice");
      reached[c] = true;
      level[c] = level[id] + 1;
      stack.push_back(c);
    }
  }
  auto lost = std::find(reached.begin(), reached.end(), false);
  if (lost != reached.end()) {
    throw InvalidInstance("node " + std::to_string(lost - reached.begin()) + " is unreachable from the root");
  }
}

bool DecisionTree::is_normalized() const { return !first_violation(*this).has_value(); }

void DecisionTree::check_normalized() const {
  if (auto bad = first_violation(*this)) {
    throw NotNormalized("node " + std::to_string(*bad) + " reads a bit already read or written on its path");
  }
}

Execution execute_tree(const DecisionTree& tree, std::vector<bool>& memory) {
  Execution out;
  std::size_t id = 0;
  while (true) {
    const TreeNode& n = tree.node(id);
    if (const auto* r = std::get_if<ReadNode>(&n)) {
      if (r->index >= memory.size()) throw IndexOutOfRange("read of bit " + std::to_string(r->index) + " past memory");
      ++out.probes;
      id = memory[r->index] ? r->right : r->left;
    } else if (const auto* w = std::get_if<WriteNode>(&n)) {
      if (w->index >= memory.size()) throw IndexOutOfRange("write of bit " + std::to_string(w->index) + " past memory");
      ++out.probes;
      memory[w->index] = w->bit;
      out.writes.emplace_back(w->index, w->bit);
      id = w->child;
    } else {
      out.leaf_id = id;
      out.leaf = std::get<EndNode>(n);
      return out;
    }
  }
}

void FdtInstance::validate() const {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].index_bound() > memory.size()) {
      throw IndexOutOfRange("tree " + std::to_string(i) + " touches bit " + std::to_string(trees[i].index_bound() - 1) +
                            " past memory of " + std::to_string(memory.size()));
    }
    trees[i].check_normalized();
  }
}

std::vector<EndNode> fdt_leaves(const FdtInstance& inst) {
  std::vector<EndNode> out;
  out.reserve(inst.trees.size());
  for (const auto& t : inst.trees) {
    std::vector<bool> scratch = inst.memory;
    out.push_back(execute_tree(t, scratch).leaf);
  }
  return out;
}

std::size_t fdt_answer(const FdtInstance& inst) {
  if (inst.trees.empty()) throw EmptyCollection("fDT instance without trees");
  std::vector<EndNode> leaves = fdt_leaves(inst);
  std::size_t best = 0;
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (leaves[i].rank > leaves[best].rank) best = i;
  }
  return best;
}

void fdt_update(FdtInstance& inst, std::size_t position, bool value) {
  if (position >= inst.memory.size()) {
    throw IndexOutOfRange("bit " + std::to_string(position) + " past memory of " + std::to_string(inst.memory.size()));
  }
  inst.memory[position] = value;
}

FdtInstance parse_fdt(std::istream& in) {
  text::LineReader reader(in);
  text::LineTokens t;
  FdtInstance inst;
  bool have_memory = false;
  std::vector<TreeNode> current;
  bool in_tree = false;
  std::size_t tree_line = 0;
  auto close = [&]() {
    if (!in_tree) return;
    if (current.empty()) throw ParseError(tree_line, 1, "tree block without nodes");
    try {
      inst.trees.emplace_back(std::move(current));
    } catch (const InvalidInstance& e) {
      throw ParseError(tree_line, 1, e.what());
    }
    current.clear();
  };
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "m") {
      if (have_memory) t.fail(0, "duplicate memory line");
      inst.memory = t.bits_from(1);
      have_memory = true;
    } else if (head == "T") {
      t.expect_size(1);
      close();
      in_tree = true;
      tree_line = t.line_no();
    } else if (head == "R" || head == "W" || head == "E") {
      if (!in_tree) t.fail(0, "node line outside a 'T' block");
      t.expect_size(4);
      if (head == "R") {
        current.push_back(ReadNode{t.index(1), t.index(2), t.index(3)});
      } else if (head == "W") {
        current.push_back(WriteNode{t.index(1), t.bit(2), t.index(3)});
      } else {
        current.push_back(EndNode{t.bit(1), t.integer(2), t.integer(3)});
      }
    } else {
      t.fail(0, "unknown line type '" + std::string(head) + "'");
    }
  }
  close();
  if (!have_memory) throw ParseError(reader.line_no() + 1, 1, "missing memory line 'm <bits>'");
  inst.validate();
  return inst;
}

FdtInstance parse_fdt(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fdt(in);
}

void write_fdt(std::ostream& out, const FdtInstance& inst) {
  out << "m " << text::bits_to_string(inst.memory) << '\n';
  for (const auto& tree : inst.trees) {
    out << "T\n";
    for (const auto& n : tree.nodes()) {
      if (const auto* r = std::get_if<ReadNode>(&n)) {
        out << "R " << r->index << ' ' << r->left << ' ' << r->right << '\n';
      } else if (const auto* w = std::get_if<WriteNode>(&n)) {
        out << "W " << w->index << ' ' << (w->bit ? 1 : 0) << ' ' << w->child << '\n';
      } else {
        const auto& e = std::get<EndNode>(n);
        out << "E " << (e.x ? 1 : 0) << ' ' << e.y << ' ' << e.rank << '\n';
      }
    }
  }
}

}  // namespace dyncx::fdt
