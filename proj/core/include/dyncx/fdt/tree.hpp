#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dyncx::fdt {

struct ReadNode {
  std::size_t index = 0;
  std::size_t left = 0;   // taken when the bit is 0
  std::size_t right = 0;  // taken when the bit is 1
  friend bool operator==(const ReadNode&, const ReadNode&) = default;
};

struct WriteNode {
  std::size_t index = 0;
  bool bit = false;
  std::size_t child = 0;
  friend bool operator==(const WriteNode&, const WriteNode&) = default;
};

struct EndNode {
  bool x = false;
  std::int64_t y = 0;
  std::int64_t rank = 0;
  friend bool operator==(const EndNode&, const EndNode&) = default;
};

using TreeNode = std::variant<ReadNode, WriteNode, EndNode>;

// A decision tree over a bit array. Node 0 is the root. The constructor
// checks that the nodes form a tree (every other node has exactly one
// parent and is reachable) and throws InvalidInstance otherwise.
class DecisionTree {
 public:
  DecisionTree() : DecisionTree(std::vector<TreeNode>{EndNode{}}) {}
  explicit DecisionTree(std::vector<TreeNode> nodes);

  static DecisionTree constant(EndNode leaf) { return DecisionTree({leaf}); }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  // Read plus write nodes on the longest root-to-leaf path.
  std::size_t depth() const { return depth_; }
  // One past the largest memory index touched, 0 for none.
  std::size_t index_bound() const { return index_bound_; }

  // No path reads a bit twice or reads a bit after writing it.
  bool is_normalized() const;
  // Throws NotNormalized naming the offending node.
  void check_normalized() const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t depth_ = 0;
  std::size_t index_bound_ = 0;
};

struct Execution {
  std::size_t leaf_id = 0;
  EndNode leaf;
  std::vector<std::pair<std::size_t, bool>> writes;  // in path order
  std::size_t probes = 0;                             // read + write nodes visited
};

// Walks the tree on `memory`, applying write nodes to it. Throws
// IndexOutOfRange for an index past the memory.
Execution execute_tree(const DecisionTree& tree, std::vector<bool>& memory);

// Memory plus an ordered tree collection. Leaf ranks are fixed labels.
struct FdtInstance {
  std::vector<bool> memory;
  std::vector<DecisionTree> trees;

  // Indices within memory, trees normalized.
  void validate() const;
};

// Tree whose execution leaf has the largest rank, smallest index on ties.
// Memory is left untouched. Throws EmptyCollection.
std::size_t fdt_answer(const FdtInstance& inst);
// Execution-leaf rank per tree, on scratch copies of memory.
std::vector<EndNode> fdt_leaves(const FdtInstance& inst);
// Single-bit memory write. Throws IndexOutOfRange.
void fdt_update(FdtInstance& inst, std::size_t position, bool value);

// Tree file:
//   m <bits>                   memory (packed or spaced)
//   T                          starts a tree; its node lines follow, node ids
//   R <idx> <left> <right>     counting from 0 within the block
//   W <idx> <bit> <child>
//   E <x> <y> <rank>
// '#' starts a comment line.
FdtInstance parse_fdt(std::istream& in);
FdtInstance parse_fdt(std::string_view text);
void write_fdt(std::ostream& out, const FdtInstance& inst);

}  // namespace dyncx::fdt
