#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dyncx/framework/update.hpp"

namespace dyncx::equiv {

// Dynamic all-white (dAW): bipartite graph, left nodes colored, the question
// is whether some right node has only white neighbors. A right node without
// neighbors qualifies vacuously. Only right-side degrees are bounded.
struct AllWhiteInstance {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (l, r)
  std::vector<Color> colors;                                // per left node

  void validate() const;
  std::vector<std::vector<std::size_t>> right_neighbors() const;
  std::size_t max_right_degree() const;
  // Same instance with edges sorted and deduplicated.
  AllWhiteInstance canonical() const;

  friend bool operator==(const AllWhiteInstance&, const AllWhiteInstance&) = default;
};

// The same problem with the sides swapped: right nodes are colored and the
// question is whether some left node has only white neighbors. This is the
// orientation the graph reductions are phrased in.
struct TransposedAllWhite {
  std::size_t left = 0;   // queried side
  std::size_t right = 0;  // colored side
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (l, r)
  std::vector<Color> colors;                                // per right node

  void validate() const;
  std::vector<std::vector<std::size_t>> left_neighbors() const;
  std::size_t black_count() const;
};

TransposedAllWhite transpose(const AllWhiteInstance& aw);
AllWhiteInstance transpose(const TransposedAllWhite& aw);

// Dynamic sparse orthogonal vectors (dOV): is some column orthogonal to u?
struct SparseOvInstance {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> columns;  // sorted nonzero rows
  std::vector<bool> u;

  void validate() const;
  std::size_t max_nnz() const;
};

// Independent set query (dIndep): is S independent, i.e. contains no
// hyperedge entirely?
struct HypergraphInstance {
  std::size_t num_nodes = 0;
  std::vector<std::vector<std::size_t>> edges;  // sorted node lists
  std::vector<bool> in_set;

  // allow_empty_edges = false additionally rejects empty hyperedges.
  void validate(bool allow_empty_edges = true) const;
  std::size_t max_edge_size() const;
};

bool all_white_bruteforce(const AllWhiteInstance& aw);
bool all_white_bruteforce(const TransposedAllWhite& aw);
bool has_orthogonal_bruteforce(const SparseOvInstance& ov);
bool is_independent_bruteforce(const HypergraphInstance& h);

// ColorSet for the all-white problems, VarSet for dOV (entry of u) and
// dIndep (membership bit). QueryMarker is a no-op everywhere.
void apply_update(AllWhiteInstance& aw, const Update& update);
void apply_update(TransposedAllWhite& aw, const Update& update);
void apply_update(SparseOvInstance& ov, const Update& update);
void apply_update(HypergraphInstance& h, const Update& update);

}  // namespace dyncx::equiv
