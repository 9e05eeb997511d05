#pragma once

#include <utility>
#include <vector>

#include "lcorbit/graph.hpp"
#include "lcorbit/parallel.hpp"

namespace lcorbit {

// GF(2) rank of the biadjacency matrix between `side` and its complement.
int cut_rank(const Graph& g, VertexMask side);

// Unrooted tree whose nodes 0..leaf_count-1 are leaves and the rest are
// internal nodes of degree 3. For a decomposition of a graph, leaf i is
// graph vertex i.
struct SubcubicTree {
  int leaf_count = 0;
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  // Leaves on the far side of each edge's second endpoint, as a mask.
  std::vector<VertexMask> edge_cuts() const;
};

struct RankDecomposition {
  SubcubicTree tree;
  int width = 0;
};

struct RankWidthOptions {
  Execution execution = Execution::kParallel;
  // Abandon partial trees that already reach the incumbent width.
  bool prune = true;
};

// Exact rank-width with one optimal decomposition. Orders below 2 have width
// 0 and an empty tree. Throws CapacityError above 10 vertices.
RankDecomposition rank_width(const Graph& g, const RankWidthOptions& options = {});

// Width of `tree` as a decomposition of `g`.
int decomposition_width(const Graph& g, const SubcubicTree& tree);

// Every leaf-labelled subcubic tree with `leaves` leaves, (2k-5)!! of them
// for k >= 3. Throws CapacityError above 10 leaves.
std::vector<SubcubicTree> enumerate_subcubic_trees(int leaves);

}  // namespace lcorbit
