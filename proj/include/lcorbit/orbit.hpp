#pragma once

#include <vector>

#include "lcorbit/graph.hpp"
#include "lcorbit/parallel.hpp"
#include "lcorbit/simple_graph.hpp"

namespace lcorbit {

enum class OrbitKind { kLabelled, kUnlabelled };

// One merged orbit edge. u <= v; u == v is a self-loop. labels_from_u holds
// the vertices of graph state u whose local complementation leads to v (for
// unlabelled orbits: to a state isomorphic to v), and symmetrically.
struct OrbitEdge {
  int u = 0;
  int v = 0;
  VertexMask labels_from_u = 0;
  VertexMask labels_from_v = 0;
  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct OrbitStats {
  int vertex_count = 0;
  int edge_count = 0;  // merged edges, self-loops included
  double n_tilde = 0;  // edge_count / vertex_count
};

// The graph of graph states linked by single local complementations.
// Unlabelled orbits store canonical forms as their vertices.
struct Orbit {
  OrbitKind kind = OrbitKind::kLabelled;
  Graph seed;
  std::vector<Graph> vertices;
  std::vector<OrbitEdge> edges;  // sorted by (u, v)

  OrbitStats stats() const;
  bool has_self_loops() const;
  // Orbit as a plain graph, labels dropped.
  SimpleGraph skeleton(bool keep_loops) const;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct ExploreOptions {
  Execution execution = Execution::kParallel;
  // Unlabelled exploration only: complement one vertex per symmetry class.
  bool prune_symmetric = true;
};

// Every labelled graph reachable from `seed`. Throws DataError when the seed
// is disconnected.
Orbit explore_labelled(const Graph& seed, const ExploreOptions& options = {});
// Isomorphism classes reachable from `seed`, one canonical form each.
Orbit explore_unlabelled(const Graph& seed, const ExploreOptions& options = {});

// Merges isomorphic members of a labelled orbit. Vertices appear in order of
// first occurrence; labels are translated onto the canonical forms.
Orbit quotient_to_unlabelled(const Orbit& labelled);

struct DistanceTable {
  std::vector<std::vector<int>> hops;
  int diameter = 0;
  double mean = 0;  // over unordered distinct pairs; 0 for a single vertex
};

DistanceTable all_pairs_distances(const Orbit& o, Execution execution = Execution::kParallel);
DistanceTable all_pairs_distances(const SimpleGraph& g, Execution execution = Execution::kParallel);

// order[k] is the index of the vertex placed k-th: sorted by edge count,
// then canonical form (isomorphic states become contiguous), then the
// sorted edge list.
std::vector<int> canonical_vertex_order(const Orbit& o);
Orbit reorder_vertices(const Orbit& o, const std::vector<int>& order);
// reorder_vertices(o, canonical_vertex_order(o)).
Orbit canonicalized(const Orbit& o);

}  // namespace lcorbit
