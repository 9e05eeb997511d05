#pragma once

#include <utility>
#include <vector>

#include "lcorbit/graph.hpp"

namespace lcorbit {

// Undirected graph of arbitrary order with optional self-loops (at most one
// per vertex) and no parallel edges. Used for orbits and their metrics.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  static SimpleGraph from_graph(const Graph& g);

  // Adding an existing edge is a no-op; u == v marks a self-loop.
  void add_edge(int u, int v);

  int order() const { return static_cast<int>(adjacency_.size()); }
  // Sorted, excludes the vertex itself.
  const std::vector<int>& neighbours(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_loop(int v) const { return loops_[v]; }
  bool adjacent(int u, int v) const;
  int max_degree() const;
  // Non-loop edges.
  int edge_count() const;
  int loop_count() const;
  bool has_loops() const { return loop_count() > 0; }

  std::vector<std::pair<int, int>> edges() const;
  SimpleGraph without_loops() const;
  // Vertices are the non-loop edges in edges() order.
  SimpleGraph line_graph() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<bool> loops_;
};

bool is_connected(const SimpleGraph& g);

}  // namespace lcorbit
