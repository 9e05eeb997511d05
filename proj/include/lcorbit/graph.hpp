#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcorbit {

using VertexMask = std::uint16_t;

// Simple undirected graph on at most 16 vertices stored as one adjacency
// word per vertex. Values are immutable once built; every operation returns
// a fresh graph.
//
// Invariants: rows are symmetric, the diagonal is zero and bits at or above
// order() are zero. Unused rows are zero so that defaulted comparison and
// hashing only see the meaningful part.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;
  explicit Graph(int order);

  // Throws std::invalid_argument if rows are not a valid simple graph.
  static Graph from_rows(int order, std::span<const VertexMask> rows);
  // Edges are 0-based; duplicates are ignored, loops are rejected.
  static Graph from_edges(int order,
                          std::span<const std::pair<int, int>> edges);

  static Graph complete(int order);
  static Graph path(int order);
  static Graph cycle(int order);
  // Vertex 0 is the centre.
  static Graph star(int order);

  int order() const { return order_; }
  VertexMask neighbours(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  int max_degree() const;

  // Lexicographically sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  // relabel(perm) moves vertex v to perm[v].
  Graph relabel(std::span<const int> perm) const;
  Graph with_edge_toggled(int u, int v) const;
  // Appends a vertex adjacent to the vertices in `mask`.
  Graph with_vertex_added(VertexMask mask) const;
  Graph without_vertex(int v) const;

  std::size_t hash() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend std::strong_ordering operator<=>(const Graph&,
                                          const Graph&) = default;

 private:
  friend Graph local_complement(const Graph& g, int alpha);

  void check_vertex(int v) const;

  int order_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

// E' = E xor K_{N(alpha)}. Throws std::out_of_range for a bad vertex.
Graph local_complement(const Graph& g, int alpha);

bool is_connected(const Graph& g);

// Vertices of degree exactly one.
VertexMask leaves(const Graph& g);

inline int popcount(VertexMask m) { return __builtin_popcount(m); }

}  // namespace lcorbit
