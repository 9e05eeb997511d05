#include "lcorbit/graph.hpp"

#include <algorithm>
#include <string>

namespace lcorbit {

namespace {

VertexMask full_mask(int n) {
  return n == 16 ? VertexMask{0xFFFF} : static_cast<VertexMask>((1U << n) - 1U);
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [0, 16], got " +
                                std::to_string(order));
  }
}

Graph Graph::from_rows(int order, std::span<const VertexMask> rows) {
  Graph g(order);
  if (static_cast<int>(rows.size()) != order) {
    throw std::invalid_argument("row count does not match graph order");
  }
  const VertexMask mask = full_mask(order);
  for (int v = 0; v < order; ++v) {
    if ((rows[v] & ~mask) != 0 || ((rows[v] >> v) & 1U)) {
      throw std::invalid_argument("row " + std::to_string(v) +
                                  " has bits outside the graph or on the "
                                  "diagonal");
    }
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int order,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self-edges are not allowed in a graph state");
    }
    g.rows_[u] |= static_cast<VertexMask>(1U << v);
    g.rows_[v] |= static_cast<VertexMask>(1U << u);
  }
  return g;
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int v = 0; v < order; ++v) {
    g.rows_[v] = full_mask(order) & static_cast<VertexMask>(~(1U << v));
  }
  return g;
}

Graph Graph::path(int order) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < order; ++v) e.emplace_back(v, v + 1);
  return from_edges(order, e);
}

Graph Graph::cycle(int order) {
  if (order < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < order; ++v) e.emplace_back(v, (v + 1) % order);
  return from_edges(order, e);
}

Graph Graph::star(int order) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < order; ++v) e.emplace_back(0, v);
  return from_edges(order, e);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return popcount(rows_[v]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, popcount(rows_[v]));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  Graph g(order_);
  for (int u = 0; u < order_; ++u) {
    VertexMask row = 0;
    for (VertexMask m = rows_[u]; m != 0; m &= m - 1) {
      row |= static_cast<VertexMask>(1U << perm[__builtin_ctz(m)]);
    }
    g.rows_[perm[u]] = row;
  }
  return g;
}

Graph Graph::with_edge_toggled(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-edges are not allowed");
  Graph g = *this;
  g.rows_[u] ^= static_cast<VertexMask>(1U << v);
  g.rows_[v] ^= static_cast<VertexMask>(1U << u);
  return g;
}

Graph Graph::with_vertex_added(VertexMask mask) const {
  if (order_ == kMaxVertices) {
    throw std::length_error("graph already has 16 vertices");
  }
  if ((mask & ~full_mask(order_)) != 0) {
    throw std::invalid_argument("neighbour mask refers to missing vertices");
  }
  Graph g = *this;
  const int v = order_;
  g.order_ = order_ + 1;
  g.rows_[v] = mask;
  for (VertexMask m = mask; m != 0; m &= m - 1) {
    g.rows_[__builtin_ctz(m)] |= static_cast<VertexMask>(1U << v);
  }
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  Graph g(order_ - 1);
  const VertexMask low = static_cast<VertexMask>((1U << v) - 1U);
  int target = 0;
  for (int u = 0; u < order_; ++u) {
    if (u == v) continue;
    const VertexMask r = rows_[u];
    g.rows_[target++] =
        static_cast<VertexMask>((r & low) | ((r >> 1) & ~low));
  }
  return g;
}

std::size_t Graph::hash() const {
  // FNV-1a over the used rows.
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(order_);
  for (int v = 0; v < order_; ++v) {
    h ^= rows_[v];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(order_));
  }
}

Graph local_complement(const Graph& g, int alpha) {
  if (alpha < 0 || alpha >= g.order()) {
    throw std::out_of_range("local complementation vertex " +
                            std::to_string(alpha) + " out of range");
  }
  const VertexMask nbhd = g.neighbours(alpha);
  Graph out = g;
  for (VertexMask m = nbhd; m != 0; m &= m - 1) {
    const int v = __builtin_ctz(m);
    out.rows_[v] ^= nbhd & static_cast<VertexMask>(~(1U << v));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) {
      next |= g.neighbours(__builtin_ctz(m));
    }
    frontier = next & static_cast<VertexMask>(~seen);
    seen |= next;
  }
  return popcount(seen) == g.order();
}

VertexMask leaves(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (popcount(g.neighbours(v)) == 1) out |= static_cast<VertexMask>(1U << v);
  }
  return out;
}

}  // namespace lcorbit
