#pragma once

// Independent brute-force reference computations used only by tests. Nothing
// here calls into the search-based production code paths it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "lcorbit/graph.hpp"
#include "lcorbit/simple_graph.hpp"

namespace lcorbit::oracle {

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Graph on n vertices whose upper-triangle bits are taken from `code`.
inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> e;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, e);
}

// Minimum relabelling over all n! permutations.
inline Graph brute_canonical(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  Graph best = g;
  do {
    best = std::min(best, g.relabel(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::uint64_t brute_automorphism_count(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.relabel(p) == g) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Pairwise isomorphism by trying every permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (g.relabel(p) == h) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Closes {seed} under every local complementation by fixed-point iteration
// over the whole set (no queue, no index).
inline std::set<Graph> lc_closure(const Graph& seed) {
  std::set<Graph> members{seed};
  for (;;) {
    std::set<Graph> next = members;
    for (const Graph& g : members) {
      for (int a = 0; a < g.order(); ++a) {
        const auto nbhd = g.neighbours(a);
        Graph h = g;
        for (int u = 0; u < g.order(); ++u) {
          for (int v = u + 1; v < g.order(); ++v) {
            if (((nbhd >> u) & 1U) && ((nbhd >> v) & 1U)) h = h.with_edge_toggled(u, v);
          }
        }
        next.insert(h);
      }
    }
    if (next.size() == members.size()) return members;
    members = std::move(next);
  }
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// All-pairs hop distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_distances(const SimpleGraph& g) {
  const int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbours(u)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Smallest k admitting a proper vertex colouring, by trying every colour
// assignment in order. Tiny graphs only.
inline int brute_chromatic_number(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colour(n, 0);
    for (;;) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v : g.neighbours(u)) ok = ok && colour[u] != colour[v];
      }
      if (ok) return k;
      int i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Hamiltonian cycle by trying every vertex ordering starting at 0.
inline bool brute_hamiltonian(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.adjacent(p[i], p[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

}  // namespace lcorbit::oracle
