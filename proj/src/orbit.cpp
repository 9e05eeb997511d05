#include "lcorbit/orbit.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "lcorbit/canon.hpp"
#include "lcorbit/errors.hpp"

namespace lcorbit {

namespace {

VertexMask bit(int v) { return static_cast<VertexMask>(1U << v); }

class EdgeAccumulator {
 public:
  void add(int from, int to, VertexMask labels) {
    const int u = std::min(from, to);
    const int v = std::max(from, to);
    auto& e = edges_[static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v)];
    e.u = u;
    e.v = v;
    if (u == v) {
      e.labels_from_u |= labels;
      e.labels_from_v |= labels;
    } else if (from == u) {
      e.labels_from_u |= labels;
    } else {
      e.labels_from_v |= labels;
    }
  }

  std::vector<OrbitEdge> sorted() const {
    std::vector<OrbitEdge> out;
    out.reserve(edges_.size());
    for (const auto& [key, e] : edges_) out.push_back(e);
    std::sort(out.begin(), out.end(),
              [](const OrbitEdge& a, const OrbitEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, OrbitEdge> edges_;
};

struct Image {
  VertexMask labels;
  Graph graph;
};

std::vector<Image> expand_labelled(const Graph& g) {
  std::vector<Image> out;
  out.reserve(g.order());
  for (int a = 0; a < g.order(); ++a) out.push_back({bit(a), local_complement(g, a)});
  return out;
}

std::vector<Image> expand_unlabelled(const Graph& g, bool prune) {
  std::vector<Image> out;
  if (!prune) {
    for (int a = 0; a < g.order(); ++a) {
      out.push_back({bit(a), canonical_form(local_complement(g, a)).canon});
    }
    return out;
  }
  for (const auto& cls : vertex_symmetry_classes(g)) {
    VertexMask labels = 0;
    for (int a : cls) labels |= bit(a);
    out.push_back({labels, canonical_form(local_complement(g, cls.front())).canon});
  }
  return out;
}

template <class Expand>
Orbit explore(OrbitKind kind, const Graph& seed, const Graph& start, Expand expand,
              Execution execution) {
  Orbit o;
  o.kind = kind;
  o.seed = seed;
  o.vertices.push_back(start);
  std::unordered_map<Graph, int, GraphHash> index{{start, 0}};
  EdgeAccumulator edges;

  auto merge = [&](int from, const std::vector<Image>& images) {
    for (const Image& im : images) {
      auto [it, inserted] = index.try_emplace(im.graph, static_cast<int>(o.vertices.size()));
      if (inserted) o.vertices.push_back(im.graph);
      edges.add(from, it->second, im.labels);
    }
  };

  if (execution == Execution::kSerial) {
    for (std::size_t i = 0; i < o.vertices.size(); ++i) {
      merge(static_cast<int>(i), expand(o.vertices[i]));
    }
  } else {
    // Each BFS generation is expanded concurrently, then merged in index
    // order, so indices match the serial reference exactly.
    std::size_t begin = 0;
    while (begin < o.vertices.size()) {
      const std::size_t end = o.vertices.size();
      std::vector<std::vector<Image>> results(end - begin);
      const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
      for (std::int64_t k = 0; k < count; ++k) {
        results[k] = expand(o.vertices[begin + k]);
      }
      for (std::size_t k = 0; k < results.size(); ++k) {
        merge(static_cast<int>(begin + k), results[k]);
      }
      begin = end;
    }
  }
  o.edges = edges.sorted();
  return o;
}

void require_connected(const Graph& seed) {
  if (seed.order() == 0) throw DataError("orbit seed has no vertices");
  if (!is_connected(seed)) {
    throw DataError("orbit seed must be a connected graph");
  }
}

}  // namespace

OrbitStats Orbit::stats() const {
  OrbitStats s;
  s.vertex_count = static_cast<int>(vertices.size());
  s.edge_count = static_cast<int>(edges.size());
  s.n_tilde = s.vertex_count == 0 ? 0.0 : static_cast<double>(s.edge_count) / s.vertex_count;
  return s;
}

bool Orbit::has_self_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](const OrbitEdge& e) { return e.u == e.v; });
}

SimpleGraph Orbit::skeleton(bool keep_loops) const {
  SimpleGraph g(static_cast<int>(vertices.size()));
  for (const auto& e : edges) {
    if (e.u != e.v || keep_loops) g.add_edge(e.u, e.v);
  }
  return g;
}

Orbit explore_labelled(const Graph& seed, const ExploreOptions& options) {
  require_connected(seed);
  return explore(OrbitKind::kLabelled, seed, seed, expand_labelled, options.execution);
}

Orbit explore_unlabelled(const Graph& seed, const ExploreOptions& options) {
  require_connected(seed);
  const bool prune = options.prune_symmetric;
  return explore(OrbitKind::kUnlabelled, seed, canonical_form(seed).canon,
                 [prune](const Graph& g) { return expand_unlabelled(g, prune); },
                 options.execution);
}

Orbit quotient_to_unlabelled(const Orbit& labelled) {
  const auto n = static_cast<std::int64_t>(labelled.vertices.size());
  std::vector<CanonicalForm> forms(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (std::int64_t i = 0; i < n; ++i) forms[i] = canonical_form(labelled.vertices[i]);

  Orbit q;
  q.kind = OrbitKind::kUnlabelled;
  q.seed = labelled.seed;
  std::unordered_map<Graph, int, GraphHash> index;
  std::vector<int> class_of(n);
  for (std::int64_t i = 0; i < n; ++i) {
    auto [it, inserted] = index.try_emplace(forms[i].canon, static_cast<int>(q.vertices.size()));
    if (inserted) q.vertices.push_back(forms[i].canon);
    class_of[i] = it->second;
  }
  auto translate = [&](int member, VertexMask labels) {
    VertexMask out = 0;
    for (VertexMask m = labels; m != 0; m &= m - 1) out |= bit(forms[member].perm[__builtin_ctz(m)]);
    return out;
  };
  EdgeAccumulator edges;
  for (const auto& e : labelled.edges) {
    const int cu = class_of[e.u];
    const int cv = class_of[e.v];
    const VertexMask from_u = translate(e.u, e.labels_from_u);
    const VertexMask from_v = translate(e.v, e.labels_from_v);
    if (cu == cv) {
      edges.add(cu, cu, from_u | from_v);
    } else {
      edges.add(cu, cv, from_u);
      edges.add(cv, cu, from_v);
    }
  }
  q.edges = edges.sorted();
  return q;
}

DistanceTable all_pairs_distances(const SimpleGraph& g, Execution execution) {
  const int n = g.order();
  DistanceTable t;
  t.hops.assign(n, std::vector<int>(n, -1));
  auto bfs = [&](int source) {
    auto& row = t.hops[source];
    std::vector<int> queue{source};
    row[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbours(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  };
  if (execution == Execution::kSerial) {
    for (int s = 0; s < n; ++s) bfs(s);
  } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
    for (int s = 0; s < n; ++s) bfs(s);
  }
  long long total = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (t.hops[u][v] < 0) throw DataError("distance table requested for a disconnected graph");
      total += t.hops[u][v];
      t.diameter = std::max(t.diameter, t.hops[u][v]);
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  t.mean = n > 1 ? static_cast<double>(total) / pairs : 0.0;
  return t;
}

DistanceTable all_pairs_distances(const Orbit& o, Execution execution) {
  return all_pairs_distances(o.skeleton(false), execution);
}

std::vector<int> canonical_vertex_order(const Orbit& o) {
  struct Key {
    int edge_count;
    Graph canon;
    std::vector<std::pair<int, int>> edges;
  };
  const auto n = static_cast<std::int64_t>(o.vertices.size());
  std::vector<Key> keys(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (std::int64_t i = 0; i < n; ++i) {
    const Graph& g = o.vertices[i];
    keys[i] = {g.edge_count(),
               o.kind == OrbitKind::kUnlabelled ? g : canonical_form(g).canon, g.edges()};
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(keys[a].edge_count, keys[a].canon, keys[a].edges) <
           std::tie(keys[b].edge_count, keys[b].canon, keys[b].edges);
  });
  return order;
}

Orbit reorder_vertices(const Orbit& o, const std::vector<int>& order) {
  std::vector<int> new_index(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_index[order[k]] = static_cast<int>(k);
  Orbit out;
  out.kind = o.kind;
  out.seed = o.seed;
  out.vertices.reserve(order.size());
  for (int old : order) out.vertices.push_back(o.vertices[old]);
  for (const auto& e : o.edges) {
    OrbitEdge f{new_index[e.u], new_index[e.v], e.labels_from_u, e.labels_from_v};
    if (f.u > f.v) {
      std::swap(f.u, f.v);
      std::swap(f.labels_from_u, f.labels_from_v);
    }
    out.edges.push_back(f);
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const OrbitEdge& a, const OrbitEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

Orbit canonicalized(const Orbit& o) { return reorder_vertices(o, canonical_vertex_order(o)); }

}  // namespace lcorbit
