#include "lcorbit/canon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>

#include "lcorbit/detail/search_tree.hpp"

namespace lcorbit {

namespace {

class StateView {
 public:
  explicit StateView(const Graph& g) : g_(g) {}
  int order() const { return g_.order(); }
  int colour(int) const { return 0; }
  template <class F>
  void for_each_neighbour(int v, F&& f) const {
    for (VertexMask m = g_.neighbours(v); m != 0; m &= m - 1) f(__builtin_ctz(m));
  }
  Graph certificate(std::span<const int> lab) const {
    return g_.relabel(to_positions(lab));
  }

 private:
  static Permutation to_positions(std::span<const int> lab) {
    Permutation perm(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) perm[lab[i]] = static_cast<int>(i);
    return perm;
  }
  const Graph& g_;
};

class OrbitGraphView {
 public:
  explicit OrbitGraphView(const SimpleGraph& g) : g_(g) {}
  int order() const { return g_.order(); }
  int colour(int v) const { return g_.has_loop(v) ? 1 : 0; }
  template <class F>
  void for_each_neighbour(int v, F&& f) const {
    for (int u : g_.neighbours(v)) f(u);
  }
  GraphCertificate certificate(std::span<const int> lab) const {
    const int n = g_.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[lab[i]] = i;
    GraphCertificate c;
    c.order = n;
    c.loops.resize(n);
    for (int i = 0; i < n; ++i) c.loops[i] = g_.has_loop(lab[i]) ? 1 : 0;
    c.edges.reserve(static_cast<std::size_t>(g_.edge_count()));
    for (int u = 0; u < n; ++u) {
      for (int v : g_.neighbours(u)) {
        if (u < v) {
          auto a = static_cast<std::uint64_t>(std::min(pos[u], pos[v]));
          auto b = static_cast<std::uint64_t>(std::max(pos[u], pos[v]));
          c.edges.push_back(a << 32 | b);
        }
      }
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
  }

 private:
  const SimpleGraph& g_;
};

Permutation positions_of(const std::vector<int>& labelling) {
  Permutation perm(labelling.size());
  for (std::size_t i = 0; i < labelling.size(); ++i) perm[labelling[i]] = static_cast<int>(i);
  return perm;
}

}  // namespace

SymmetryInfo analyse_symmetry(const Graph& g) {
  StateView view(g);
  auto result = detail::SearchTree<StateView>(view, true).run();
  SymmetryInfo info;
  info.form.perm = positions_of(result.best_labelling);
  info.form.canon = result.best_certificate;
  if (g.order() == 0) info.form.canon = g;
  if (info.form.canon == g) {
    for (int v = 0; v < g.order(); ++v) info.form.perm[v] = v;
  }
  info.class_representative =
      detail::orbit_representatives(result.generators, {}, g.order());
  info.group.generators = std::move(result.generators);
  info.group.order = result.group_order;
  return info;
}

CanonicalForm canonical_form(const Graph& g) { return analyse_symmetry(g).form; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g).canon == canonical_form(h).canon;
}

AutomorphismGroup automorphism_group(const Graph& g) {
  StateView view(g);
  auto result = detail::SearchTree<StateView>(view, false).run();
  return {std::move(result.generators), result.group_order};
}

std::vector<std::vector<int>> vertex_symmetry_classes(const Graph& g) {
  const auto group = automorphism_group(g);
  const auto reps = detail::orbit_representatives(group.generators, {}, g.order());
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) classes[reps[v]].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : classes) out.push_back(std::move(members));
  return out;
}

OrbitGraphCanonicalForm canonical_form(const SimpleGraph& g) {
  OrbitGraphView view(g);
  auto result = detail::SearchTree<OrbitGraphView>(view, true).run();
  OrbitGraphCanonicalForm out;
  out.perm = positions_of(result.best_labelling);
  out.certificate = std::move(result.best_certificate);
  if (g.order() == 0) out.certificate = GraphCertificate{};
  return out;
}

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.loop_count() != h.loop_count()) {
    return false;
  }
  auto degrees = [](const SimpleGraph& x) {
    std::vector<std::pair<int, bool>> d;
    for (int v = 0; v < x.order(); ++v) d.emplace_back(x.degree(v), x.has_loop(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  return canonical_form(g).certificate == canonical_form(h).certificate;
}

AutomorphismGroup automorphism_group(const SimpleGraph& g) {
  OrbitGraphView view(g);
  auto result = detail::SearchTree<OrbitGraphView>(view, false).run();
  return {std::move(result.generators), result.group_order};
}

std::uint64_t group_order_by_closure(const std::vector<Permutation>& generators, int n) {
  Permutation identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : generators) {
        Permutation q(n);
        for (int i = 0; i < n; ++i) q[i] = s[p[i]];
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace lcorbit
