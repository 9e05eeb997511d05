#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "lcorbit/graph.hpp"
#include "lcorbit/simple_graph.hpp"

namespace lcorbit {

// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

// Canonical representative of an isomorphism class.
// g.relabel(perm) == canon, and canon depends only on the class of g.
struct CanonicalForm {
  Graph canon;
  Permutation perm;
};

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

// Everything orbit exploration needs from one search: the canonical form and
// the symmetry classes of the input's vertices.
struct SymmetryInfo {
  CanonicalForm form;
  AutomorphismGroup group;
  // Smallest vertex in each vertex's automorphism orbit.
  std::vector<int> class_representative;
};

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);
AutomorphismGroup automorphism_group(const Graph& g);
// Vertex orbits under the automorphism group, each sorted, ordered by their
// smallest member.
std::vector<std::vector<int>> vertex_symmetry_classes(const Graph& g);
SymmetryInfo analyse_symmetry(const Graph& g);

// Canonical certificate of a graph with self-loops, where loops act as a
// vertex colour. Equal certificates <=> isomorphic (loops mapped to loops).
struct GraphCertificate {
  int order = 0;
  std::vector<char> loops;              // by canonical position
  std::vector<std::uint64_t> edges;     // sorted (a << 32 | b), a < b
  friend auto operator<=>(const GraphCertificate&, const GraphCertificate&) = default;
};

struct OrbitGraphCanonicalForm {
  GraphCertificate certificate;
  Permutation perm;
};

OrbitGraphCanonicalForm canonical_form(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);
AutomorphismGroup automorphism_group(const SimpleGraph& g);

// Order of the group generated by `generators` acting on n points, by
// breadth-first closure. Only suitable for small groups; used as a check.
std::uint64_t group_order_by_closure(const std::vector<Permutation>& generators, int n);

}  // namespace lcorbit
