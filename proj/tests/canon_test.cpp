#include "lcorbit/canon.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

namespace lcorbit {
namespace {

Permutation identity(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

TEST(CanonicalFormTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = oracle::random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.5);
    const auto perm = oracle::random_permutation(rng, n);
    const auto a = canonical_form(g);
    const auto b = canonical_form(g.relabel(perm));
    ASSERT_EQ(a.canon, b.canon);
    ASSERT_EQ(g.relabel(a.perm), a.canon);
  }
}

TEST(CanonicalFormTest, IdempotentWithIdentityPermutation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9);
    const auto c = canonical_form(g);
    const auto again = canonical_form(c.canon);
    EXPECT_EQ(again.canon, c.canon);
    EXPECT_EQ(again.perm, identity(g.order()));
  }
}

TEST(CanonicalFormTest, CompleteGraphIsFixed) {
  const auto c = canonical_form(Graph::complete(4));
  EXPECT_EQ(c.canon, Graph::complete(4));
}

TEST(CanonicalFormTest, DecidesIsomorphismLikeBruteForce) {
  // Agreement with the exhaustive oracle on random pairs with equal edge count.
  std::mt19937_64 rng(5);
  int iso = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 4 + trial % 4;
    const Graph g = oracle::random_graph(rng, n);
    Graph h = oracle::random_graph(rng, n);
    if (trial % 2 == 0) h = g.relabel(oracle::random_permutation(rng, n));
    const bool expected = oracle::brute_isomorphic(g, h);
    iso += expected ? 1 : 0;
    ASSERT_EQ(are_isomorphic(g, h), expected);
  }
  EXPECT_GT(iso, 200);
}

TEST(CanonicalFormTest, ConnectedFiveVertexGraphsFallIntoTwentyOneClasses) {
  std::vector<Graph> connected;
  for (std::uint64_t code = 0; code < (1U << 10); ++code) {
    const Graph g = oracle::graph_from_code(5, code);
    if (is_connected(g)) connected.push_back(g);
  }
  // Oracle: greedy clustering by exhaustive pairwise isomorphism.
  std::vector<Graph> reps;
  for (const Graph& g : connected) {
    bool found = false;
    for (const Graph& r : reps) {
      if (oracle::brute_isomorphic(g, r)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(g);
  }
  std::set<Graph> forms;
  for (const Graph& g : connected) forms.insert(canonical_form(g).canon);
  EXPECT_EQ(reps.size(), 21U);
  EXPECT_EQ(forms.size(), reps.size());
}

TEST(CanonicalFormTest, AgreesWithBruteForceOnClassStructure) {
  // Canonical forms partition graphs exactly as the brute-force minimum does.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = oracle::random_graph(rng, n);
    const Graph h = oracle::random_graph(rng, n);
    ASSERT_EQ(canonical_form(g).canon == canonical_form(h).canon,
              oracle::brute_canonical(g) == oracle::brute_canonical(h));
  }
}

TEST(IsomorphismTest, Examples) {
  const Graph p4 = Graph::path(4);
  const std::vector<std::pair<int, int>> other{{3, 1}, {1, 0}, {0, 2}};
  EXPECT_TRUE(are_isomorphic(p4, Graph::from_edges(4, other)));
  EXPECT_FALSE(are_isomorphic(p4, Graph::star(4)));
  EXPECT_NE(oracle::degree_sequence(Graph::cycle(5)), oracle::degree_sequence(Graph::path(5)));
  EXPECT_FALSE(are_isomorphic(Graph::cycle(5), Graph::path(5)));
  EXPECT_FALSE(are_isomorphic(Graph::path(4), Graph::path(5)));
}

TEST(IsomorphismTest, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(23);
  std::vector<Graph> sample;
  for (int i = 0; i < 60; ++i) sample.push_back(oracle::random_graph(rng, 5, 0.4));
  for (const Graph& a : sample) {
    ASSERT_TRUE(are_isomorphic(a, a));
    for (const Graph& b : sample) {
      ASSERT_EQ(are_isomorphic(a, b), are_isomorphic(b, a));
      if (!are_isomorphic(a, b)) continue;
      for (const Graph& c : sample) {
        if (are_isomorphic(b, c)) ASSERT_TRUE(are_isomorphic(a, c));
      }
    }
  }
}

TEST(AutomorphismGroupTest, Examples) {
  EXPECT_EQ(automorphism_group(Graph::complete(4)).order, 24U);
  EXPECT_EQ(oracle::brute_automorphism_count(Graph::path(4)), 2U);
  EXPECT_EQ(automorphism_group(Graph::path(4)).order, 2U);
  EXPECT_EQ(oracle::brute_automorphism_count(Graph::star(4)), 6U);
  EXPECT_EQ(automorphism_group(Graph::star(4)).order, 6U);
  EXPECT_EQ(automorphism_group(Graph::complete(16)).order, 20922789888000ULL);
  EXPECT_EQ(automorphism_group(Graph::cycle(9)).order, 18U);
}

TEST(AutomorphismGroupTest, OrderMatchesExhaustiveFilteringAndClosure) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, trial % 2 ? 0.3 : 0.6);
    const auto group = automorphism_group(g);
    ASSERT_EQ(group.order, oracle::brute_automorphism_count(g));
    ASSERT_EQ(group_order_by_closure(group.generators, n), group.order);
    for (const auto& p : group.generators) ASSERT_EQ(g.relabel(p), g);
  }
}

TEST(SymmetryClassTest, Examples) {
  EXPECT_EQ(vertex_symmetry_classes(Graph::path(4)).size(), 2U);
  EXPECT_EQ(vertex_symmetry_classes(Graph::cycle(4)).size(), 1U);
  EXPECT_EQ(vertex_symmetry_classes(Graph::complete(7)).size(), 1U);
  const auto star = vertex_symmetry_classes(Graph::star(5));
  ASSERT_EQ(star.size(), 2U);
  EXPECT_EQ(star[0], std::vector<int>{0});
}

TEST(SymmetryClassTest, TrivialGroupIffAllSingletons) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = oracle::random_graph(rng, n);
    const auto classes = vertex_symmetry_classes(g);
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    ASSERT_EQ(total, static_cast<std::size_t>(n));
    ASSERT_EQ(static_cast<int>(classes.size()) == n, automorphism_group(g).order == 1);
  }
}

SimpleGraph random_orbit_like(std::mt19937_64& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution loop(0.3);
  for (int u = 0; u < n; ++u) {
    if (loop(rng)) g.add_edge(u, u);
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph relabelled(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph h(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.has_loop(v)) h.add_edge(perm[v], perm[v]);
  }
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

TEST(OrbitGraphCanonTest, InvariantUnderRelabellingWithLoops) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 40;
    const SimpleGraph g = random_orbit_like(rng, n, trial % 2 ? 0.1 : 0.4);
    const auto perm = oracle::random_permutation(rng, n);
    ASSERT_EQ(canonical_form(g).certificate, canonical_form(relabelled(g, perm)).certificate);
    ASSERT_TRUE(are_isomorphic(g, relabelled(g, perm)));
  }
}

TEST(OrbitGraphCanonTest, LoopsAreSignificant) {
  SimpleGraph a(3);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  a.add_edge(0, 0);
  SimpleGraph b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(1, 1);
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_TRUE(are_isomorphic(a.without_loops(), b.without_loops()));
  EXPECT_EQ(automorphism_group(a).order, 1U);
  EXPECT_EQ(automorphism_group(b).order, 2U);
}

TEST(OrbitGraphCanonTest, GroupOrderMatchesStateGroupOnLooplessGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8);
    const auto as_simple = SimpleGraph::from_graph(g);
    ASSERT_EQ(automorphism_group(as_simple).order, automorphism_group(g).order);
  }
}

}  // namespace
}  // namespace lcorbit
