#include "lcorbit/metrics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lcorbit/canon.hpp"
#include "lcorbit/detail/colouring.hpp"
#include "oracles.hpp"

namespace lcorbit {
namespace {

SimpleGraph simple(const Graph& g) { return SimpleGraph::from_graph(g); }

SimpleGraph random_simple(std::mt19937_64& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Six-ring with self-loops on three consecutive vertices.
SimpleGraph looped_ring() {
  SimpleGraph g(6);
  for (int v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  for (int v = 0; v < 3; ++v) g.add_edge(v, v);
  return g;
}

TEST(ChromaticNumberTest, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(chromatic_number(Graph::complete(n)), n);
  EXPECT_EQ(chromatic_number(Graph::cycle(5)), 3);
  EXPECT_EQ(chromatic_number(Graph::cycle(6)), 2);
  EXPECT_EQ(chromatic_number(Graph(4)), 1);
  EXPECT_EQ(chromatic_number(looped_ring()), 2);
  EXPECT_EQ(chromatic_number(explore_unlabelled(Graph::path(4)).skeleton(false)), 2);
}

TEST(ChromaticNumberTest, MatchesExhaustiveColouring) {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 400; ++trial) {
    const SimpleGraph g = random_simple(rng, 1 + trial % 8, trial % 2 ? 0.3 : 0.7);
    ASSERT_EQ(chromatic_number(g), oracle::brute_chromatic_number(g));
  }
}

TEST(ChromaticNumberTest, SatDecisionMatchesExhaustiveColouring) {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = random_simple(rng, 2 + trial % 8, trial % 2 ? 0.4 : 0.8);
    const int chi = oracle::brute_chromatic_number(g);
    for (int k = 1; k <= g.order(); ++k) ASSERT_EQ(detail::sat_colourable(g, k), k >= chi);
  }
}

TEST(ChromaticIndexTest, Examples) {
  EXPECT_EQ(chromatic_index(Graph::star(4)), 3);
  EXPECT_EQ(chromatic_index(Graph::cycle(6)), 2);
  EXPECT_EQ(chromatic_index(Graph::cycle(5)), 3);
  EXPECT_EQ(chromatic_index(Graph::complete(4)), 3);
  EXPECT_EQ(chromatic_index(Graph::complete(5)), 5);
  EXPECT_EQ(chromatic_index(Graph(3)), 0);
  // Petersen graph is class two.
  std::vector<std::pair<int, int>> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(chromatic_index(Graph::from_edges(10, petersen)), 4);
}

TEST(ChromaticIndexTest, MatchesLineGraphColouringAndVizing) {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleGraph g = random_simple(rng, 2 + trial % 5, 0.5);
    if (g.edge_count() > 8) continue;
    const int index = chromatic_index(g);
    const SimpleGraph line = g.line_graph();
    ASSERT_EQ(index, oracle::brute_chromatic_number(line));
    if (g.edge_count() > 0) {
      ASSERT_TRUE(index == g.max_degree() || index == g.max_degree() + 1);
    }
  }
}

TEST(ChromaticNumberTest, WithinCliqueAndGreedyBounds) {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = random_simple(rng, 20 + trial % 20, 0.3);
    const int chi = chromatic_number(g);
    ASSERT_LE(chi, g.max_degree() + 1);
    // Every edge forces two colours.
    if (g.edge_count() > 0) ASSERT_GE(chi, 2);
  }
}

TEST(PlanarityTest, Examples) {
  EXPECT_FALSE(is_planar(simple(Graph::complete(5))));
  EXPECT_TRUE(is_planar(simple(Graph::complete(4))));
  const std::vector<std::pair<int, int>> k33{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                             {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  EXPECT_FALSE(is_planar(simple(Graph::from_edges(6, k33))));
  EXPECT_TRUE(is_planar(looped_ring()));
  EXPECT_TRUE(is_planar(explore_unlabelled(Graph::path(4)).skeleton(false)));
  EXPECT_TRUE(is_planar(SimpleGraph(0)));
}

TEST(PlanarityTest, SubdividedK5IsNotPlanar) {
  SimpleGraph g(10 + 5);
  int next = 5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      g.add_edge(u, next);
      g.add_edge(next++, v);
    }
  }
  EXPECT_FALSE(is_planar(g));
}

TEST(HamiltonianTest, Examples) {
  EXPECT_EQ(has_hamiltonian_cycle(simple(Graph::complete(3))), Answer::kYes);
  EXPECT_EQ(has_hamiltonian_cycle(simple(Graph::path(4))), Answer::kNo);
  EXPECT_EQ(has_hamiltonian_cycle(simple(Graph::complete(2))), Answer::kNo);
  EXPECT_EQ(has_hamiltonian_cycle(looped_ring()), Answer::kYes);
  std::vector<std::pair<int, int>> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(has_hamiltonian_cycle(simple(Graph::from_edges(10, petersen))), Answer::kNo);
}

TEST(HamiltonianTest, MatchesPermutationSearch) {
  std::mt19937_64 rng(317);
  int yes = 0;
  for (int trial = 0; trial < 900; ++trial) {
    const SimpleGraph g = random_simple(rng, 3 + trial % 7, 0.3 + 0.2 * (trial % 3));
    const bool expected = oracle::brute_hamiltonian(g);
    yes += expected ? 1 : 0;
    ASSERT_EQ(has_hamiltonian_cycle(g), expected ? Answer::kYes : Answer::kNo);
  }
  EXPECT_GT(yes, 200);
}

TEST(HamiltonianTest, BudgetExhaustionIsUnknown) {
  std::vector<std::pair<int, int>> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(has_hamiltonian_cycle(simple(Graph::from_edges(10, petersen)), 3), Answer::kUnknown);
}

TEST(OrbitShapeTest, TreesAndEulerianCircuits) {
  const Orbit p4 = explore_unlabelled(Graph::path(4));
  EXPECT_TRUE(is_tree(p4));
  EXPECT_FALSE(has_eulerian_circuit(p4));
  const Orbit star = explore_unlabelled(Graph::star(4));
  EXPECT_TRUE(is_tree(star));
  EXPECT_FALSE(has_eulerian_circuit(star));
  const Orbit k2 = explore_unlabelled(Graph::complete(2));
  EXPECT_TRUE(is_tree(k2));
  EXPECT_TRUE(has_eulerian_circuit(k2));
  EXPECT_TRUE(has_eulerian_circuit(looped_ring()));
  EXPECT_TRUE(has_eulerian_circuit(simple(Graph::complete(3))));
}

TEST(OrbitShapeTest, EulerianMatchesDegreeParity) {
  std::mt19937_64 rng(331);
  for (int trial = 0; trial < 50; ++trial) {
    const Orbit o = explore_unlabelled(oracle::random_connected_graph(rng, 4 + trial % 3, 0.5));
    const SimpleGraph s = o.skeleton(true);
    bool even = true;
    for (int v = 0; v < s.order(); ++v) {
      int d = 0;
      for (const auto& e : o.edges) d += (e.u == v) + (e.v == v);
      even = even && d % 2 == 0;
    }
    ASSERT_EQ(has_eulerian_circuit(o), even);
    if (is_tree(o) && s.order() > 1) ASSERT_FALSE(has_eulerian_circuit(o));
  }
}

TEST(OrbitAutomorphismTest, LoopsMustMapToLoops) {
  const Orbit p4 = explore_unlabelled(Graph::path(4));
  const Orbit star = explore_unlabelled(Graph::star(4));
  EXPECT_EQ(orbit_automorphism_order(star), 1U);
  EXPECT_GE(orbit_automorphism_order(p4), 1U);
}

TEST(RepresentativeTest, FewestEdges) {
  const Orbit star = explore_unlabelled(Graph::complete(4));
  const Graph rep = minimum_edge_representative(star);
  EXPECT_EQ(rep.edge_count(), 3);
  EXPECT_TRUE(are_isomorphic(rep, Graph::star(4)));
  EXPECT_EQ(minimum_edge_representative(explore_labelled(Graph::complete(4))), rep);
  const Graph ring = minimum_edge_representative(explore_unlabelled(Graph::cycle(5)));
  EXPECT_TRUE(are_isomorphic(ring, Graph::cycle(5)));
  const Orbit single = explore_unlabelled(Graph::complete(2));
  EXPECT_EQ(minimum_edge_representative(single), single.vertices[0]);
}

TEST(ClassRecordTest, SmallClasses) {
  // Star class on four qubits and the four-qubit path class.
  const ClassRecord star = class_record(explore_unlabelled(Graph::star(4)), SchmidtBounds{1, 1});
  EXPECT_EQ(star.n_qubits, 4);
  EXPECT_EQ(star.min_edges, 3);
  EXPECT_EQ(star.rank_width, 1);
  EXPECT_EQ(star.orbit_size, 2);
  EXPECT_EQ(star.orbit_edges, 2);
  EXPECT_EQ(star.chi_g, 2);
  EXPECT_EQ(star.chi_g_e, 3);
  EXPECT_EQ(star.chi_orbit, 2);
  EXPECT_EQ(star.chi_orbit_e, 1);
  EXPECT_TRUE(star.is_tree);
  EXPECT_DOUBLE_EQ(star.mean_distance, 1.0);
  EXPECT_EQ(star.diameter, 1);
  EXPECT_EQ(star.aut_order, 1U);
  EXPECT_TRUE(star.planar);
  EXPECT_TRUE(star.has_loop);
  EXPECT_FALSE(star.eulerian);
  EXPECT_EQ(star.hamiltonian, Answer::kNo);

  const ClassRecord path = class_record(explore_unlabelled(Graph::path(4)));
  EXPECT_EQ(path.orbit_size, 4);
  EXPECT_EQ(path.orbit_edges, 5);
  EXPECT_EQ(path.chi_g_e, 2);
  EXPECT_EQ(path.chi_orbit, 2);
  EXPECT_EQ(path.chi_orbit_e, 2);
  EXPECT_EQ(path.diameter, 3);
  EXPECT_EQ(path.aut_order, 1U);
  EXPECT_EQ(path.hamiltonian, Answer::kNo);
}

TEST(ClassRecordTest, RingClass) {
  const ClassRecord ring = class_record(explore_unlabelled(Graph::cycle(5)));
  EXPECT_EQ(ring.min_edges, 5);
  EXPECT_EQ(ring.rank_width, 2);
  EXPECT_EQ(ring.orbit_size, 3);
  EXPECT_EQ(ring.orbit_edges, 3);
  EXPECT_EQ(ring.chi_g, 3);
  EXPECT_EQ(ring.chi_g_e, 3);
  EXPECT_TRUE(ring.is_tree);
  EXPECT_EQ(ring.diameter, 2);
}

TEST(ClassRecordTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(337);
  for (int trial = 0; trial < 10; ++trial) {
    const Orbit o = explore_unlabelled(oracle::random_connected_graph(rng, 6, 0.4));
    const ClassRecord a = class_record(o, std::nullopt, {.execution = Execution::kSerial});
    const ClassRecord b = class_record(o, std::nullopt, {.execution = Execution::kParallel});
    EXPECT_EQ(a.chi_g, b.chi_g);
    EXPECT_EQ(a.chi_g_e, b.chi_g_e);
    EXPECT_EQ(a.rank_width, b.rank_width);
    EXPECT_EQ(a.mean_distance, b.mean_distance);
    EXPECT_EQ(a.representative, b.representative);
  }
}

}  // namespace
}  // namespace lcorbit
