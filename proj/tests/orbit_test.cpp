#include "lcorbit/orbit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "lcorbit/canon.hpp"
#include "lcorbit/errors.hpp"
#include "oracles.hpp"

namespace lcorbit {
namespace {

Graph spider() {
  // K_{1,4} with one leg subdivided: 6 vertices, 5 edges, maximum degree 4.
  const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}};
  return Graph::from_edges(6, e);
}

void expect_labelled_invariants(const Orbit& o) {
  std::set<Graph> distinct(o.vertices.begin(), o.vertices.end());
  ASSERT_EQ(distinct.size(), o.vertices.size());
  for (const auto& e : o.edges) {
    ASSERT_LE(e.u, e.v);
    for (int a = 0; a < 16; ++a) {
      if ((e.labels_from_u >> a) & 1U) ASSERT_EQ(local_complement(o.vertices[e.u], a), o.vertices[e.v]);
      if ((e.labels_from_v >> a) & 1U) ASSERT_EQ(local_complement(o.vertices[e.v], a), o.vertices[e.u]);
    }
  }
  for (std::size_t i = 0; i < o.vertices.size(); ++i) {
    const bool loop = std::any_of(o.edges.begin(), o.edges.end(), [&](const OrbitEdge& e) {
      return e.u == static_cast<int>(i) && e.v == static_cast<int>(i);
    });
    bool low_degree = false;
    for (int a = 0; a < o.vertices[i].order(); ++a) low_degree = low_degree || o.vertices[i].degree(a) <= 1;
    ASSERT_EQ(loop, low_degree);
  }
  ASSERT_TRUE(is_connected(o.skeleton(false)));
}

void expect_unlabelled_invariants(const Orbit& o) {
  std::set<Graph> distinct(o.vertices.begin(), o.vertices.end());
  ASSERT_EQ(distinct.size(), o.vertices.size());
  for (const Graph& g : o.vertices) ASSERT_EQ(canonical_form(g).canon, g);
  for (const auto& e : o.edges) {
    for (int a = 0; a < 16; ++a) {
      if ((e.labels_from_u >> a) & 1U) {
        ASSERT_TRUE(are_isomorphic(local_complement(o.vertices[e.u], a), o.vertices[e.v]));
      }
      if ((e.labels_from_v >> a) & 1U) {
        ASSERT_TRUE(are_isomorphic(local_complement(o.vertices[e.v], a), o.vertices[e.u]));
      }
    }
  }
  ASSERT_TRUE(is_connected(o.skeleton(false)));
}

TEST(ExploreLabelledTest, StarOrbitIsAStar) {
  const Orbit o = explore_labelled(Graph::star(4));
  ASSERT_EQ(o.vertices.size(), 5U);
  const SimpleGraph s = o.skeleton(false);
  std::vector<int> degrees;
  for (int v = 0; v < s.order(); ++v) degrees.push_back(s.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 1, 1, 4}));
  expect_labelled_invariants(o);
}

TEST(ExploreLabelledTest, SingleEdgeHasOneVertexWithBothLabelsAsLoop) {
  const Orbit o = explore_labelled(Graph::complete(2));
  ASSERT_EQ(o.vertices.size(), 1U);
  ASSERT_EQ(o.edges.size(), 1U);
  EXPECT_EQ(o.edges[0].u, 0);
  EXPECT_EQ(o.edges[0].v, 0);
  EXPECT_EQ(o.edges[0].labels_from_u, 0b11);
  EXPECT_EQ(o.edges[0].labels_from_v, 0b11);
}

TEST(ExploreLabelledTest, MatchesFixedPointClosure) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph seed = oracle::random_connected_graph(rng, 3 + trial % 4);
    const Orbit o = explore_labelled(seed);
    const auto closure = oracle::lc_closure(seed);
    ASSERT_EQ(std::set<Graph>(o.vertices.begin(), o.vertices.end()), closure);
    expect_labelled_invariants(o);
  }
  const Orbit p4 = explore_labelled(Graph::path(4));
  EXPECT_EQ(p4.vertices.size(), oracle::lc_closure(Graph::path(4)).size());
  EXPECT_EQ(quotient_to_unlabelled(p4).vertices.size(), 4U);
}

TEST(ExploreLabelledTest, RejectsDisconnectedSeed) {
  EXPECT_THROW(explore_labelled(Graph(3)), DataError);
  EXPECT_THROW(explore_unlabelled(Graph(2)), DataError);
}

TEST(ExploreUnlabelledTest, SmallClasses) {
  const Orbit p4 = explore_unlabelled(Graph::path(4));
  EXPECT_EQ(p4.stats().vertex_count, 4);
  EXPECT_EQ(p4.stats().edge_count, 5);
  EXPECT_DOUBLE_EQ(p4.stats().n_tilde, 1.25);
  expect_unlabelled_invariants(p4);

  const Orbit star = explore_unlabelled(Graph::star(4));
  EXPECT_EQ(star.stats().vertex_count, 2);
  EXPECT_EQ(star.stats().edge_count, 2);

  const Orbit ring = explore_unlabelled(Graph::cycle(5));
  EXPECT_EQ(ring.stats().vertex_count, 3);
  EXPECT_EQ(ring.stats().edge_count, 3);
  expect_unlabelled_invariants(ring);
}

TEST(ExploreUnlabelledTest, SelfLoopRecordedForIsomorphicImage) {
  // LC on a star leaf is the identity; on K_n any vertex gives a star.
  const Orbit o = canonicalized(explore_unlabelled(Graph::complete(5)));
  ASSERT_EQ(o.vertices.size(), 2U);
  ASSERT_EQ(o.edges.size(), 2U);
  EXPECT_TRUE(o.has_self_loops());
}

TEST(ExploreUnlabelledTest, PrunedEqualsUnprunedAndSerialEqualsParallel) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph seed = oracle::random_connected_graph(rng, 3 + trial % 5, 0.4);
    const Orbit reference =
        explore_unlabelled(seed, {.execution = Execution::kSerial, .prune_symmetric = false});
    expect_unlabelled_invariants(reference);
    EXPECT_EQ(explore_unlabelled(seed, {.execution = Execution::kSerial}), reference);
    for (int workers : {1, 2, 8}) {
      set_worker_count(workers);
      EXPECT_EQ(explore_unlabelled(seed, {.execution = Execution::kParallel}), reference);
      EXPECT_EQ(explore_labelled(seed, {.execution = Execution::kParallel}),
                explore_labelled(seed, {.execution = Execution::kSerial}));
    }
    set_worker_count(0);
  }
}

TEST(QuotientTest, StarAndPath) {
  const Orbit star = quotient_to_unlabelled(explore_labelled(Graph::star(4)));
  EXPECT_EQ(star.vertices.size(), 2U);
  const Orbit k2 = quotient_to_unlabelled(explore_labelled(Graph::complete(2)));
  EXPECT_EQ(k2.vertices.size(), 1U);
  EXPECT_EQ(k2.edges.size(), 1U);
  const Orbit p4 = quotient_to_unlabelled(explore_labelled(Graph::path(4)));
  EXPECT_EQ(p4.vertices.size(), 4U);
}

TEST(QuotientTest, EqualsUnlabelledExplorationAfterCanonicalOrder) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph seed = oracle::random_connected_graph(rng, 3 + trial % 4, 0.5);
    const Orbit q = canonicalized(quotient_to_unlabelled(explore_labelled(seed)));
    const Orbit c = canonicalized(explore_unlabelled(seed));
    ASSERT_EQ(q, c);
    ASSERT_LE(q.vertices.size(), explore_labelled(seed).vertices.size());
  }
}

TEST(DistanceTest, PathClassOrbit) {
  const auto d = all_pairs_distances(explore_unlabelled(Graph::path(4)));
  EXPECT_EQ(d.diameter, 3);
  EXPECT_NEAR(d.mean, 10.0 / 6.0, 1e-12);
  EXPECT_EQ(std::round(d.mean * 100) / 100, 1.67);
}

TEST(DistanceTest, SingleVertexOrbit) {
  const auto d = all_pairs_distances(explore_unlabelled(Graph::complete(2)));
  EXPECT_EQ(d.diameter, 0);
  EXPECT_EQ(d.mean, 0.0);
}

TEST(DistanceTest, MatchesFloydWarshallAndIsAMetric) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const Orbit o = explore_labelled(oracle::random_connected_graph(rng, 5, 0.5));
    const SimpleGraph s = o.skeleton(false);
    const auto d = all_pairs_distances(o, Execution::kSerial);
    ASSERT_EQ(d.hops, oracle::floyd_distances(s));
    ASSERT_EQ(all_pairs_distances(o, Execution::kParallel).hops, d.hops);
    const int n = s.order();
    for (int i = 0; i < n; ++i) {
      ASSERT_EQ(d.hops[i][i], 0);
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(d.hops[i][j], d.hops[j][i]);
        for (int k = 0; k < n; ++k) ASSERT_LE(d.hops[i][k], d.hops[i][j] + d.hops[j][k]);
      }
    }
  }
}

TEST(CanonicalOrderTest, IsomorphicStatesFormContiguousBlocks) {
  const Orbit o = canonicalized(explore_labelled(spider()));
  const Orbit c = explore_unlabelled(spider());
  ASSERT_EQ(c.stats().vertex_count, 6);
  // Block sizes equal the number of labelled members per isomorphism class.
  std::vector<Graph> classes;
  std::vector<int> sizes;
  for (const Graph& g : o.vertices) {
    const Graph k = canonical_form(g).canon;
    if (classes.empty() || classes.back() != k) {
      ASSERT_EQ(std::count(classes.begin(), classes.end(), k), 0) << "block is not contiguous";
      classes.push_back(k);
      sizes.push_back(0);
    }
    ++sizes.back();
  }
  EXPECT_EQ(classes.size(), c.vertices.size());
  int total = 0;
  for (int s : sizes) total += s;
  EXPECT_EQ(total, static_cast<int>(o.vertices.size()));
  for (std::size_t i = 1; i < o.vertices.size(); ++i) {
    ASSERT_LE(o.vertices[i - 1].edge_count(), o.vertices[i].edge_count());
  }
  expect_labelled_invariants(o);
}

TEST(CanonicalOrderTest, IndependentOfWorkerCountAndInputOrder) {
  std::mt19937_64 rng(113);
  const Graph seed = oracle::random_connected_graph(rng, 6, 0.4);
  const Orbit reference = canonicalized(explore_labelled(seed, {.execution = Execution::kSerial}));
  for (int workers : {1, 2, 8}) {
    set_worker_count(workers);
    EXPECT_EQ(canonicalized(explore_labelled(seed)), reference);
  }
  set_worker_count(0);
  const Graph relabelled_seed = reference.vertices.back();
  EXPECT_EQ(canonicalized(explore_labelled(relabelled_seed)).vertices, reference.vertices);
}

}  // namespace
}  // namespace lcorbit
