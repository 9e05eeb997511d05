#include "lcorbit/census.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "lcorbit/errors.hpp"
#include "oracles.hpp"

namespace lcorbit {
namespace {

const std::string kCatalogue = LCORBIT_DATA_DIR "/table2.csv";

const std::string kHeader =
    "class,qubits,min_edges,schmidt_lower,schmidt_upper,rank_width,orbit_size,orbit_edges,chi_g,"
    "chi_g_e,chi_orbit,chi_orbit_e,tree,mean_distance,diameter,aut,planar,loop,eulerian,hamiltonian\n";

std::set<Graph> brute_classes_of_graphs(int n) {
  std::set<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
    out.insert(oracle::brute_canonical(oracle::graph_from_code(n, code)));
  }
  return out;
}

// LC classes as sets of canonical forms, from closures of every connected graph.
std::set<std::set<Graph>> brute_lc_classes(int n) {
  std::set<std::set<Graph>> out;
  std::set<Graph> seen;
  for (const Graph& g : brute_classes_of_graphs(n)) {
    if (!is_connected(g) || seen.contains(g)) continue;
    std::set<Graph> cls;
    for (const Graph& h : oracle::lc_closure(g)) cls.insert(oracle::brute_canonical(h));
    seen.insert(cls.begin(), cls.end());
    out.insert(cls);
  }
  return out;
}

TEST(AllGraphsTest, MatchesBruteForceUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto brute = brute_classes_of_graphs(n);
    std::set<Graph> fast;
    for (const Graph& g : all_graphs(n)) fast.insert(oracle::brute_canonical(g));
    EXPECT_EQ(fast, brute) << n;
    EXPECT_EQ(all_graphs(n).size(), brute.size());
  }
}

TEST(AllGraphsTest, KnownCounts) {
  const std::array<std::size_t, 8> all{1, 1, 2, 4, 11, 34, 156, 1044};
  const std::array<std::size_t, 8> connected{1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(all_graphs(n).size(), all[n]);
    EXPECT_EQ(connected_graphs(n).size(), connected[n]);
  }
  EXPECT_THROW(all_graphs(17), CapacityError);
}

TEST(AllGraphsTest, SerialAndParallelAgree) {
  set_worker_count(3);
  EXPECT_EQ(all_graphs(6, Execution::kSerial), all_graphs(6, Execution::kParallel));
  set_worker_count(0);
}

TEST(CensusTest, ClassesMatchClosureOracle) {
  for (int n = 2; n <= 6; ++n) {
    const Census census = enumerate_classes(n, {.labelled_summary = false});
    std::set<std::set<Graph>> fast;
    for (const auto& c : census.classes) {
      std::set<Graph> cls;
      for (const Graph& g : c.orbit.vertices) cls.insert(oracle::brute_canonical(g));
      fast.insert(cls);
    }
    EXPECT_EQ(fast, brute_lc_classes(n)) << n;
  }
}

TEST(CensusTest, ClassCounts) {
  const std::map<int, std::size_t> counts{{2, 1}, {3, 1}, {4, 2}, {5, 4}, {6, 11}};
  for (const auto& [n, count] : counts) EXPECT_EQ(enumerate_classes(n).classes.size(), count);
}

TEST(CensusTest, LabelledMembersPartitionConnectedGraphs) {
  const std::map<int, std::uint64_t> labelled_connected{{2, 1}, {3, 4}, {4, 38}, {5, 728}, {6, 26704}};
  for (const auto& [n, total] : labelled_connected) {
    std::uint64_t sum = 0;
    for (const auto& c : enumerate_classes(n).classes) {
      sum += c.labelled_members;
      EXPECT_EQ(c.labelled_orbits * static_cast<std::uint64_t>(c.labelled.size), c.labelled_members);
    }
    EXPECT_EQ(sum, total) << n;
  }
}

TEST(CensusTest, LabelledOrbitsOfPathClass) {
  const Census census = enumerate_classes(4);
  ASSERT_EQ(census.classes.size(), 2U);
  const CensusClass& path = census.classes[1];
  EXPECT_EQ(path.record.min_edges, 3);
  EXPECT_EQ(path.labelled_orbits, 3U);
  const auto orbits = enumerate_labelled_orbits(path);
  ASSERT_EQ(orbits.size(), 3U);
  std::size_t members = 0;
  for (const auto& o : orbits) {
    members += o.vertices.size();
    EXPECT_EQ(o.vertices.size(), static_cast<std::size_t>(path.labelled.size));
  }
  EXPECT_EQ(members, path.labelled_members);
  for (const auto& row : orbit_isomorphism_matrix(orbits, false)) {
    for (bool iso : row) EXPECT_TRUE(iso);
  }
}

TEST(CensusTest, StarClassHasOneLabelledOrbit) {
  for (int n = 3; n <= 6; ++n) {
    const Census census = enumerate_classes(n);
    const CensusClass& star = census.classes.front();
    EXPECT_EQ(star.record.min_edges, n - 1);
    EXPECT_EQ(star.record.orbit_size, 2);
    EXPECT_EQ(star.labelled_orbits, 1U);
    EXPECT_EQ(star.labelled.size, n + 1);
    EXPECT_EQ(enumerate_labelled_orbits(star).size(), 1U);
  }
}

TEST(CensusTest, RepresentativeHasMinimumEdges) {
  for (const auto& c : enumerate_classes(6).classes) {
    EXPECT_EQ(c.representative.edge_count(), c.record.min_edges);
    for (const Graph& g : c.orbit.vertices) EXPECT_GE(g.edge_count(), c.record.min_edges);
    EXPECT_TRUE(std::find(c.orbit.vertices.begin(), c.orbit.vertices.end(), c.representative) !=
                c.orbit.vertices.end());
  }
}

TEST(CensusTest, RejectsOutOfRangeSizes) {
  EXPECT_THROW(enumerate_classes(1), DataError);
  EXPECT_THROW(enumerate_classes(8), CapacityError);
  EXPECT_THROW(enumerate_classes(9, {.long_run = true}), CapacityError);
}

TEST(CatalogueTest, LoadsShippedTable) {
  const auto rows = load_catalogue(kCatalogue);
  ASSERT_EQ(rows.size(), 43U);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].class_index, static_cast<int>(i) + 3);
    const auto& r = rows[i].record;
    ASSERT_TRUE(r.schmidt);
    EXPECT_LE(r.schmidt->lower, r.schmidt->upper);
    EXPECT_GE(r.schmidt->lower, 1);
    EXPECT_LE(r.schmidt->upper, r.n_qubits - 1);
    EXPECT_EQ(fingerprint_match(r, rows), std::vector<int>{rows[i].class_index});
  }
}

TEST(CatalogueTest, MatchesComputedClassesUpToSix) {
  const auto rows = load_catalogue(kCatalogue);
  std::set<int> seen;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, {.labelled_summary = false}).classes) {
      const auto match = fingerprint_match(c.record, rows);
      ASSERT_EQ(match.size(), 1U);
      seen.insert(match[0]);
      EXPECT_TRUE(row_mismatches(c.record, rows[match[0] - 3].record).empty()) << match[0];
    }
  }
  EXPECT_EQ(seen.size(), 17U);
  EXPECT_EQ(*seen.rbegin(), 19);
}

TEST(CatalogueTest, FabricatedRecordMatchesNothing) {
  ClassRecord r = load_catalogue(kCatalogue)[9].record;
  r.orbit_edges += 1;
  EXPECT_TRUE(fingerprint_match(r, load_catalogue(kCatalogue)).empty());
}

TEST(CatalogueTest, RejectsMalformedInput) {
  const std::string row = "3,4,3,1,1,1,2,2,2,3,2,1,Y,1,1,1,Y,Y,N,N\n";
  EXPECT_EQ(parse_catalogue(kHeader + row).size(), 1U);
  EXPECT_EQ(parse_catalogue("# comment\n" + kHeader + "\n" + row).size(), 1U);
  EXPECT_THROW(parse_catalogue(""), DataError);
  EXPECT_THROW(parse_catalogue("class,qubits\n" + row), DataError);
  EXPECT_THROW(parse_catalogue(kHeader + "3,4,3\n"), DataError);
  EXPECT_THROW(parse_catalogue(kHeader + "3,4,x,1,1,1,2,2,2,3,2,1,Y,1,1,1,Y,Y,N,N\n"), DataError);
  EXPECT_THROW(parse_catalogue(kHeader + "3,4,3,1,1,1,2,2,2,3,2,1,maybe,1,1,1,Y,Y,N,N\n"), DataError);
  EXPECT_THROW(parse_catalogue(kHeader + "3,4,3,2,1,1,2,2,2,3,2,1,Y,1,1,1,Y,Y,N,N\n"), DataError);
  EXPECT_THROW(parse_catalogue(kHeader + "3,4,3,1,1,1,2,2,2,3,2,1,Y,far,1,1,Y,Y,N,N\n"), DataError);
  EXPECT_THROW(load_catalogue("/nonexistent/table.csv"), DataError);
}

TEST(TwoPlaceMatchTest, AcceptsRoundedOrTruncated) {
  EXPECT_TRUE(two_place_match(2.83721, 2.84));
  EXPECT_TRUE(two_place_match(2.83721, 2.83));
  EXPECT_TRUE(two_place_match(3.05501, 3.05));
  EXPECT_TRUE(two_place_match(1.5, 1.5));
  EXPECT_FALSE(two_place_match(2.83721, 2.82));
  EXPECT_FALSE(two_place_match(2.5, 2.6));
}

TEST(PearsonTest, HandComputedValues) {
  EXPECT_NEAR(pearson({1, 2, 3}, {2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(pearson({1, 2, 3}, {3, 2, 1}), -1.0, 1e-12);
  EXPECT_NEAR(pearson({1, 2, 3}, {1, 3, 2}), 0.5, 1e-12);
  EXPECT_NEAR(pearson({0, 0, 1, 1}, {0, 1, 0, 1}), 0.0, 1e-12);
}

TEST(PearsonTest, Errors) {
  EXPECT_THROW(pearson({1, 2}, {1, 2, 3}), DataError);
  EXPECT_THROW(pearson({1}, {1}), DataError);
  EXPECT_THROW(pearson({1, 1, 1}, {1, 2, 3}), DataError);
}

TEST(PearsonTest, InvariantUnderAffineMaps) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(20), ys(20), zs(20);
    for (int i = 0; i < 20; ++i) {
      xs[i] = normal(rng);
      ys[i] = xs[i] + normal(rng);
      zs[i] = 3 * ys[i] - 7;
    }
    const double r = pearson(xs, ys);
    EXPECT_LE(std::abs(r), 1.0);
    EXPECT_NEAR(pearson(xs, zs), r, 1e-12);
    EXPECT_NEAR(pearson(ys, xs), r, 1e-12);
  }
}

TEST(CorrelationReportTest, AgreesWithDirectComputation) {
  const auto rows = load_catalogue(kCatalogue);
  std::vector<Census> censuses;
  for (int n = 4; n <= 6; ++n) censuses.push_back(enumerate_classes(n));
  std::vector<const CensusClass*> classes;
  std::vector<double> es;
  std::vector<double> edges;
  std::vector<double> labelled_diameter;
  for (auto& census : censuses) {
    for (auto& c : census.classes) {
      c.record.schmidt = rows[fingerprint_match(c.record, rows).at(0) - 3].record.schmidt;
      classes.push_back(&c);
      es.push_back((c.record.schmidt->lower + c.record.schmidt->upper) / 2.0);
      edges.push_back(c.record.min_edges);
      labelled_diameter.push_back(c.labelled.diameter);
    }
  }
  const auto report = correlation_report(classes);
  EXPECT_EQ(report.entries.size(), 13U);
  EXPECT_EQ(report.classes, 17U);
  EXPECT_EQ(report.n_min, 4);
  EXPECT_EQ(report.n_max, 6);
  EXPECT_NEAR(report.get("E_S", "|e|").r, pearson(es, edges), 1e-12);
  EXPECT_NEAR(report.get("max d^L", "E_S").r, pearson(labelled_diameter, es), 1e-12);
  EXPECT_EQ(report.get("E_S", "|e|").samples, 17U);
  EXPECT_THROW(report.get("E_S", "nothing"), std::out_of_range);
}

// Six vertices on a ring, the first three carrying self-loops.
Orbit looped_ring() {
  Orbit o;
  o.kind = OrbitKind::kUnlabelled;
  for (int i = 0; i < 6; ++i) o.vertices.push_back(Graph(i + 1));
  for (int i = 0; i < 3; ++i) o.edges.push_back({i, i, 1, 1});
  for (int i = 0; i < 6; ++i) o.edges.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6), 1, 1});
  std::sort(o.edges.begin(), o.edges.end(), [](const OrbitEdge& a, const OrbitEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return o;
}

TEST(StationaryTest, LoopedRing) {
  const auto s = stationary_distribution(looped_ring());
  const std::vector<double> expected{4 / 18.0, 4 / 18.0, 4 / 18.0, 2 / 18.0, 2 / 18.0, 2 / 18.0};
  ASSERT_EQ(s.pi.size(), 6U);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(s.pi[i], expected[i], 1e-15);
  EXPECT_NEAR(s.tv_from_uniform, 1.0 / 6, 1e-12);
}

TEST(StationaryTest, RegularOrbitIsUniform) {
  Orbit o = looped_ring();
  std::erase_if(o.edges, [](const OrbitEdge& e) { return e.u == e.v; });
  const auto s = stationary_distribution(o);
  for (double p : s.pi) EXPECT_NEAR(p, 1.0 / 6, 1e-15);
  EXPECT_NEAR(s.tv_from_uniform, 0.0, 1e-15);
}

// Lazy walk iterated to convergence; a self-loop holds two of the vertex's
// edge ends.
std::vector<double> power_iteration(const Orbit& o) {
  const int n = static_cast<int>(o.vertices.size());
  std::vector<std::vector<std::pair<int, double>>> out(n);
  std::vector<double> degree(n, 0);
  for (const auto& e : o.edges) {
    if (e.u == e.v) {
      degree[e.u] += 2;
    } else {
      degree[e.u] += 1;
      degree[e.v] += 1;
    }
  }
  for (const auto& e : o.edges) {
    if (e.u == e.v) {
      out[e.u].push_back({e.u, 2 / degree[e.u]});
    } else {
      out[e.u].push_back({e.v, 1 / degree[e.u]});
      out[e.v].push_back({e.u, 1 / degree[e.v]});
    }
  }
  std::vector<double> pi(n, 1.0 / n);
  for (int step = 0; step < 200000; ++step) {
    std::vector<double> next(n, 0);
    for (int v = 0; v < n; ++v) {
      next[v] += pi[v] / 2;
      for (auto [u, p] : out[v]) next[u] += pi[v] * p / 2;
    }
    double change = 0;
    for (int v = 0; v < n; ++v) change += std::abs(next[v] - pi[v]);
    pi = std::move(next);
    if (change < 1e-15) break;
  }
  return pi;
}

TEST(StationaryTest, MatchesPowerIteration) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, {.labelled_summary = false}).classes) {
      const auto s = stationary_distribution(c.orbit);
      const auto oracle = power_iteration(c.orbit);
      double sum = 0;
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        EXPECT_NEAR(s.pi[i], oracle[i], 1e-10);
        sum += s.pi[i];
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

// Tries every bijection; only for skeletons with at most eight vertices.
bool brute_skeleton_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < a.order() && same; ++u) {
      same = a.has_loop(u) == b.has_loop(p[u]);
      for (int v = u + 1; v < a.order() && same; ++v) same = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

TEST(IsomorphismMatrixTest, SymmetricAndMatchesBruteForce) {
  std::vector<Orbit> orbits;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, {.labelled_summary = false}).classes) orbits.push_back(c.orbit);
  }
  for (bool strip : {false, true}) {
    const auto m = orbit_isomorphism_matrix(orbits, strip);
    ASSERT_EQ(m.size(), orbits.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_TRUE(m[i][i]);
      for (std::size_t j = 0; j < m.size(); ++j) {
        EXPECT_EQ(m[i][j], m[j][i]);
        const auto a = orbits[i].skeleton(!strip);
        const auto b = orbits[j].skeleton(!strip);
        if (a.order() <= 8 && b.order() <= 8) EXPECT_EQ(m[i][j], brute_skeleton_isomorphic(a, b));
      }
    }
  }
}

}  // namespace
}  // namespace lcorbit
