#include "lcorbit/io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <numeric>
#include <random>
#include <sstream>

#include "lcorbit/canon.hpp"
#include "lcorbit/errors.hpp"
#include "oracles.hpp"

namespace lcorbit {
namespace {

TEST(Graph6Test, HandEncodedExamples) {
  EXPECT_EQ(encode_graph6(Graph::complete(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph::complete(3)), "Bw");
  EXPECT_EQ(encode_graph6(Graph::path(3)), "Bg");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("Bw"), Graph::complete(3));
  EXPECT_EQ(parse_graph6("Bg"), Graph::path(3));
}

TEST(Graph6Test, RoundTripsEveryConnectedGraphUpToFive) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const Graph g = oracle::graph_from_code(n, code);
      if (!is_connected(g)) continue;
      const std::string text = encode_graph6(g);
      ASSERT_EQ(parse_graph6(text), g);
      ASSERT_EQ(encode_graph6(parse_graph6(text)), text);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1 + 1 + 4 + 38 + 728);
}

TEST(Graph6Test, RoundTripsLargerRandomGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 6 + trial % 11);
    ASSERT_EQ(parse_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6Test, RejectsMalformedText) {
  EXPECT_THROW(parse_graph6(""), DataError);
  EXPECT_THROW(parse_graph6("A"), DataError);
  EXPECT_THROW(parse_graph6("Bww"), DataError);
  EXPECT_THROW(parse_graph6("A "), DataError);
  EXPECT_THROW(parse_graph6("A`"), DataError);  // padding bit set
  try {
    parse_graph6("Bw\x01");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos);
  }
  EXPECT_THROW(parse_graph6("~??~"), CapacityError);
  EXPECT_THROW(parse_graph6("P" + std::string(23, '?')), CapacityError);
}

TEST(EdgeListTest, ParsesOneBasedPairs) {
  EXPECT_EQ(parse_edge_list("# path\n1 2\n\n2 3\n"), Graph::path(3));
  EXPECT_EQ(parse_edge_list("1 2\n1 3\n1 4\n"), Graph::star(4));
  EXPECT_THROW(parse_edge_list(""), DataError);
  EXPECT_THROW(parse_edge_list("0 1\n"), DataError);
  EXPECT_THROW(parse_edge_list("1 1\n"), DataError);
  EXPECT_THROW(parse_edge_list("1 2 3\n"), DataError);
  EXPECT_THROW(parse_edge_list("1 x\n"), DataError);
  EXPECT_THROW(parse_edge_list("1 17\n"), CapacityError);
}

TEST(GraphFileTest, DetectsFormat) {
  const auto dir = std::filesystem::temp_directory_path() / "lcorbit_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "k3.g6", "Bw\n");
  write_text_file(dir / "p3.txt", "1 2\n2 3\n");
  EXPECT_EQ(read_graph_file(dir / "k3.g6"), Graph::complete(3));
  EXPECT_EQ(read_graph_file(dir / "p3.txt"), Graph::path(3));
  EXPECT_THROW(read_graph_file(dir / "missing"), DataError);
  std::filesystem::remove_all(dir);
}

TEST(OrbitDocumentTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 3 + trial % 4);
    for (const Orbit& o : {explore_labelled(g), explore_unlabelled(g)}) {
      const std::string text = write_orbit_document(o);
      const OrbitDocument doc = read_orbit_document(text);
      EXPECT_EQ(doc.orbit, canonicalized(o));
      EXPECT_FALSE(doc.metrics);
      EXPECT_EQ(write_orbit_document(doc.orbit), text);
    }
  }
}

TEST(OrbitDocumentTest, CarriesMetrics) {
  const Orbit o = explore_unlabelled(Graph::path(5));
  const ClassRecord r = class_record(o, SchmidtBounds{2, 2});
  const std::string text = write_orbit_document(o, r);
  const OrbitDocument doc = read_orbit_document(text);
  ASSERT_TRUE(doc.metrics);
  EXPECT_EQ(*doc.metrics, r);
  EXPECT_EQ(write_orbit_document(doc.orbit, doc.metrics), text);
  EXPECT_EQ(read_class_record(write_class_record(r)), r);
}

TEST(OrbitDocumentTest, RejectsBadDocuments) {
  const std::string good = write_orbit_document(explore_labelled(Graph::path(4)));
  EXPECT_THROW(read_orbit_document("{"), DataError);
  EXPECT_THROW(read_orbit_document("{}"), DataError);
  std::string v2 = good;
  v2.replace(v2.find("\"schema_version\": 1"), 19, "\"schema_version\": 2");
  EXPECT_THROW(read_orbit_document(v2), DataError);
  std::string kind = good;
  kind.replace(kind.find("\"labelled\""), 10, "\"weird\"");
  EXPECT_THROW(read_orbit_document(kind), DataError);
}

TEST(OrbitDocumentTest, RejectsNonCanonicalOrder) {
  // Swaps the first and last vertex texts in a valid document.
  const Orbit o = canonicalized(explore_labelled(Graph::path(4)));
  std::string text = write_orbit_document(o);
  const std::string first = "\"" + encode_graph6(o.vertices.front()) + "\"";
  const std::string last = "\"" + encode_graph6(o.vertices.back()) + "\"";
  ASSERT_NE(first, last);
  const auto a = text.find(first);
  const auto b = text.find(last, a + first.size());
  text.replace(b, last.size(), first);
  text.replace(a, first.size(), last);
  EXPECT_THROW(read_orbit_document(text), DataError);
}

TEST(SchmidtFileTest, Parses) {
  EXPECT_EQ(read_schmidt_bounds(R"({"lower": 2, "upper": 3})"), (SchmidtBounds{2, 3}));
  EXPECT_THROW(read_schmidt_bounds(R"({"lower": 3, "upper": 2})"), DataError);
  EXPECT_THROW(read_schmidt_bounds(R"({"lower": 3})"), DataError);
}

std::vector<std::vector<int>> parse_matrix(const std::string& csv) {
  std::vector<std::vector<int>> m;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stoi(cell));
    m.push_back(row);
  }
  return m;
}

TEST(MatrixExportTest, StarClass) {
  const MatrixExport m = export_matrices(explore_unlabelled(Graph::star(4)));
  const auto a = parse_matrix(m.adjacency_csv);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_NE(a[0][1], 0);
  EXPECT_NE(a[1][0], 0);
  EXPECT_EQ((a[0][0] != 0) + (a[1][1] != 0), 1);
  const auto d = parse_matrix(m.distance_csv);
  EXPECT_EQ(d, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
}

TEST(MatrixExportTest, Properties) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 4 + trial % 3);
    for (const Orbit& o : {explore_labelled(g), explore_unlabelled(g)}) {
      const Orbit c = canonicalized(o);
      const MatrixExport m = export_matrices(o);
      const auto a = parse_matrix(m.adjacency_csv);
      const auto d = parse_matrix(m.distance_csv);
      const auto n = c.vertices.size();
      ASSERT_EQ(a.size(), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(d[i][i], 0);
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) EXPECT_EQ(a[i][j] != 0 || a[j][i] != 0, d[i][j] == 1);
          EXPECT_EQ(d[i][j], d[j][i]);
          if (a[i][j] != 0 && i != j) {
            const Graph next = local_complement(c.vertices[i], a[i][j] - 1);
            EXPECT_EQ(o.kind == OrbitKind::kLabelled ? next : canonical_form(next).canon, c.vertices[j]);
          }
          if (o.kind == OrbitKind::kLabelled) EXPECT_EQ(a[i][j], a[j][i]);
        }
      }
      const auto blocks = nlohmann::json::parse(m.blocks_json);
      for (const char* key : {"edge_count_blocks", "isomorphism_blocks"}) {
        std::size_t next = 0;
        for (const auto& b : blocks[key]) {
          EXPECT_EQ(b["start"].get<std::size_t>(), next);
          next = b["end"].get<std::size_t>();
        }
        EXPECT_EQ(next, n);
      }
      if (o.kind == OrbitKind::kUnlabelled) EXPECT_EQ(blocks["isomorphism_blocks"].size(), n);
    }
  }
}

TEST(MatrixExportTest, LabelledPathClassBlocks) {
  // Every isomorphism block lies inside one edge-count block.
  const MatrixExport m = export_matrices(explore_labelled(Graph::path(4)));
  const auto blocks = nlohmann::json::parse(m.blocks_json);
  for (const auto& iso : blocks["isomorphism_blocks"]) {
    bool inside = false;
    for (const auto& e : blocks["edge_count_blocks"]) {
      inside = inside || (e["start"] <= iso["start"] && iso["end"] <= e["end"]);
    }
    EXPECT_TRUE(inside);
  }
  EXPECT_LT(blocks["isomorphism_blocks"].size(), blocks["size"].get<std::size_t>());
}

TEST(DotTest, DirectionFollowsKind) {
  const std::string unlabelled = orbit_dot(explore_unlabelled(Graph::path(4)));
  EXPECT_EQ(unlabelled.rfind("digraph", 0), 0U);
  EXPECT_NE(unlabelled.find("->"), std::string::npos);
  const std::string labelled = orbit_dot(explore_labelled(Graph::path(4)));
  EXPECT_EQ(labelled.rfind("graph", 0), 0U);
  EXPECT_NE(labelled.find("--"), std::string::npos);
  EXPECT_EQ(labelled.find("->"), std::string::npos);
}

TEST(CensusDocumentTest, RoundTrip) {
  for (const auto& c : enumerate_classes(5).classes) {
    const std::string text = write_census_class(c);
    const CensusClass back = read_census_class(text);
    EXPECT_EQ(back.record, c.record);
    EXPECT_EQ(back.orbit, c.orbit);
    EXPECT_EQ(back.labelled_members, c.labelled_members);
    EXPECT_EQ(back.labelled_orbits, c.labelled_orbits);
    EXPECT_EQ(back.labelled.chi_e, c.labelled.chi_e);
    EXPECT_EQ(write_census_class(back), text);
  }
  EXPECT_THROW(read_census_class(write_orbit_document(explore_unlabelled(Graph::path(3)))), DataError);
}

}  // namespace
}  // namespace lcorbit
