#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lcorbit/census.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/metrics.hpp"
#include "lcorbit/orbit.hpp"

namespace lcorbit {

// graph6 for n <= 62. Graphs above 16 vertices decode to a CapacityError.
// Malformed text raises DataError naming the byte offset.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// One "u v" pair per line, 1-based. Blank lines and lines starting with #
// are skipped. The order is the largest label seen.
Graph parse_edge_list(std::string_view text);

// A single graph6 token, or an edge list otherwise.
Graph read_graph_file(const std::filesystem::path& path);

inline constexpr int kSchemaVersion = 1;

struct OrbitDocument {
  Orbit orbit;  // canonical vertex order
  std::optional<ClassRecord> metrics;
};

// The orbit is written in canonical vertex order with 1-based labels.
std::string write_orbit_document(const Orbit& o, const std::optional<ClassRecord>& metrics = std::nullopt);
// Throws DataError for bad JSON, bad graph6, a schema mismatch or vertices
// out of canonical order.
OrbitDocument read_orbit_document(std::string_view text);

std::string write_class_record(const ClassRecord& r);
ClassRecord read_class_record(std::string_view text);

// {"lower": a, "upper": b}
SchmidtBounds read_schmidt_bounds(std::string_view text);

struct MatrixExport {
  std::string adjacency_csv;  // smallest 1-based label from row to column, 0 for none
  std::string distance_csv;
  std::string blocks_json;  // isomorphism-class and edge-count boundaries
};

// Rows and columns in canonical vertex order.
MatrixExport export_matrices(const Orbit& o);

// Labelled orbits as undirected graphs; unlabelled orbits with one arc per
// direction carrying that direction's labels.
std::string orbit_dot(const Orbit& o);

// A census class as an orbit document with an extra "census" object.
std::string write_census_class(const CensusClass& c);
CensusClass read_census_class(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lcorbit
