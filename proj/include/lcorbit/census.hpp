#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lcorbit/graph.hpp"
#include "lcorbit/metrics.hpp"
#include "lcorbit/orbit.hpp"

namespace lcorbit {

// Canonical forms of every graph (connected or not) on n vertices, sorted.
// Built by adding one vertex at a time to the graphs on n - 1 vertices.
std::vector<Graph> all_graphs(int n, Execution execution = Execution::kParallel);
std::vector<Graph> connected_graphs(int n, Execution execution = Execution::kParallel);

// Shape of the labelled orbit through a class representative. Every labelled
// orbit of the class is a relabelled copy of it.
struct LabelledSummary {
  int size = 0;
  int edges = 0;
  int diameter = 0;
  int chi = 0;
  int chi_e = 0;
};

struct CensusClass {
  Graph representative;
  Orbit orbit;  // unlabelled, canonical vertex order
  ClassRecord record;
  LabelledSummary labelled;
  std::uint64_t labelled_members = 0;  // labelled graphs in the class
  std::uint64_t labelled_orbits = 0;
};

struct Census {
  int n = 0;
  // Sorted by (min edges, orbit size, orbit edges, representative).
  std::vector<CensusClass> classes;
};

struct CensusOptions {
  Execution execution = Execution::kParallel;
  // Eight qubits take minutes rather than seconds and must be asked for.
  bool long_run = false;
  // Computes LabelledSummary, which explores one labelled orbit per class.
  bool labelled_summary = true;
};

// All LC classes of connected graphs on n vertices, 2 <= n <= 8. Throws
// CapacityError above 8, or at 8 without long_run.
Census enumerate_classes(int n, const CensusOptions& options = {});

// Partition of every labelled member of the class into labelled orbits,
// each in canonical vertex order, sorted by their smallest member.
std::vector<Orbit> enumerate_labelled_orbits(const CensusClass& c);

// One row of the reference catalogue.
struct CatalogueRow {
  int class_index = 0;
  ClassRecord record;  // representative left empty
};

// Reads the catalogue CSV. Throws DataError on malformed content.
std::vector<CatalogueRow> load_catalogue(const std::filesystem::path& path);
std::vector<CatalogueRow> parse_catalogue(const std::string& text);

// Class indices of rows agreeing on |Q|, |e|, |C|, |E|, chi_g, chi_g^e and
// diameter.
std::vector<int> fingerprint_match(const ClassRecord& r, const std::vector<CatalogueRow>& catalogue);

// The printed value is `exact` rounded or truncated to two decimals.
bool two_place_match(double exact, double printed);

// Columns compared when matching a full catalogue row. |aut| and Schmidt
// bounds are not included. Mean distance uses two_place_match.
std::vector<std::string> row_mismatches(const ClassRecord& computed, const ClassRecord& expected);

// Throws DataError when lengths differ, fewer than two samples are given or
// either sequence has zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

struct Correlation {
  std::string x;
  std::string y;
  double r = 0;
  std::size_t samples = 0;
};

struct CorrelationReport {
  std::vector<Correlation> entries;
  int n_min = 0;
  int n_max = 0;
  std::size_t classes = 0;

  // Throws std::out_of_range for an unknown pair.
  const Correlation& get(const std::string& x, const std::string& y) const;
};

// A class contributes when its record carries Schmidt bounds; E_S is their
// midpoint. Pairs involving labelled-orbit quantities use classes whose
// LabelledSummary was computed.
CorrelationReport correlation_report(const std::vector<const CensusClass*>& classes);

// I[i][j] = orbits i and j are isomorphic as plain graphs, edge labels
// ignored; self-loops count unless strip_loops.
std::vector<std::vector<bool>> orbit_isomorphism_matrix(const std::vector<Orbit>& orbits,
                                                        bool strip_loops);

struct StationaryDistribution {
  std::vector<double> pi;
  double tv_from_uniform = 0;
};

// Simple random walk on the orbit, a self-loop adding 2 to its vertex's
// degree: pi_v = deg(v) / sum of degrees.
StationaryDistribution stationary_distribution(const Orbit& o);

}  // namespace lcorbit
