#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcorbit/census.hpp"
#include "lcorbit/errors.hpp"
#include "lcorbit/io.hpp"
#include "lcorbit/metrics.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/stabilizer.hpp"

namespace fs = std::filesystem;
using namespace lcorbit;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kCapacity = 3, kVerification = 4 };

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::string class_file_name(int n, std::size_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "n%d_class%03zu.json", n, index + 1);
  return buffer;
}

struct LoadedClass {
  std::string name;
  CensusClass data;
};

std::vector<LoadedClass> load_census(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError("no census directory " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind('n', 0) == 0 && name.find("_class") != std::string::npos &&
        entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DataError("no class documents in " + dir.string());
  std::vector<LoadedClass> out;
  for (const auto& f : files) {
    try {
      out.push_back({f.stem().string(), read_census_class(read_text_file(f))});
    } catch (const DataError& e) {
      throw DataError(f.string() + ": " + e.what());
    }
  }
  return out;
}

struct ExploreArgs {
  std::string input;
  std::string g6;
  std::string kind = "unlabelled";
  std::string out;
};

int run_explore(const ExploreArgs& a) {
  if (a.input.empty() == a.g6.empty()) throw CLI::ValidationError("explore", "give exactly one of --input and --g6");
  const Graph g = a.g6.empty() ? read_graph_file(a.input) : parse_graph6(a.g6);
  const Orbit o = a.kind == "labelled" ? explore_labelled(g) : explore_unlabelled(g);
  emit(a.out, write_orbit_document(o));
  std::cerr << a.kind << " orbit: " << o.vertices.size() << " graph states, " << o.stats().edge_count << " edges\n";
  return kOk;
}

struct CensusArgs {
  int n = 0;
  bool long_run = false;
  std::string out;
};

int run_census(const CensusArgs& a) {
  const Census census = enumerate_classes(a.n, {.long_run = a.long_run});
  fs::create_directories(a.out);
  std::ostringstream summary;
  summary << "class,qubits,min_edges,orbit_size,orbit_edges,diameter,labelled_size,labelled_orbits,representative\n";
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    const CensusClass& c = census.classes[i];
    write_text_file(fs::path(a.out) / class_file_name(a.n, i), write_census_class(c));
    summary << i + 1 << ',' << c.record.n_qubits << ',' << c.record.min_edges << ',' << c.record.orbit_size << ','
            << c.record.orbit_edges << ',' << c.record.diameter << ',' << c.labelled.size << ','
            << c.labelled_orbits << ',' << encode_graph6(c.representative) << '\n';
  }
  write_text_file(fs::path(a.out) / ("n" + std::to_string(a.n) + "_summary.csv"), summary.str());
  std::cerr << "n=" << a.n << ": " << census.classes.size() << " classes\n";
  return kOk;
}

struct MetricsArgs {
  std::string orbit;
  std::string schmidt;
  std::string out;
};

int run_metrics(const MetricsArgs& a) {
  const OrbitDocument doc = read_orbit_document(read_text_file(a.orbit));
  const Orbit unlabelled =
      doc.orbit.kind == OrbitKind::kLabelled ? quotient_to_unlabelled(doc.orbit) : doc.orbit;
  std::optional<SchmidtBounds> schmidt;
  if (!a.schmidt.empty()) schmidt = read_schmidt_bounds(read_text_file(a.schmidt));
  const ClassRecord r = class_record(unlabelled, schmidt);
  emit(a.out, write_class_record(r));
  if (r.hamiltonian == Answer::kUnknown) std::cerr << "hamiltonicity undecided within the search budget\n";
  return kOk;
}

struct MatrixArgs {
  std::string orbit;
  bool adjacency = false;
  bool distance = false;
  bool dot = false;
  std::string out;
};

int run_matrix(MatrixArgs a) {
  const OrbitDocument doc = read_orbit_document(read_text_file(a.orbit));
  if (!a.adjacency && !a.distance && !a.dot) a.adjacency = a.distance = a.dot = true;
  const std::string prefix = a.out.empty() ? (fs::path(a.orbit).parent_path() / fs::path(a.orbit).stem()).string() : a.out;
  const MatrixExport m = export_matrices(doc.orbit);
  if (a.adjacency || a.distance) write_text_file(prefix + ".blocks.json", m.blocks_json);
  if (a.adjacency) write_text_file(prefix + ".adjacency.csv", m.adjacency_csv);
  if (a.distance) write_text_file(prefix + ".distance.csv", m.distance_csv);
  if (a.dot) write_text_file(prefix + ".dot", orbit_dot(doc.orbit));
  return kOk;
}

struct VerifyArgs {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& a) {
  if (a.n < 1 || a.n > Graph::kMaxVertices) throw CapacityError("verify-lc covers 1 to 16 qubits");
  VerificationSummary s;
  std::string mode;
  if (a.n < 6 && a.trials == 0) {
    s = verify_lc_exhaustive(a.n);
    mode = "exhaustive";
  } else {
    s = verify_lc_random(a.n, a.trials == 0 ? 1000 : a.trials, a.seed);
    mode = "random";
  }
  std::cout << "n=" << a.n << " mode=" << mode << " checked=" << s.checked << " failures=" << s.failures << "\n";
  return s.failures == 0 ? kOk : kVerification;
}

struct CorrelateArgs {
  std::string census;
  std::string catalogue;
  std::string out;
};

int run_correlate(const CorrelateArgs& a) {
  auto classes = load_census(a.census);
  const auto catalogue = load_catalogue(a.catalogue);
  std::vector<const CensusClass*> matched;
  for (auto& c : classes) {
    const auto hits = fingerprint_match(c.data.record, catalogue);
    if (hits.size() != 1) {
      std::cerr << c.name << ": " << (hits.empty() ? "no" : "ambiguous") << " catalogue match, skipped\n";
      continue;
    }
    for (const auto& row : catalogue) {
      if (row.class_index != hits[0]) continue;
      c.data.record.schmidt = row.record.schmidt;
      for (const auto& column : row_mismatches(c.data.record, row.record)) {
        std::cerr << c.name << ": differs from catalogue class " << hits[0] << " in " << column << "\n";
      }
    }
    matched.push_back(&c.data);
  }
  const CorrelationReport report = correlation_report(matched);
  std::ostringstream csv;
  csv << "# classes=" << report.classes << " qubits=" << report.n_min << ".." << report.n_max << "\n";
  csv << "x,y,r,samples\n";
  char value[32];
  for (const auto& e : report.entries) {
    std::snprintf(value, sizeof value, "%.6f", e.r);
    csv << e.x << ',' << e.y << ',' << value << ',' << e.samples << '\n';
  }
  emit(a.out, csv.str());
  return kOk;
}

struct IsoArgs {
  std::string census;
  bool strip_loops = false;
  std::string out;
};

int run_iso(const IsoArgs& a) {
  const auto classes = load_census(a.census);
  std::vector<Orbit> orbits;
  for (const auto& c : classes) orbits.push_back(c.data.orbit);
  const auto m = orbit_isomorphism_matrix(orbits, a.strip_loops);
  std::ostringstream csv;
  csv << "class";
  for (const auto& c : classes) csv << ',' << c.name;
  csv << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    csv << classes[i].name;
    for (bool iso : m[i]) csv << ',' << (iso ? 1 : 0);
    csv << '\n';
  }
  emit(a.out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local complementation orbits of graph states"};
  app.require_subcommand(1);
  int code = kOk;

  ExploreArgs explore;
  auto* ex = app.add_subcommand("explore", "Map the orbit of one graph state");
  ex->add_option("--input", explore.input, "graph6 or edge-list file")->check(CLI::ExistingFile);
  ex->add_option("--g6", explore.g6, "graph6 text");
  ex->add_option("--kind", explore.kind)->check(CLI::IsMember({"labelled", "unlabelled"}));
  ex->add_option("--out", explore.out, "orbit document path");
  ex->callback([&] { code = run_explore(explore); });

  CensusArgs census;
  auto* ce = app.add_subcommand("census", "Every LC class on n qubits");
  ce->add_option("--n", census.n)->required();
  ce->add_flag("--long-run", census.long_run, "allow eight qubits");
  ce->add_option("--out", census.out, "output directory")->required();
  ce->callback([&] { code = run_census(census); });

  MetricsArgs metrics;
  auto* me = app.add_subcommand("metrics", "Class record of an orbit document");
  me->add_option("--orbit", metrics.orbit)->required()->check(CLI::ExistingFile);
  me->add_option("--schmidt", metrics.schmidt, "JSON with lower and upper")->check(CLI::ExistingFile);
  me->add_option("--out", metrics.out);
  me->callback([&] { code = run_metrics(metrics); });

  MatrixArgs matrix;
  auto* ma = app.add_subcommand("matrix", "Adjacency, distance and DOT exports");
  ma->add_option("--orbit", matrix.orbit)->required()->check(CLI::ExistingFile);
  ma->add_flag("--adjacency", matrix.adjacency);
  ma->add_flag("--distance", matrix.distance);
  ma->add_flag("--dot", matrix.dot);
  ma->add_option("--out", matrix.out, "output path prefix");
  ma->callback([&] { code = run_matrix(matrix); });

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify-lc", "Check LC against the stabilizer unitary");
  ve->add_option("--n", verify.n)->required();
  ve->add_option("--trials", verify.trials, "0 means exhaustive below six qubits");
  ve->add_option("--seed", verify.seed);
  ve->callback([&] { code = run_verify(verify); });

  CorrelateArgs correlate;
  auto* co = app.add_subcommand("correlate", "Correlation table over a census directory");
  co->add_option("--census", correlate.census)->required();
  co->add_option("--catalogue", correlate.catalogue)->required()->check(CLI::ExistingFile);
  co->add_option("--out", correlate.out);
  co->callback([&] { code = run_correlate(correlate); });

  IsoArgs iso;
  auto* is = app.add_subcommand("iso-matrix", "Pairwise isomorphism of class orbits");
  is->add_option("--census", iso.census)->required();
  is->add_flag("--strip-loops", iso.strip_loops);
  is->add_option("--out", iso.out);
  is->callback([&] { code = run_iso(iso); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return code;
}
