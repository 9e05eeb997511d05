#include "lcorbit/census.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "lcorbit/canon.hpp"
#include "lcorbit/errors.hpp"

namespace lcorbit {

namespace {

constexpr int kMaxCensusOrder = 8;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

LabelledSummary summarise_labelled(const Graph& representative) {
  const Orbit l = explore_labelled(representative, {.execution = Execution::kSerial});
  const SimpleGraph s = l.skeleton(false);
  LabelledSummary out;
  out.size = static_cast<int>(l.vertices.size());
  out.edges = l.stats().edge_count;
  out.diameter = all_pairs_distances(s, Execution::kSerial).diameter;
  out.chi = chromatic_number(s);
  out.chi_e = chromatic_index(s);
  return out;
}

template <class F>
void for_each_index(std::int64_t count, Execution execution, F&& f) {
  if (execution == Execution::kSerial) {
    for (std::int64_t i = 0; i < count; ++i) f(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (std::int64_t i = 0; i < count; ++i) f(i);
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::vector<Graph> all_graphs(int n, Execution execution) {
  if (n < 0 || n > Graph::kMaxVertices) throw CapacityError("graph order out of range");
  std::vector<Graph> current{Graph(std::min(n, 1))};
  for (int k = 1; k < n; ++k) {
    const auto count = static_cast<std::int64_t>(current.size());
    std::vector<std::vector<Graph>> found(current.size());
    for_each_index(count, execution, [&](std::int64_t i) {
      std::unordered_set<Graph, GraphHash> local;
      for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        local.insert(canonical_form(current[i].with_vertex_added(static_cast<VertexMask>(mask))).canon);
      }
      found[i].assign(local.begin(), local.end());
    });
    std::vector<Graph> next;
    for (auto& chunk : found) next.insert(next.end(), chunk.begin(), chunk.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return current;
}

std::vector<Graph> connected_graphs(int n, Execution execution) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n, execution)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Census enumerate_classes(int n, const CensusOptions& options) {
  if (n < 2) throw DataError("census needs at least two qubits");
  if (n > kMaxCensusOrder) {
    throw CapacityError("census by enumeration is limited to " + std::to_string(kMaxCensusOrder) +
                        " qubits");
  }
  if (n == kMaxCensusOrder && !options.long_run) {
    throw CapacityError("an eight-qubit census is a long run and must be requested explicitly");
  }
  Census census;
  census.n = n;
  std::unordered_set<Graph, GraphHash> assigned;
  for (const Graph& g : connected_graphs(n, options.execution)) {
    if (assigned.contains(g)) continue;
    CensusClass c;
    c.orbit = canonicalized(explore_unlabelled(g, {.execution = options.execution}));
    assigned.insert(c.orbit.vertices.begin(), c.orbit.vertices.end());
    census.classes.push_back(std::move(c));
  }

  const auto count = static_cast<std::int64_t>(census.classes.size());
  for_each_index(count, options.execution, [&](std::int64_t i) {
    CensusClass& c = census.classes[i];
    c.record = class_record(c.orbit, std::nullopt, {.execution = Execution::kSerial});
    c.representative = c.record.representative;
    for (const Graph& member : c.orbit.vertices) {
      c.labelled_members += factorial(n) / automorphism_group(member).order;
    }
    if (options.labelled_summary) {
      c.labelled = summarise_labelled(c.representative);
      c.labelled_orbits = c.labelled_members / static_cast<std::uint64_t>(c.labelled.size);
    } else {
      const auto size = explore_labelled(c.representative, {.execution = Execution::kSerial}).vertices.size();
      c.labelled_orbits = c.labelled_members / size;
    }
  });

  std::sort(census.classes.begin(), census.classes.end(), [](const CensusClass& a, const CensusClass& b) {
    return std::tie(a.record.min_edges, a.record.orbit_size, a.record.orbit_edges, a.representative) <
           std::tie(b.record.min_edges, b.record.orbit_size, b.record.orbit_edges, b.representative);
  });
  return census;
}

std::vector<Orbit> enumerate_labelled_orbits(const CensusClass& c) {
  const int n = c.representative.order();
  std::set<Graph> members;
  std::vector<int> perm(n);
  for (const Graph& g : c.orbit.vertices) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      members.insert(g.relabel(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Orbit> orbits;
  while (!members.empty()) {
    Orbit o = canonicalized(explore_labelled(*members.begin()));
    for (const Graph& g : o.vertices) members.erase(g);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<CatalogueRow> parse_catalogue(const std::string& text) {
  static const std::vector<std::string> kColumns{
      "class",      "qubits",      "min_edges",   "schmidt_lower", "schmidt_upper",
      "rank_width", "orbit_size",  "orbit_edges", "chi_g",         "chi_g_e",
      "chi_orbit",  "chi_orbit_e", "tree",        "mean_distance", "diameter",
      "aut",        "planar",      "loop",        "eulerian",      "hamiltonian"};
  std::vector<CatalogueRow> rows;
  std::stringstream in(text);
  std::string line;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto cells = split_csv_line(line);
    auto fail = [&](const std::string& why) {
      throw DataError("catalogue line " + std::to_string(line_number) + ": " + why);
    };
    if (!header_seen) {
      if (cells != kColumns) fail("unexpected header");
      header_seen = true;
      continue;
    }
    if (cells.size() != kColumns.size()) fail("expected " + std::to_string(kColumns.size()) + " cells");
    auto integer = [&](std::size_t i) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(cells[i], &used);
        if (used != cells[i].size()) fail("bad integer in column " + kColumns[i]);
        return v;
      } catch (const std::logic_error&) {
        fail("bad integer in column " + kColumns[i]);
      }
      return 0;
    };
    auto flag = [&](std::size_t i) {
      if (cells[i] == "Y") return true;
      if (cells[i] != "N") fail("expected Y or N in column " + kColumns[i]);
      return false;
    };
    CatalogueRow row;
    row.class_index = integer(0);
    ClassRecord& r = row.record;
    r.n_qubits = integer(1);
    r.min_edges = integer(2);
    r.schmidt = SchmidtBounds{integer(3), integer(4)};
    r.rank_width = integer(5);
    r.orbit_size = integer(6);
    r.orbit_edges = integer(7);
    r.chi_g = integer(8);
    r.chi_g_e = integer(9);
    r.chi_orbit = integer(10);
    r.chi_orbit_e = integer(11);
    r.is_tree = flag(12);
    try {
      r.mean_distance = std::stod(cells[13]);
    } catch (const std::logic_error&) {
      fail("bad number in column mean_distance");
    }
    r.diameter = integer(14);
    r.aut_order = static_cast<std::uint64_t>(integer(15));
    r.planar = flag(16);
    r.has_loop = flag(17);
    r.eulerian = flag(18);
    r.hamiltonian = flag(19) ? Answer::kYes : Answer::kNo;
    if (r.schmidt->lower > r.schmidt->upper) fail("Schmidt lower bound above upper bound");
    rows.push_back(row);
  }
  if (!header_seen) throw DataError("catalogue is empty");
  return rows;
}

std::vector<CatalogueRow> load_catalogue(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read catalogue " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalogue(buffer.str());
}

std::vector<int> fingerprint_match(const ClassRecord& r, const std::vector<CatalogueRow>& catalogue) {
  auto key = [](const ClassRecord& x) {
    return std::tie(x.n_qubits, x.min_edges, x.orbit_size, x.orbit_edges, x.chi_g, x.chi_g_e,
                    x.diameter);
  };
  std::vector<int> out;
  for (const auto& row : catalogue) {
    if (key(row.record) == key(r)) out.push_back(row.class_index);
  }
  return out;
}

bool two_place_match(double exact, double printed) {
  const double rounded = std::round(exact * 100) / 100;
  const double truncated = std::floor(exact * 100 + 1e-9) / 100;
  return std::abs(rounded - printed) < 1e-9 || std::abs(truncated - printed) < 1e-9;
}

std::vector<std::string> row_mismatches(const ClassRecord& computed, const ClassRecord& expected) {
  std::vector<std::string> out;
  auto check = [&](const char* name, auto a, auto b) {
    if (a != b) out.emplace_back(name);
  };
  check("qubits", computed.n_qubits, expected.n_qubits);
  check("min_edges", computed.min_edges, expected.min_edges);
  check("rank_width", computed.rank_width, expected.rank_width);
  check("orbit_size", computed.orbit_size, expected.orbit_size);
  check("orbit_edges", computed.orbit_edges, expected.orbit_edges);
  check("chi_g", computed.chi_g, expected.chi_g);
  check("chi_g_e", computed.chi_g_e, expected.chi_g_e);
  check("chi_orbit", computed.chi_orbit, expected.chi_orbit);
  check("chi_orbit_e", computed.chi_orbit_e, expected.chi_orbit_e);
  check("tree", computed.is_tree, expected.is_tree);
  if (!two_place_match(computed.mean_distance, expected.mean_distance)) out.emplace_back("mean_distance");
  check("diameter", computed.diameter, expected.diameter);
  check("planar", computed.planar, expected.planar);
  check("loop", computed.has_loop, expected.has_loop);
  check("eulerian", computed.eulerian, expected.eulerian);
  check("hamiltonian", computed.hamiltonian, expected.hamiltonian);
  return out;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw DataError("correlation of sequences with different lengths");
  if (xs.size() < 2) throw DataError("correlation needs at least two samples");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0 || syy == 0) throw DataError("correlation undefined for a constant sequence");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

const Correlation& CorrelationReport::get(const std::string& x, const std::string& y) const {
  for (const auto& e : entries) {
    if (e.x == x && e.y == y) return e;
  }
  throw std::out_of_range("no correlation for (" + x + ", " + y + ")");
}

CorrelationReport correlation_report(const std::vector<const CensusClass*>& classes) {
  std::vector<const CensusClass*> with_schmidt;
  for (const CensusClass* c : classes) {
    if (c->record.schmidt) with_schmidt.push_back(c);
  }
  using Quantity = double (*)(const CensusClass&);
  struct Column {
    const char* name;
    Quantity get;
    bool labelled;
  };
  static const std::map<std::string, Column> kColumns{
      {"E_S", {"E_S", [](const CensusClass& c) {
                 return (c.record.schmidt->lower + c.record.schmidt->upper) / 2.0;
               }, false}},
      {"|e|", {"|e|", [](const CensusClass& c) { return double(c.record.min_edges); }, false}},
      {"rwd", {"rwd", [](const CensusClass& c) { return double(c.record.rank_width); }, false}},
      {"chi_g^e", {"chi_g^e", [](const CensusClass& c) { return double(c.record.chi_g_e); }, false}},
      {"|C|", {"|C|", [](const CensusClass& c) { return double(c.record.orbit_size); }, false}},
      {"max d^C", {"max d^C", [](const CensusClass& c) { return double(c.record.diameter); }, false}},
      {"chi_C", {"chi_C", [](const CensusClass& c) { return double(c.record.chi_orbit); }, false}},
      {"chi_C^e", {"chi_C^e", [](const CensusClass& c) { return double(c.record.chi_orbit_e); }, false}},
      {"|L|", {"|L|", [](const CensusClass& c) { return double(c.labelled.size); }, true}},
      {"max d^L", {"max d^L", [](const CensusClass& c) { return double(c.labelled.diameter); }, true}},
      {"chi_L", {"chi_L", [](const CensusClass& c) { return double(c.labelled.chi); }, true}},
      {"chi_L^e", {"chi_L^e", [](const CensusClass& c) { return double(c.labelled.chi_e); }, true}},
  };
  static const std::vector<std::pair<std::string, std::string>> kPairs{
      {"max d^C", "|C|"}, {"max d^C", "E_S"}, {"chi_C", "E_S"},   {"chi_C^e", "E_S"},
      {"chi_C", "chi_g^e"}, {"max d^L", "|L|"}, {"max d^L", "E_S"}, {"chi_L", "E_S"},
      {"chi_L^e", "E_S"}, {"chi_L", "chi_g^e"}, {"E_S", "rwd"},     {"E_S", "|e|"},
      {"E_S", "chi_g^e"}};

  CorrelationReport report;
  report.classes = with_schmidt.size();
  if (!with_schmidt.empty()) {
    report.n_min = report.n_max = with_schmidt.front()->record.n_qubits;
    for (const CensusClass* c : with_schmidt) {
      report.n_min = std::min(report.n_min, c->record.n_qubits);
      report.n_max = std::max(report.n_max, c->record.n_qubits);
    }
  }
  for (const auto& [x, y] : kPairs) {
    const Column& cx = kColumns.at(x);
    const Column& cy = kColumns.at(y);
    std::vector<double> xs;
    std::vector<double> ys;
    for (const CensusClass* c : with_schmidt) {
      if ((cx.labelled || cy.labelled) && c->labelled.size == 0) continue;
      xs.push_back(cx.get(*c));
      ys.push_back(cy.get(*c));
    }
    report.entries.push_back({x, y, pearson(xs, ys), xs.size()});
  }
  return report;
}

std::vector<std::vector<bool>> orbit_isomorphism_matrix(const std::vector<Orbit>& orbits,
                                                        bool strip_loops) {
  const auto n = static_cast<std::int64_t>(orbits.size());
  std::vector<GraphCertificate> certs(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (std::int64_t i = 0; i < n; ++i) {
    certs[i] = canonical_form(orbits[i].skeleton(!strip_loops)).certificate;
  }
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) m[i][j] = certs[i] == certs[j];
  }
  return m;
}

StationaryDistribution stationary_distribution(const Orbit& o) {
  const SimpleGraph g = o.skeleton(true);
  const int n = g.order();
  StationaryDistribution out;
  if (n == 0) return out;
  std::vector<double> degree(n);
  double total = 0;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v) + (g.has_loop(v) ? 2 : 0);
    total += degree[v];
  }
  out.pi.resize(n);
  for (int v = 0; v < n; ++v) out.pi[v] = total > 0 ? degree[v] / total : 1.0 / n;
  for (int v = 0; v < n; ++v) out.tv_from_uniform += std::abs(out.pi[v] - 1.0 / n);
  out.tv_from_uniform /= 2;
  return out;
}

}  // namespace lcorbit
