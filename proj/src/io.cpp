#include "lcorbit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lcorbit/canon.hpp"
#include "lcorbit/errors.hpp"

namespace lcorbit {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kGraph6MaxOrder = 62;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Json label_list(VertexMask mask) {
  Json out = Json::array();
  for (int a = 0; a < Graph::kMaxVertices; ++a) {
    if ((mask >> a) & 1U) out.push_back(a + 1);
  }
  return out;
}

std::string kind_name(OrbitKind k) { return k == OrbitKind::kLabelled ? "labelled" : "unlabelled"; }

Json orbit_json(const Orbit& o) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind_name(o.kind);
  j["seed"] = encode_graph6(o.seed);
  Json vertices = Json::array();
  for (const Graph& g : o.vertices) vertices.push_back(encode_graph6(g));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const OrbitEdge& e : o.edges) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"labels_from_u", label_list(e.labels_from_u)},
                     {"labels_from_v", label_list(e.labels_from_v)}});
  }
  j["edges"] = std::move(edges);
  const OrbitStats s = o.stats();
  j["stats"] = {{"vertex_count", s.vertex_count}, {"edge_count", s.edge_count}, {"n_tilde", s.n_tilde}};
  return j;
}

Json record_json(const ClassRecord& r) {
  Json j;
  j["qubits"] = r.n_qubits;
  j["min_edges"] = r.min_edges;
  if (r.schmidt) {
    j["schmidt"] = {{"lower", r.schmidt->lower}, {"upper", r.schmidt->upper}};
  } else {
    j["schmidt"] = nullptr;
  }
  j["rank_width"] = r.rank_width;
  j["orbit_size"] = r.orbit_size;
  j["orbit_edges"] = r.orbit_edges;
  j["chi_g"] = r.chi_g;
  j["chi_g_e"] = r.chi_g_e;
  j["chi_orbit"] = r.chi_orbit;
  j["chi_orbit_e"] = r.chi_orbit_e;
  j["tree"] = r.is_tree;
  j["mean_distance"] = r.mean_distance;
  j["diameter"] = r.diameter;
  j["aut"] = r.aut_order;
  j["planar"] = r.planar;
  j["loop"] = r.has_loop;
  j["eulerian"] = r.eulerian;
  j["hamiltonian"] = to_string(r.hamiltonian);
  j["representative"] = encode_graph6(r.representative);
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
}

// Wraps nlohmann type and key errors as DataError.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad ") + what + ": " + e.what());
  }
}

VertexMask label_mask(const Json& labels, int n) {
  VertexMask mask = 0;
  for (const Json& l : labels) {
    const int a = l.get<int>();
    if (a < 1 || a > n) throw DataError("label " + std::to_string(a) + " out of range");
    mask |= static_cast<VertexMask>(1U << (a - 1));
  }
  return mask;
}

Orbit orbit_from_json(const Json& j) {
  return guarded("orbit document", [&] {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw DataError("unsupported schema_version " + j.at("schema_version").dump());
    }
    Orbit o;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "labelled") {
      o.kind = OrbitKind::kLabelled;
    } else if (kind == "unlabelled") {
      o.kind = OrbitKind::kUnlabelled;
    } else {
      throw DataError("unknown orbit kind " + kind);
    }
    o.seed = parse_graph6(j.at("seed").get<std::string>());
    const int n = o.seed.order();
    for (const Json& v : j.at("vertices")) {
      o.vertices.push_back(parse_graph6(v.get<std::string>()));
      if (o.vertices.back().order() != n) throw DataError("orbit vertices differ in order");
    }
    const int count = static_cast<int>(o.vertices.size());
    for (const Json& e : j.at("edges")) {
      OrbitEdge edge{e.at("u").get<int>(), e.at("v").get<int>(), label_mask(e.at("labels_from_u"), n),
                     label_mask(e.at("labels_from_v"), n)};
      if (edge.u < 0 || edge.u > edge.v || edge.v >= count) throw DataError("orbit edge out of range");
      if (!o.edges.empty() && std::tie(o.edges.back().u, o.edges.back().v) >= std::tie(edge.u, edge.v)) {
        throw DataError("orbit edges not sorted or repeated");
      }
      o.edges.push_back(edge);
    }
    std::vector<int> identity(count);
    std::iota(identity.begin(), identity.end(), 0);
    if (canonical_vertex_order(o) != identity) throw DataError("orbit vertices not in canonical order");
    const OrbitStats s = o.stats();
    const Json& stats = j.at("stats");
    if (stats.at("vertex_count").get<int>() != s.vertex_count ||
        stats.at("edge_count").get<int>() != s.edge_count) {
      throw DataError("orbit stats disagree with the orbit");
    }
    return o;
  });
}

ClassRecord record_from_json(const Json& j) {
  return guarded("class record", [&] {
    ClassRecord r;
    r.n_qubits = j.at("qubits").get<int>();
    r.min_edges = j.at("min_edges").get<int>();
    if (!j.at("schmidt").is_null()) {
      r.schmidt = SchmidtBounds{j.at("schmidt").at("lower").get<int>(), j.at("schmidt").at("upper").get<int>()};
    }
    r.rank_width = j.at("rank_width").get<int>();
    r.orbit_size = j.at("orbit_size").get<int>();
    r.orbit_edges = j.at("orbit_edges").get<int>();
    r.chi_g = j.at("chi_g").get<int>();
    r.chi_g_e = j.at("chi_g_e").get<int>();
    r.chi_orbit = j.at("chi_orbit").get<int>();
    r.chi_orbit_e = j.at("chi_orbit_e").get<int>();
    r.is_tree = j.at("tree").get<bool>();
    r.mean_distance = j.at("mean_distance").get<double>();
    r.diameter = j.at("diameter").get<int>();
    r.aut_order = j.at("aut").get<std::uint64_t>();
    r.planar = j.at("planar").get<bool>();
    r.has_loop = j.at("loop").get<bool>();
    r.eulerian = j.at("eulerian").get<bool>();
    const auto h = j.at("hamiltonian").get<std::string>();
    if (h == "yes") {
      r.hamiltonian = Answer::kYes;
    } else if (h == "no") {
      r.hamiltonian = Answer::kNo;
    } else if (h == "unknown") {
      r.hamiltonian = Answer::kUnknown;
    } else {
      throw DataError("hamiltonian must be yes, no or unknown");
    }
    r.representative = parse_graph6(j.at("representative").get<std::string>());
    return r;
  });
}

std::string matrix_csv(const std::vector<std::vector<int>>& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

std::string label_text(VertexMask mask) {
  std::string out;
  for (int a = 0; a < Graph::kMaxVertices; ++a) {
    if (!((mask >> a) & 1U)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(a + 1);
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw DataError("graph6: empty text at offset 0");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw DataError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i));
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxOrder) throw CapacityError("graph6: orders above 62 are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1) {
    throw DataError("graph6: expected " + std::to_string(body + 1) + " bytes for order " + std::to_string(n) +
                    ", got " + std::to_string(text.size()) + " (offset " +
                    std::to_string(std::min(text.size(), body + 1)) + ")");
  }
  auto bit = [&](std::size_t k) { return ((static_cast<unsigned char>(text[1 + k / 6]) - 63) >> (5 - k % 6)) & 1; };
  for (std::size_t k = bits; k < body * 6; ++k) {
    if (bit(k)) throw DataError("graph6: nonzero padding at offset " + std::to_string(1 + k / 6));
  }
  if (n > Graph::kMaxVertices) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds 16");
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream fields(t);
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) {
      throw DataError("edge list line " + std::to_string(line_number) + ": expected two integers");
    }
    if (u < 1 || v < 1) throw DataError("edge list line " + std::to_string(line_number) + ": labels start at 1");
    if (u == v) throw DataError("edge list line " + std::to_string(line_number) + ": self-loop");
    if (u > Graph::kMaxVertices || v > Graph::kMaxVertices) {
      throw CapacityError("edge list line " + std::to_string(line_number) + ": more than 16 vertices");
    }
    n = std::max<int>(n, static_cast<int>(std::max(u, v)));
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (edges.empty()) throw DataError("edge list has no edges");
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!t.empty() && t[0] != '#') tokens.push_back(t);
  }
  if (tokens.size() == 1 && tokens[0].find_first_of(" \t") == std::string::npos) return parse_graph6(tokens[0]);
  return parse_edge_list(text);
}

std::string write_orbit_document(const Orbit& o, const std::optional<ClassRecord>& metrics) {
  Json j = orbit_json(canonicalized(o));
  if (metrics) j["metrics"] = record_json(*metrics);
  return j.dump(2) + "\n";
}

OrbitDocument read_orbit_document(std::string_view text) {
  const Json j = parse_json(text);
  OrbitDocument doc;
  doc.orbit = orbit_from_json(j);
  if (j.contains("metrics") && !j["metrics"].is_null()) doc.metrics = record_from_json(j["metrics"]);
  return doc;
}

std::string write_class_record(const ClassRecord& r) { return record_json(r).dump(2) + "\n"; }

ClassRecord read_class_record(std::string_view text) { return record_from_json(parse_json(text)); }

SchmidtBounds read_schmidt_bounds(std::string_view text) {
  const Json j = parse_json(text);
  const SchmidtBounds b = guarded("Schmidt bounds", [&] {
    return SchmidtBounds{j.at("lower").get<int>(), j.at("upper").get<int>()};
  });
  if (b.lower > b.upper) throw DataError("Schmidt lower bound above upper bound");
  return b;
}

MatrixExport export_matrices(const Orbit& orbit) {
  const Orbit o = canonicalized(orbit);
  const int n = static_cast<int>(o.vertices.size());
  std::vector<std::vector<int>> adjacency(n, std::vector<int>(n, 0));
  auto lowest = [](VertexMask m) { return m == 0 ? 0 : __builtin_ctz(m) + 1; };
  for (const OrbitEdge& e : o.edges) {
    if (e.u == e.v) {
      adjacency[e.u][e.u] = lowest(e.labels_from_u | e.labels_from_v);
    } else {
      adjacency[e.u][e.v] = lowest(e.labels_from_u);
      adjacency[e.v][e.u] = lowest(e.labels_from_v);
    }
  }
  MatrixExport out;
  out.adjacency_csv = matrix_csv(adjacency);
  out.distance_csv = matrix_csv(all_pairs_distances(o).hops);

  Json edge_blocks = Json::array();
  Json iso_blocks = Json::array();
  int start_edges = 0;
  int start_iso = 0;
  Graph iso_key;
  for (int i = 0; i <= n; ++i) {
    const Graph key = i < n ? (o.kind == OrbitKind::kLabelled ? canonical_form(o.vertices[i]).canon : o.vertices[i])
                            : Graph();
    if (i > 0 && (i == n || o.vertices[i].edge_count() != o.vertices[start_edges].edge_count())) {
      edge_blocks.push_back({{"start", start_edges}, {"end", i}, {"edges", o.vertices[start_edges].edge_count()}});
      start_edges = i;
    }
    if (i > 0 && (i == n || key != iso_key)) {
      iso_blocks.push_back({{"start", start_iso}, {"end", i}});
      start_iso = i;
    }
    iso_key = key;
  }
  Json blocks;
  blocks["kind"] = kind_name(o.kind);
  blocks["size"] = n;
  blocks["edge_count_blocks"] = std::move(edge_blocks);
  blocks["isomorphism_blocks"] = std::move(iso_blocks);
  out.blocks_json = blocks.dump(2) + "\n";
  return out;
}

std::string orbit_dot(const Orbit& orbit) {
  const Orbit o = canonicalized(orbit);
  const bool directed = o.kind == OrbitKind::kUnlabelled;
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " orbit {\n";
  for (std::size_t i = 0; i < o.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << i + 1 << "\", tooltip=\"" << dot_escape(encode_graph6(o.vertices[i]))
        << "\"];\n";
  }
  const char* arc = directed ? " -> " : " -- ";
  for (const OrbitEdge& e : o.edges) {
    if (!directed || e.u == e.v) {
      out << "  v" << e.u << arc << "v" << e.v << " [label=\"" << label_text(e.labels_from_u | e.labels_from_v)
          << "\"];\n";
      continue;
    }
    if (e.labels_from_u) out << "  v" << e.u << arc << "v" << e.v << " [label=\"" << label_text(e.labels_from_u) << "\"];\n";
    if (e.labels_from_v) out << "  v" << e.v << arc << "v" << e.u << " [label=\"" << label_text(e.labels_from_v) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string write_census_class(const CensusClass& c) {
  Json j = orbit_json(canonicalized(c.orbit));
  j["metrics"] = record_json(c.record);
  j["census"] = {{"labelled_size", c.labelled.size},
                 {"labelled_edges", c.labelled.edges},
                 {"labelled_diameter", c.labelled.diameter},
                 {"labelled_chi", c.labelled.chi},
                 {"labelled_chi_e", c.labelled.chi_e},
                 {"labelled_members", c.labelled_members},
                 {"labelled_orbits", c.labelled_orbits}};
  return j.dump(2) + "\n";
}

CensusClass read_census_class(std::string_view text) {
  const Json j = parse_json(text);
  CensusClass c;
  c.orbit = orbit_from_json(j);
  if (!j.contains("metrics") || !j.contains("census")) throw DataError("not a census class document");
  c.record = record_from_json(j["metrics"]);
  c.representative = c.record.representative;
  guarded("census summary", [&] {
    const Json& s = j["census"];
    c.labelled.size = s.at("labelled_size").get<int>();
    c.labelled.edges = s.at("labelled_edges").get<int>();
    c.labelled.diameter = s.at("labelled_diameter").get<int>();
    c.labelled.chi = s.at("labelled_chi").get<int>();
    c.labelled.chi_e = s.at("labelled_chi_e").get<int>();
    c.labelled_members = s.at("labelled_members").get<std::uint64_t>();
    c.labelled_orbits = s.at("labelled_orbits").get<std::uint64_t>();
    return 0;
  });
  return c;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace lcorbit
