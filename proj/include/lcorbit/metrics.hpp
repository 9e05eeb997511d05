#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcorbit/graph.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/simple_graph.hpp"

namespace lcorbit {

enum class Answer { kNo, kYes, kUnknown };

std::string to_string(Answer a);

// Exact. Self-loops are ignored.
int chromatic_number(const SimpleGraph& g);
int chromatic_number(const Graph& g);
// Exact; Delta or Delta + 1. Self-loops are ignored.
int chromatic_index(const SimpleGraph& g);
int chromatic_index(const Graph& g);

bool is_planar(const SimpleGraph& g);

inline constexpr std::uint64_t kDefaultHamiltonBudget = 100'000'000;

// kUnknown only when the search visits more than `budget` nodes. Graphs
// with fewer than three vertices are not Hamiltonian.
Answer has_hamiltonian_cycle(const SimpleGraph& g,
                             std::uint64_t budget = kDefaultHamiltonBudget);

// Loop-stripped orbit is connected and acyclic.
bool is_tree(const Orbit& o);
// Connected with every degree even, a self-loop adding 2 to its vertex.
bool has_eulerian_circuit(const Orbit& o);
bool has_eulerian_circuit(const SimpleGraph& g);
// Automorphisms of the orbit graph that map self-loops to self-loops,
// edge labels ignored.
std::uint64_t orbit_automorphism_order(const Orbit& o);

// Fewest edges, ties broken by the smaller canonical form. Returned in
// canonical form.
Graph minimum_edge_representative(const Orbit& o);

struct SchmidtBounds {
  int lower = 0;
  int upper = 0;
  friend bool operator==(const SchmidtBounds&, const SchmidtBounds&) = default;
};

// One census row. Schmidt bounds are input data and absent unless supplied.
struct ClassRecord {
  int n_qubits = 0;
  int min_edges = 0;
  std::optional<SchmidtBounds> schmidt;
  int rank_width = 0;
  int orbit_size = 0;
  int orbit_edges = 0;
  int chi_g = 0;
  int chi_g_e = 0;
  int chi_orbit = 0;
  int chi_orbit_e = 0;
  bool is_tree = false;
  double mean_distance = 0;
  int diameter = 0;
  std::uint64_t aut_order = 0;
  bool planar = false;
  bool has_loop = false;
  bool eulerian = false;
  Answer hamiltonian = Answer::kUnknown;
  Graph representative;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct ClassRecordOptions {
  std::uint64_t hamilton_budget = kDefaultHamiltonBudget;
  Execution execution = Execution::kParallel;
};

// `o` must be an unlabelled orbit.
ClassRecord class_record(const Orbit& o, std::optional<SchmidtBounds> schmidt = std::nullopt,
                         const ClassRecordOptions& options = {});

}  // namespace lcorbit
