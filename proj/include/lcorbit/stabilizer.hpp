#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcorbit/graph.hpp"

namespace lcorbit {

// i^phase * prod_j X_j^{x_j} Z_j^{z_j}, phase taken mod 4. Qubit j is bit j.
struct Pauli {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  int phase = 0;

  static Pauli x_on(int q) { return {1U << q, 0, 0}; }
  static Pauli z_on(int q) { return {0, 1U << q, 0}; }
  // Y = i X Z.
  static Pauli y_on(int q) { return {1U << q, 1U << q, 1}; }

  bool is_identity() const { return x == 0 && z == 0; }
  Pauli negated() const { return {x, z, (phase + 2) & 3}; }

  friend bool operator==(const Pauli&, const Pauli&) = default;
};

Pauli operator*(const Pauli& a, const Pauli& b);

// Single-qubit Clifford, given by the images of X and Z under U . U^dagger.
struct CliffordGate {
  Pauli image_x;  // on qubit 0
  Pauli image_z;
};

// exp(-i pi/4 X): X -> X, Z -> -Y.
CliffordGate sqrt_minus_i_x();
// exp(i pi/4 Z): X -> -Y, Z -> Z.
CliffordGate sqrt_i_z();

// U P U^dagger for U acting on `qubit`.
Pauli conjugate(const Pauli& p, int qubit, const CliffordGate& u);

struct StabilizerTableau {
  int qubits = 0;
  std::vector<Pauli> generators;
};

// Generator v is X_v prod_{u in N(v)} Z_u with sign +1.
StabilizerTableau graph_to_tableau(const Graph& g);

// Conjugates every generator by sqrt(-iX) on alpha and sqrt(iZ) on each
// qubit of `neighbours`. Throws std::invalid_argument if alpha is among
// them or out of range.
StabilizerTableau apply_lc_unitary(const StabilizerTableau& t, int alpha, VertexMask neighbours);

// Same qubit count and the generated groups coincide, signs included.
bool stabilizer_groups_equal(const StabilizerTableau& a, const StabilizerTableau& b);

// The unitary, applied to |g>, gives |local_complement(g, alpha)>.
bool verify_lc(const Graph& g, int alpha);

struct VerificationSummary {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

// Every labelled connected graph on n <= 5 vertices and every vertex.
VerificationSummary verify_lc_exhaustive(int n);
// `trials` random connected graphs on n vertices with a random vertex each.
VerificationSummary verify_lc_random(int n, std::uint64_t trials, std::uint64_t seed);

}  // namespace lcorbit
