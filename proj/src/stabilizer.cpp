#include "lcorbit/stabilizer.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcorbit {

namespace {

std::uint32_t key(const Pauli& p) { return p.x | (p.z << 16); }

Pauli shifted(const Pauli& p, int q) { return {p.x << q, p.z << q, p.phase}; }

// Row-reduced generating set keyed by pivot bit.
class Basis {
 public:
  // False if p is already generated (up to a sign, checked by contains()).
  bool insert(Pauli p) {
    p = reduce(p);
    if (p.is_identity()) return false;
    rows_[31 - __builtin_clz(key(p))] = p;
    ++rank_;
    return true;
  }

  bool contains(const Pauli& p) const {
    const Pauli r = reduce(p);
    return r.is_identity() && r.phase == 0;
  }

  int rank() const { return rank_; }

 private:
  Pauli reduce(Pauli p) const {
    while (key(p) != 0) {
      const int pivot = 31 - __builtin_clz(key(p));
      if (!rows_[pivot]) break;
      p = p * *rows_[pivot];
    }
    return p;
  }

  std::array<std::optional<Pauli>, 32> rows_;
  int rank_ = 0;
};

Basis basis_of(const StabilizerTableau& t) {
  Basis b;
  for (const auto& g : t.generators) b.insert(g);
  return b;
}

Graph random_connected(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace

Pauli operator*(const Pauli& a, const Pauli& b) {
  // Z^{z_a} X^{x_b} = (-1)^{z_a . x_b} X^{x_b} Z^{z_a}.
  const int swaps = __builtin_popcount(a.z & b.x);
  return {a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * swaps) & 3};
}

CliffordGate sqrt_minus_i_x() { return {Pauli::x_on(0), Pauli::y_on(0).negated()}; }

CliffordGate sqrt_i_z() { return {Pauli::y_on(0).negated(), Pauli::z_on(0)}; }

Pauli conjugate(const Pauli& p, int qubit, const CliffordGate& u) {
  const std::uint32_t bit = 1U << qubit;
  Pauli out{p.x & ~bit, p.z & ~bit, p.phase};
  if (p.x & bit) out = out * shifted(u.image_x, qubit);
  if (p.z & bit) out = out * shifted(u.image_z, qubit);
  return out;
}

StabilizerTableau graph_to_tableau(const Graph& g) {
  StabilizerTableau t;
  t.qubits = g.order();
  for (int v = 0; v < g.order(); ++v) t.generators.push_back({1U << v, g.neighbours(v), 0});
  return t;
}

StabilizerTableau apply_lc_unitary(const StabilizerTableau& t, int alpha, VertexMask neighbours) {
  if (alpha < 0 || alpha >= t.qubits) {
    throw std::invalid_argument("qubit " + std::to_string(alpha) + " out of range");
  }
  if ((neighbours >> alpha) & 1U) {
    throw std::invalid_argument("the complemented qubit cannot be its own neighbour");
  }
  if (t.qubits < 16 && (neighbours >> t.qubits) != 0) {
    throw std::invalid_argument("neighbour outside the register");
  }
  StabilizerTableau out = t;
  for (Pauli& p : out.generators) {
    p = conjugate(p, alpha, sqrt_minus_i_x());
    for (VertexMask m = neighbours; m != 0; m &= m - 1) {
      p = conjugate(p, __builtin_ctz(m), sqrt_i_z());
    }
  }
  return out;
}

bool stabilizer_groups_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
  if (a.qubits != b.qubits) return false;
  const Basis ba = basis_of(a);
  const Basis bb = basis_of(b);
  if (ba.rank() != bb.rank()) return false;
  for (const auto& g : a.generators) {
    if (!bb.contains(g)) return false;
  }
  return true;
}

bool verify_lc(const Graph& g, int alpha) {
  const auto transformed = apply_lc_unitary(graph_to_tableau(g), alpha, g.neighbours(alpha));
  return stabilizer_groups_equal(transformed, graph_to_tableau(local_complement(g, alpha)));
}

VerificationSummary verify_lc_exhaustive(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("exhaustive verification covers 1 to 5 qubits");
  VerificationSummary s;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if ((code >> bit) & 1U) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    for (int a = 0; a < n; ++a) {
      ++s.checked;
      if (!verify_lc(g, a)) ++s.failures;
    }
  }
  return s;
}

VerificationSummary verify_lc_random(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("qubit count out of range");
  std::mt19937_64 rng(seed);
  VerificationSummary s;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Graph g = random_connected(rng, n);
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    ++s.checked;
    if (!verify_lc(g, a)) ++s.failures;
  }
  return s;
}

}  // namespace lcorbit
