#include "lcorbit/metrics.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

extern "C" {
#include <picosat/picosat.h>
}

#include "lcorbit/canon.hpp"
#include "lcorbit/detail/colouring.hpp"
#include "lcorbit/rankwidth.hpp"

namespace lcorbit {

namespace {

// Backtracking k-colouring that always branches on the most saturated
// vertex and never opens more than one new colour per level.
class Colouring {
 public:
  enum class Result { kFound, kNone, kBudget };

  // Ties in saturation go to the vertex with more uncoloured neighbours,
  // then to the lower `priority`. A zero budget means no limit.
  Colouring(const SimpleGraph& g, int k, std::vector<std::uint32_t> priority, std::uint64_t budget)
      : g_(g), k_(k), priority_(std::move(priority)), budget_(budget), colour_(g.order(), -1),
        seen_(static_cast<std::size_t>(g.order()) * k, 0), saturation_(g.order(), 0), open_degree_(g.order()) {
    for (int v = 0; v < g.order(); ++v) open_degree_[v] = g.degree(v);
  }

  Result solve() {
    if (step(0, 0)) return Result::kFound;
    return exhausted_ ? Result::kBudget : Result::kNone;
  }

 private:
  bool before(int a, int b) const {
    if (saturation_[a] != saturation_[b]) return saturation_[a] > saturation_[b];
    if (open_degree_[a] != open_degree_[b]) return open_degree_[a] > open_degree_[b];
    return priority_[a] < priority_[b];
  }

  int select() const {
    int best = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[v] < 0 && (best < 0 || before(v, best))) best = v;
    }
    return best;
  }

  void paint(int v, int c, int delta) {
    colour_[v] = delta > 0 ? c : -1;
    for (int u : g_.neighbours(v)) {
      open_degree_[u] -= delta;
      auto& count = seen_[static_cast<std::size_t>(u) * k_ + c];
      if (delta > 0 && count++ == 0) ++saturation_[u];
      if (delta < 0 && --count == 0) --saturation_[u];
    }
  }

  bool step(int done, int used) {
    if (done == g_.order()) return true;
    if (budget_ != 0 && ++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int v = select();
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit && !exhausted_; ++c) {
      if (seen_[static_cast<std::size_t>(v) * k_ + c] != 0) continue;
      paint(v, c, +1);
      if (step(done + 1, std::max(used, c + 1))) return true;
      paint(v, c, -1);
    }
    return false;
  }

  const SimpleGraph& g_;
  int k_;
  std::vector<std::uint32_t> priority_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> colour_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::vector<int> open_degree_;
};

std::vector<int> greedy_clique(const SimpleGraph& g) {
  std::vector<int> best;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> candidates = g.neighbours(v);
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique{v};
    for (int u : candidates) {
      if (std::all_of(clique.begin(), clique.end(), [&](int w) { return g.adjacent(u, w); })) {
        clique.push_back(u);
      }
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

int greedy_clique_bound(const SimpleGraph& g) { return static_cast<int>(greedy_clique(g).size()); }

// Greedy DSATUR colouring without backtracking.
std::vector<int> dsatur_colouring(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (colour[u] < 0 && (v < 0 || saturation[u] > saturation[v] ||
                            (saturation[u] == saturation[v] && g.degree(u) > g.degree(v)))) {
        v = u;
      }
    }
    int c = 0;
    while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
    colour[v] = c;
    for (int u : g.neighbours(v)) {
      if (static_cast<int>(seen[u].size()) <= c) seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++saturation[u];
      }
    }
  }
  return colour;
}

int colours_used(const std::vector<int>& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Iterated greedy: recolouring vertices class by class, in any class order,
// never needs more colours than the current colouring.
int improved_upper_bound(const SimpleGraph& g) {
  std::vector<int> colour = dsatur_colouring(g);
  const int n = g.order();
  std::mt19937_64 rng(0x5eed);
  std::vector<int> order(n);
  std::vector<int> mark(n, -1);
  for (int round = 0; round < 200 && colours_used(colour) > 2; ++round) {
    const int k = colours_used(colour);
    std::vector<int> rank(k);
    std::iota(rank.begin(), rank.end(), 0);
    if (round % 2 == 0) {
      std::reverse(rank.begin(), rank.end());
    } else {
      std::shuffle(rank.begin(), rank.end(), rng);
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank[colour[a]] < rank[colour[b]]; });
    std::vector<int> next(n, -1);
    for (int v : order) {
      for (int u : g.neighbours(v)) {
        if (next[u] >= 0) mark[next[u]] = v;
      }
      int c = 0;
      while (mark[c] == v) ++c;
      next[v] = c;
    }
    std::fill(mark.begin(), mark.end(), -1);
    colour = std::move(next);
  }
  return colours_used(colour);
}

// Tabu search for a proper k-colouring: each step recolours one vertex that
// has a conflict, and the undo move stays forbidden for a while.
bool tabu_colouring(const SimpleGraph& g, int k, std::uint64_t steps, std::uint64_t seed) {
  const int n = g.order();
  const auto at = [k](int v, int c) { return static_cast<std::size_t>(v) * k + c; };
  std::mt19937_64 rng(seed);
  std::vector<int> colour(n);
  for (int& c : colour) c = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  std::vector<int> clashes(static_cast<std::size_t>(n) * k, 0);
  std::vector<std::uint64_t> tabu_until(static_cast<std::size_t>(n) * k, 0);
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbours(v)) {
      ++clashes[at(v, colour[u])];
      if (u > v && colour[u] == colour[v]) ++total;
    }
  }
  std::vector<int> conflicted;
  std::vector<int> slot(n, -1);
  const auto refresh = [&](int v) {
    const bool bad = clashes[at(v, colour[v])] > 0;
    if (bad && slot[v] < 0) {
      slot[v] = static_cast<int>(conflicted.size());
      conflicted.push_back(v);
    } else if (!bad && slot[v] >= 0) {
      const int last = conflicted.back();
      conflicted[slot[v]] = last;
      slot[last] = slot[v];
      conflicted.pop_back();
      slot[v] = -1;
    }
  };
  for (int v = 0; v < n; ++v) refresh(v);
  for (std::uint64_t step = 0; step < steps && total > 0; ++step) {
    int best_v = -1;
    int best_c = -1;
    int best_delta = std::numeric_limits<int>::max();
    std::uint64_t ties = 0;
    for (int v : conflicted) {
      const int own = clashes[at(v, colour[v])];
      for (int c = 0; c < k; ++c) {
        if (c == colour[v]) continue;
        const int delta = clashes[at(v, c)] - own;
        if (tabu_until[at(v, c)] > step && total + delta > 0) continue;
        if (delta < best_delta) {
          best_delta = delta;
          best_v = v;
          best_c = c;
          ties = 1;
        } else if (delta == best_delta && rng() % ++ties == 0) {
          best_v = v;
          best_c = c;
        }
      }
    }
    if (best_v < 0) continue;
    const int old = colour[best_v];
    colour[best_v] = best_c;
    total += best_delta;
    for (int u : g.neighbours(best_v)) {
      --clashes[at(u, old)];
      ++clashes[at(u, best_c)];
      refresh(u);
    }
    refresh(best_v);
    tabu_until[at(best_v, old)] = step + rng() % 10 + conflicted.size() * 6 / 10;
  }
  return total == 0;
}

}  // namespace

namespace detail {

// Exact decision by a SAT solver. The clique found greedily is precoloured
// to break colour symmetry.
bool sat_colourable(const SimpleGraph& g, int k) {
  const std::vector<int> clique = greedy_clique(g);
  if (static_cast<int>(clique.size()) > k) return false;
  const auto var = [k](int v, int c) { return v * k + c + 1; };
  std::unique_ptr<PicoSAT, void (*)(PicoSAT*)> solver(picosat_init(), picosat_reset);
  PicoSAT* ps = solver.get();
  for (int v = 0; v < g.order(); ++v) {
    for (int c = 0; c < k; ++c) picosat_add(ps, var(v, c));
    picosat_add(ps, 0);
    for (int u : g.neighbours(v)) {
      if (u <= v) continue;
      for (int c = 0; c < k; ++c) {
        picosat_add(ps, -var(v, c));
        picosat_add(ps, -var(u, c));
        picosat_add(ps, 0);
      }
    }
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    picosat_add(ps, var(clique[i], static_cast<int>(i)));
    picosat_add(ps, 0);
  }
  const int result = picosat_sat(ps, -1);
  if (result != PICOSAT_SATISFIABLE) return false;
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbours(v)) {
      for (int c = 0; c < k; ++c) {
        if (u != v && picosat_deref(ps, var(v, c)) > 0 && picosat_deref(ps, var(u, c)) > 0) {
          throw std::logic_error("SAT colouring is not proper");
        }
      }
    }
  }
  return true;
}

}  // namespace detail

namespace {

// Tabu search and short backtracking runs settle most instances; the SAT
// decision is the exact fallback.
bool colourable(const SimpleGraph& g, int k) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    if (tabu_colouring(g, k, 200000, seed)) return true;
  }
  std::mt19937_64 rng(0xc0105);
  std::vector<std::uint32_t> priority(g.order());
  std::iota(priority.begin(), priority.end(), 0U);
  for (int round = 0; round < 6; ++round) {
    const auto r = Colouring(g, k, priority, std::uint64_t{2000} << round).solve();
    if (r != Colouring::Result::kBudget) return r == Colouring::Result::kFound;
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  return detail::sat_colourable(g, k);
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbours(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

class HamiltonSearch {
 public:
  // Ties between candidate next vertices go to the lower `priority`.
  HamiltonSearch(const SimpleGraph& g, std::uint64_t budget, std::vector<std::uint32_t> priority)
      : g_(g),
        budget_(budget),
        priority_(std::move(priority)),
        on_path_(g.order(), false),
        low_(g.order()),
        disc_(g.order()) {}

  Answer run() {
    const int n = g_.order();
    int start = 0;
    for (int v = 1; v < n; ++v) {
      if (g_.degree(v) < g_.degree(start)) start = v;
    }
    start_ = start;
    on_path_[start] = true;
    try {
      return extend(start, 1) ? Answer::kYes : Answer::kNo;
    } catch (const BudgetExhausted&) {
      return Answer::kUnknown;
    }
  }

 private:
  struct BudgetExhausted {};
  static constexpr int kNone = -1;
  static constexpr int kDeadEnd = -2;

  bool open(int v, int end) const { return !on_path_[v] || v == end || v == start_; }

  // Checks that the vertices off the path can still be threaded from `end`
  // back to the start. Returns kDeadEnd if not, else the vertex that must
  // come next (kNone if there is no such vertex).
  int inspect(int end) {
    const int n = g_.order();
    int forced = kNone;
    for (int w = 0; w < n; ++w) {
      if (on_path_[w]) continue;
      int usable = 0;
      bool next_to_end = false;
      for (int x : g_.neighbours(w)) {
        if (open(x, end)) ++usable;
        next_to_end = next_to_end || x == end;
      }
      if (usable < 2) return kDeadEnd;
      // w has only two ways in and out, one of them the current end.
      if (usable == 2 && next_to_end && end != start_) {
        if (forced != kNone) return kDeadEnd;
        forced = w;
      }
    }
    return biconnected(end) ? forced : kDeadEnd;
  }

  // The open vertices plus an edge end-start must form a 2-connected graph.
  bool biconnected(int end) {
    const int n = g_.order();
    std::fill(disc_.begin(), disc_.end(), -1);
    int time = 0;
    int open_count = 0;
    for (int v = 0; v < n; ++v) open_count += open(v, end) ? 1 : 0;
    if (open_count < 3) return true;
    struct Frame {
      int v;
      int parent;
      std::size_t next;
      bool closing_done;
    };
    std::vector<Frame> stack{{end, -1, 0, false}};
    disc_[end] = low_[end] = time++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g_.neighbours(f.v);
      int child = -1;
      // The virtual closing edge is treated as one more neighbour.
      while (child < 0) {
        int x;
        if (f.next < nb.size()) {
          x = nb[f.next++];
        } else if (!f.closing_done && end != start_ && (f.v == end || f.v == start_)) {
          f.closing_done = true;
          x = f.v == end ? start_ : end;
        } else {
          break;
        }
        if (!open(x, end) || x == f.parent) continue;
        if (disc_[x] >= 0) {
          low_[f.v] = std::min(low_[f.v], disc_[x]);
        } else {
          child = x;
        }
      }
      if (child >= 0) {
        disc_[child] = low_[child] = time++;
        if (f.v == end) ++root_children;
        stack.push_back({child, f.v, 0, false});
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low_[p.v] = std::min(low_[p.v], low_[done.v]);
        if (p.v != end && low_[done.v] >= disc_[p.v]) return false;
      }
    }
    return time == open_count && root_children == 1;
  }

  int free_degree(int v) const {
    int d = 0;
    for (int x : g_.neighbours(v)) d += on_path_[x] ? 0 : 1;
    return d;
  }

  bool extend(int end, int length) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (length == g_.order()) return g_.adjacent(end, start_);
    const int forced = inspect(end);
    if (forced == kDeadEnd) return false;
    std::vector<int> next;
    if (forced != kNone) {
      next.push_back(forced);
    } else {
      for (int x : g_.neighbours(end)) {
        if (!on_path_[x]) next.push_back(x);
      }
      std::sort(next.begin(), next.end(), [&](int a, int b) {
        return std::pair(free_degree(a), priority_[a]) < std::pair(free_degree(b), priority_[b]);
      });
    }
    for (int x : next) {
      on_path_[x] = true;
      if (extend(x, length + 1)) return true;
      on_path_[x] = false;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> priority_;
  std::uint64_t nodes_ = 0;
  int start_ = 0;
  std::vector<bool> on_path_;
  std::vector<int> low_;
  std::vector<int> disc_;
};

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::kNo:
      return "no";
    case Answer::kYes:
      return "yes";
    case Answer::kUnknown:
      break;
  }
  return "unknown";
}

int chromatic_number(const SimpleGraph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (is_bipartite(g)) return 2;
  int upper = improved_upper_bound(g);
  for (int k = std::max(3, greedy_clique_bound(g)); k < upper; ++k) {
    if (colourable(g, k)) return k;
  }
  return upper;
}

int chromatic_number(const Graph& g) { return chromatic_number(SimpleGraph::from_graph(g)); }

int chromatic_index(const SimpleGraph& g) {
  const int delta = g.max_degree();
  if (delta == 0) return 0;
  // A graph with more edges than delta * floor(n / 2) cannot be split into
  // delta matchings.
  const long long capacity = static_cast<long long>(delta) * (g.order() / 2);
  if (g.edge_count() > capacity) return delta + 1;
  return colourable(g.without_loops().line_graph(), delta) ? delta : delta + 1;
}

int chromatic_index(const Graph& g) { return chromatic_index(SimpleGraph::from_graph(g)); }

bool is_planar(const SimpleGraph& g) {
  const int n = g.order();
  const int m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

Answer has_hamiltonian_cycle(const SimpleGraph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return Answer::kNo;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return Answer::kNo;
  }
  // Short searches with shuffled tie-breaks can only confirm a cycle; the
  // final search in vertex order is the exhaustive one.
  std::mt19937_64 rng(0x4a41);
  std::vector<std::uint32_t> priority(n);
  for (int round = 0; round < 12; ++round) {
    std::iota(priority.begin(), priority.end(), 0U);
    std::shuffle(priority.begin(), priority.end(), rng);
    if (HamiltonSearch(g, 4000ULL << round, priority).run() == Answer::kYes) return Answer::kYes;
  }
  std::iota(priority.begin(), priority.end(), 0U);
  return HamiltonSearch(g, budget, priority).run();
}

bool is_tree(const Orbit& o) {
  const SimpleGraph s = o.skeleton(false);
  return is_connected(s) && s.edge_count() == s.order() - 1;
}

bool has_eulerian_circuit(const SimpleGraph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if ((g.degree(v) + (g.has_loop(v) ? 2 : 0)) % 2 != 0) return false;
  }
  return true;
}

bool has_eulerian_circuit(const Orbit& o) { return has_eulerian_circuit(o.skeleton(true)); }

std::uint64_t orbit_automorphism_order(const Orbit& o) {
  return automorphism_group(o.skeleton(true)).order;
}

Graph minimum_edge_representative(const Orbit& o) {
  std::optional<Graph> best;
  for (const Graph& g : o.vertices) {
    if (best && g.edge_count() > best->edge_count()) continue;
    const Graph c = o.kind == OrbitKind::kUnlabelled ? g : canonical_form(g).canon;
    if (!best || c.edge_count() < best->edge_count() || c < *best) best = c;
  }
  return best.value_or(Graph());
}

ClassRecord class_record(const Orbit& o, std::optional<SchmidtBounds> schmidt,
                         const ClassRecordOptions& options) {
  ClassRecord r;
  r.representative = minimum_edge_representative(o);
  r.n_qubits = r.representative.order();
  r.min_edges = r.representative.edge_count();
  r.schmidt = schmidt;
  r.rank_width = rank_width(r.representative, {.execution = options.execution}).width;
  const OrbitStats stats = o.stats();
  r.orbit_size = stats.vertex_count;
  r.orbit_edges = stats.edge_count;

  const auto members = static_cast<std::int64_t>(o.vertices.size());
  std::vector<int> chi(members);
  std::vector<int> chi_e(members);
  if (options.execution == Execution::kSerial) {
    for (std::int64_t i = 0; i < members; ++i) {
      chi[i] = chromatic_number(o.vertices[i]);
      chi_e[i] = chromatic_index(o.vertices[i]);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
    for (std::int64_t i = 0; i < members; ++i) {
      chi[i] = chromatic_number(o.vertices[i]);
      chi_e[i] = chromatic_index(o.vertices[i]);
    }
  }
  r.chi_g = *std::min_element(chi.begin(), chi.end());
  r.chi_g_e = *std::min_element(chi_e.begin(), chi_e.end());

  const SimpleGraph stripped = o.skeleton(false);
  r.chi_orbit = chromatic_number(stripped);
  r.chi_orbit_e = chromatic_index(stripped);
  r.is_tree = is_tree(o);
  const DistanceTable d = all_pairs_distances(stripped, options.execution);
  r.mean_distance = d.mean;
  r.diameter = d.diameter;
  r.aut_order = orbit_automorphism_order(o);
  r.planar = is_planar(stripped);
  r.has_loop = o.has_self_loops();
  r.eulerian = has_eulerian_circuit(o);
  r.hamiltonian = has_hamiltonian_cycle(stripped, options.hamilton_budget);
  return r;
}

}  // namespace lcorbit
