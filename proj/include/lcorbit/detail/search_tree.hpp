#pragma once

// Individualisation-refinement search shared by the graph-state and the
// orbit-graph canonical labelling. A view type G must provide
//
//   int order() const;
//   int colour(int v) const;
//   template <class F> void for_each_neighbour(int v, F&& f) const;
//   Certificate certificate(std::span<const int> lab) const;
//
// where lab[i] is the vertex placed at canonical position i and Certificate
// is totally ordered. Two leaves with equal certificates differ by an
// automorphism.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcorbit::detail {

using Permutation = std::vector<int>;

// Ordered partition of the vertex set. Cells occupy contiguous ranges of
// lab_; a cell is identified by its first position, which never changes once
// assigned because refinement only splits cells in place.
class Partition {
 public:
  template <class G>
  explicit Partition(const G& g) : n_(g.order()), lab_(n_), pos_(n_), cell_(n_), len_(n_, 0) {
    std::iota(lab_.begin(), lab_.end(), 0);
    std::stable_sort(lab_.begin(), lab_.end(),
                     [&](int a, int b) { return g.colour(a) < g.colour(b); });
    std::vector<int> starts;
    for (int i = 0; i < n_; ++i) {
      pos_[lab_[i]] = i;
      if (i == 0 || g.colour(lab_[i]) != g.colour(lab_[i - 1])) {
        starts.push_back(i);
        ++cells_;
      }
      cell_[lab_[i]] = starts.back();
      ++len_[starts.back()];
    }
    refine(g, starts);
  }

  int order() const { return n_; }
  bool discrete() const { return cells_ == n_; }
  std::span<const int> labelling() const { return lab_; }

  // First smallest non-singleton cell; -1 when discrete.
  int target_cell() const {
    int best = -1;
    for (int i = 0; i < n_; i += len_[i]) {
      if (len_[i] > 1 && (best < 0 || len_[i] < len_[best])) best = i;
    }
    return best;
  }

  std::vector<int> cell_members(int start) const {
    std::vector<int> out(lab_.begin() + start, lab_.begin() + start + len_[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Cell lengths in position order plus the refinement trace; equal for
  // nodes related by an automorphism.
  bool same_shape(const Partition& other) const {
    if (cells_ != other.cells_ || trace_ != other.trace_) return false;
    for (int i = 0; i < n_; i += len_[i]) {
      if (len_[i] != other.len_[i]) return false;
    }
    return true;
  }

  template <class G>
  void individualize(const G& g, int v) {
    const int start = cell_[v];
    const int length = len_[start];
    if (length == 1) return;
    const int other = lab_[start];
    std::swap(lab_[start], lab_[pos_[v]]);
    pos_[other] = pos_[v];
    pos_[v] = start;
    len_[start] = 1;
    len_[start + 1] = length - 1;
    for (int i = start + 1; i < start + length; ++i) cell_[lab_[i]] = start + 1;
    ++cells_;
    refine(g, {start});
  }

 private:
  template <class G>
  void refine(const G& g, std::vector<int> queue) {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::vector<int> count(n_, 0);
    std::vector<char> marked(n_, 0);
    std::vector<int> touched;
    std::vector<int> cells;
    for (std::size_t head = 0; head < queue.size() && !discrete(); ++head) {
      const int w = queue[head];
      queued[w] = 0;
      for (int i = w; i < w + len_[w]; ++i) {
        g.for_each_neighbour(lab_[i], [&](int u) {
          if (count[u]++ == 0) touched.push_back(u);
        });
      }
      for (int u : touched) {
        if (!marked[cell_[u]]) {
          marked[cell_[u]] = 1;
          cells.push_back(cell_[u]);
        }
      }
      std::sort(cells.begin(), cells.end());
      for (int x : cells) {
        marked[x] = 0;
        const int length = len_[x];
        if (length == 1) continue;
        auto first = lab_.begin() + x;
        auto last = first + length;
        std::sort(first, last, [&](int a, int b) { return count[a] < count[b]; });
        if (count[*first] == count[*(last - 1)]) continue;
        // Split into fragments of equal count, ascending.
        const bool parent_queued = queued[x] != 0;
        int frag = x;
        for (int i = x; i < x + length; ++i) {
          const int v = lab_[i];
          pos_[v] = i;
          if (i > x && count[v] != count[lab_[i - 1]]) {
            len_[frag] = i - frag;
            trace_ = trace_ * 1000003ULL + static_cast<std::uint64_t>(frag * 131 + len_[frag]);
            frag = i;
            ++cells_;
          }
          cell_[v] = frag;
        }
        len_[frag] = x + length - frag;
        for (int s = x; s < x + length; s += len_[s]) {
          if (!queued[s] && !(parent_queued && s == x)) {
            queued[s] = 1;
            queue.push_back(s);
          }
        }
        if (parent_queued) queued[x] = 1;
      }
      for (int u : touched) count[u] = 0;
      touched.clear();
      cells.clear();
    }
  }

  int n_ = 0;
  int cells_ = 0;
  std::uint64_t trace_ = 0;
  std::vector<int> lab_;
  std::vector<int> pos_;
  std::vector<int> cell_;
  std::vector<int> len_;
};

// Vertex orbits of the group generated by those generators fixing every
// vertex of `prefix`. Returns a representative (smallest member) per vertex.
inline std::vector<int> orbit_representatives(const std::vector<Permutation>& generators,
                                              std::span<const int> prefix, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : generators) {
    const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return p[v] == v; });
    if (!fixes) continue;
    for (int i = 0; i < n; ++i) {
      int a = find(i);
      int b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int i = 0; i < n; ++i) parent[i] = find(i);
  return parent;
}

template <class Certificate>
struct SearchResult {
  std::vector<Permutation> generators;
  std::uint64_t group_order = 1;
  // Canonical labelling: best_labelling[i] is the vertex at canonical position i.
  std::vector<int> best_labelling;
  Certificate best_certificate{};
};

template <class G>
class SearchTree {
 public:
  using Certificate = decltype(std::declval<const G&>().certificate(std::span<const int>{}));

  SearchTree(const G& g, bool want_canonical) : g_(g), want_canonical_(want_canonical) {}

  SearchResult<Certificate> run() {
    const int n = g_.order();
    SearchResult<Certificate> result;
    if (n == 0) return result;

    // Leftmost path.
    Partition p(g_);
    while (!p.discrete()) {
      const int w = p.target_cell();
      const int v = p.cell_members(w).front();
      first_path_.push_back(p);
      first_choice_.push_back(v);
      p.individualize(g_, v);
    }
    first_labelling_.assign(p.labelling().begin(), p.labelling().end());
    first_certificate_ = g_.certificate(first_labelling_);

    // Bottom-up: at each level the orbit of the chosen vertex under the
    // stabiliser of the prefix is completed, giving a stabiliser chain.
    for (int d = static_cast<int>(first_path_.size()) - 1; d >= 0; --d) {
      const Partition& node = first_path_[d];
      const int v = first_choice_[d];
      std::span<const int> prefix(first_choice_.data(), d);
      auto reps = orbit_representatives(generators_, prefix, n);
      for (int w : node.cell_members(node.target_cell())) {
        if (reps[w] == reps[v]) continue;
        Partition child = node;
        child.individualize(g_, w);
        std::vector<int> path(prefix.begin(), prefix.end());
        path.push_back(w);
        if (auto gamma = find_equivalent_leaf(child, path, d + 1)) {
          generators_.push_back(std::move(*gamma));
          reps = orbit_representatives(generators_, prefix, n);
        }
      }
      const auto orbit_size =
          static_cast<std::uint64_t>(std::count(reps.begin(), reps.end(), reps[v]));
      if (__builtin_mul_overflow(order_, orbit_size, &order_)) {
        throw std::overflow_error("automorphism group order exceeds 64 bits");
      }
    }

    best_labelling_ = first_labelling_;
    best_certificate_ = first_certificate_;
    if (want_canonical_) {
      std::vector<int> path;
      canonical_search(Partition(g_), path);
    }

    result.generators = std::move(generators_);
    result.group_order = order_;
    result.best_labelling = std::move(best_labelling_);
    result.best_certificate = std::move(best_certificate_);
    return result;
  }

 private:
  // gamma maps the vertex at position i of `from` to the vertex at position
  // i of `to`.
  static Permutation leaf_map(std::span<const int> from, std::span<const int> to) {
    Permutation gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
    return gamma;
  }

  std::optional<Permutation> find_equivalent_leaf(const Partition& p, std::vector<int>& path,
                                                  std::size_t depth) {
    if (depth < first_path_.size()) {
      if (p.discrete() || !p.same_shape(first_path_[depth])) return std::nullopt;
    } else if (!p.discrete()) {
      return std::nullopt;
    }
    if (p.discrete()) {
      if (g_.certificate(p.labelling()) == first_certificate_) {
        return leaf_map(first_labelling_, p.labelling());
      }
      return std::nullopt;
    }
    const auto reps = orbit_representatives(generators_, path, p.order());
    std::vector<int> tried;
    for (int x : p.cell_members(p.target_cell())) {
      if (std::find(tried.begin(), tried.end(), reps[x]) != tried.end()) continue;
      tried.push_back(reps[x]);
      Partition child = p;
      child.individualize(g_, x);
      path.push_back(x);
      auto found = find_equivalent_leaf(child, path, depth + 1);
      path.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  void canonical_search(const Partition& p, std::vector<int>& path) {
    if (p.discrete()) {
      Certificate c = g_.certificate(p.labelling());
      if (c < best_certificate_) {
        best_certificate_ = std::move(c);
        best_labelling_.assign(p.labelling().begin(), p.labelling().end());
      } else if (c == best_certificate_) {
        Permutation gamma = leaf_map(best_labelling_, p.labelling());
        bool identity = true;
        for (int i = 0; i < p.order(); ++i) identity = identity && gamma[i] == i;
        if (!identity) generators_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<int> tried;
    for (int x : p.cell_members(p.target_cell())) {
      const auto reps = orbit_representatives(generators_, path, p.order());
      bool skip = false;
      for (int t : tried) skip = skip || reps[t] == reps[x];
      if (skip) continue;
      tried.push_back(x);
      Partition child = p;
      child.individualize(g_, x);
      path.push_back(x);
      canonical_search(child, path);
      path.pop_back();
    }
  }

  const G& g_;
  bool want_canonical_;
  std::vector<Partition> first_path_;
  std::vector<int> first_choice_;
  std::vector<int> first_labelling_;
  Certificate first_certificate_{};
  std::vector<int> best_labelling_;
  Certificate best_certificate_{};
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
};

}  // namespace lcorbit::detail
