#include "lcorbit/rankwidth.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "lcorbit/errors.hpp"

namespace lcorbit {

namespace {

constexpr int kMaxLeaves = 10;

// Rank over GF(2) of the rows in `rows_side` restricted to columns `cols`.
int rank_between(const Graph& g, VertexMask rows_side, VertexMask cols) {
  std::array<VertexMask, Graph::kMaxVertices> basis{};  // indexed by pivot bit
  int rank = 0;
  for (VertexMask m = rows_side; m != 0; m &= m - 1) {
    VertexMask row = g.neighbours(__builtin_ctz(m)) & cols;
    while (row != 0) {
      const int pivot = 31 - __builtin_clz(row);
      if (basis[pivot] == 0) {
        basis[pivot] = row;
        ++rank;
        break;
      }
      row ^= basis[pivot];
    }
  }
  return rank;
}

// Mutable tree grown one leaf at a time. Leaf nodes carry graph vertex ids,
// internal nodes are numbered from `leaves` upwards.
class GrowingTree {
 public:
  explicit GrowingTree(int leaves) : leaves_(leaves) {}

  void start(int a, int b, int c) {
    const int centre = leaves_;
    edges_ = {{centre, a}, {centre, b}, {centre, c}};
    next_internal_ = centre + 1;
    placed_ = static_cast<VertexMask>((1U << a) | (1U << b) | (1U << c));
  }

  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Splits edge i with a new internal node carrying `leaf`.
  void insert(int i, int leaf) {
    const auto [a, b] = edges_[i];
    const int w = next_internal_++;
    edges_[i] = {a, w};
    edges_.push_back({w, b});
    edges_.push_back({w, leaf});
    placed_ |= static_cast<VertexMask>(1U << leaf);
  }

  void undo(int i, int leaf) {
    edges_.pop_back();
    const int b = edges_.back().second;
    edges_.pop_back();
    edges_[i].second = b;
    --next_internal_;
    placed_ &= static_cast<VertexMask>(~(1U << leaf));
  }

  SubcubicTree snapshot() const {
    SubcubicTree t;
    t.leaf_count = leaves_;
    t.node_count = leaves_ == 2 ? 2 : next_internal_;
    t.edges = edges_;
    for (auto& e : t.edges) {
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
  }

  // Maximum over edges of the cut-rank inside the subgraph induced by the
  // leaves placed so far. Never exceeds the width of any completion.
  int partial_width(const Graph& g) const {
    std::array<std::array<int, 3>, 2 * kMaxLeaves> adj{};
    std::array<int, 2 * kMaxLeaves> deg{};
    for (const auto& [a, b] : edges_) {
      adj[a][deg[a]++] = b;
      adj[b][deg[b]++] = a;
    }
    // Post-order over the tree rooted at the first edge's first endpoint.
    std::array<int, 2 * kMaxLeaves> parent{};
    std::array<int, 2 * kMaxLeaves> order{};
    std::array<VertexMask, 2 * kMaxLeaves> below{};
    int count = 0;
    const int root = edges_.front().first;
    parent[root] = -1;
    order[count++] = root;
    for (int head = 0; head < count; ++head) {
      const int u = order[head];
      for (int k = 0; k < deg[u]; ++k) {
        const int v = adj[u][k];
        if (v != parent[u]) {
          parent[v] = u;
          order[count++] = v;
        }
      }
    }
    int width = 0;
    for (int k = count - 1; k >= 0; --k) {
      const int u = order[k];
      if (u < leaves_) below[u] |= static_cast<VertexMask>(1U << u);
      if (parent[u] >= 0) {
        below[parent[u]] |= below[u];
        width = std::max(width, rank_between(g, below[u], placed_ & ~below[u]));
      }
    }
    return width;
  }

 private:
  int leaves_;
  int next_internal_ = 0;
  VertexMask placed_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Vertices in breadth-first order from a vertex of maximum degree, so that
// early partial trees already carry dense cuts.
std::vector<int> insertion_order(const Graph& g) {
  const int n = g.order();
  int start = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(start)) start = v;
  }
  std::vector<int> order;
  VertexMask seen = 0;
  for (int s = start, round = 0; round < n; s = round++) {
    if ((seen >> s) & 1U) continue;
    seen |= static_cast<VertexMask>(1U << s);
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (VertexMask m = g.neighbours(order[head]) & ~seen; m != 0; m &= m - 1) {
        const int v = __builtin_ctz(m);
        seen |= static_cast<VertexMask>(1U << v);
        order.push_back(v);
      }
    }
  }
  return order;
}

class Search {
 public:
  Search(const Graph& g, std::vector<int> order, bool prune, int lower_bound)
      : g_(g), order_(std::move(order)), prune_(prune), lower_bound_(lower_bound) {}

  // Explores completions of `tree` (whose first `depth` leaves are placed).
  void run(GrowingTree& tree, int depth, std::atomic<int>* shared) {
    shared_ = shared;
    dfs(tree, depth);
  }

  int best_width() const { return best_width_; }
  const SubcubicTree& best_tree() const { return best_tree_; }

 private:
  int incumbent() const {
    const int shared = shared_ != nullptr ? shared_->load(std::memory_order_relaxed)
                                          : std::numeric_limits<int>::max();
    return std::min(best_width_, shared);
  }

  bool finished() const { return prune_ && incumbent() <= lower_bound_; }

  void dfs(GrowingTree& tree, int depth) {
    if (depth == static_cast<int>(order_.size())) {
      const int w = tree.partial_width(g_);
      if (w < best_width_) {
        best_width_ = w;
        best_tree_ = tree.snapshot();
        if (shared_ != nullptr) {
          int cur = shared_->load();
          while (w < cur && !shared_->compare_exchange_weak(cur, w)) {
          }
        }
      }
      return;
    }
    const int leaf = order_[depth];
    const int edges = tree.edge_count();
    for (int i = 0; i < edges && !finished(); ++i) {
      tree.insert(i, leaf);
      if (!prune_ || tree.partial_width(g_) < incumbent()) dfs(tree, depth + 1);
      tree.undo(i, leaf);
    }
  }

  const Graph& g_;
  std::vector<int> order_;
  bool prune_;
  int lower_bound_;
  std::atomic<int>* shared_ = nullptr;
  int best_width_ = std::numeric_limits<int>::max();
  SubcubicTree best_tree_;
};

// Every partial tree holding the first `depth` leaves of `order`.
void collect_prefixes(GrowingTree& tree, const std::vector<int>& order, int placed, int depth,
                      std::vector<std::vector<int>>& choices, std::vector<int>& path) {
  if (placed == depth) {
    choices.push_back(path);
    return;
  }
  for (int i = 0; i < tree.edge_count(); ++i) {
    tree.insert(i, order[placed]);
    path.push_back(i);
    collect_prefixes(tree, order, placed + 1, depth, choices, path);
    path.pop_back();
    tree.undo(i, order[placed]);
  }
}

void check_capacity(int n) {
  if (n > kMaxLeaves) {
    throw CapacityError("rank-width search is limited to " + std::to_string(kMaxLeaves) +
                        " vertices");
  }
}

}  // namespace

int cut_rank(const Graph& g, VertexMask side) {
  const auto all = static_cast<VertexMask>((1U << g.order()) - 1U);
  return rank_between(g, side & all, all & ~side);
}

std::vector<VertexMask> SubcubicTree::edge_cuts() const {
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<VertexMask> cuts;
  for (const auto& [a, b] : edges) {
    VertexMask mask = 0;
    std::vector<std::pair<int, int>> stack{{b, a}};
    while (!stack.empty()) {
      const auto [u, from] = stack.back();
      stack.pop_back();
      if (u < leaf_count) mask |= static_cast<VertexMask>(1U << u);
      for (int v : adj[u]) {
        if (v != from) stack.push_back({v, u});
      }
    }
    cuts.push_back(mask);
  }
  return cuts;
}

int decomposition_width(const Graph& g, const SubcubicTree& tree) {
  int width = 0;
  for (VertexMask cut : tree.edge_cuts()) width = std::max(width, cut_rank(g, cut));
  return width;
}

RankDecomposition rank_width(const Graph& g, const RankWidthOptions& options) {
  const int n = g.order();
  check_capacity(n);
  RankDecomposition out;
  if (n < 2) {
    out.tree.leaf_count = n;
    out.tree.node_count = n;
    return out;
  }
  if (n == 2) {
    out.tree = {2, 2, {{0, 1}}};
    out.width = cut_rank(g, 1);
    return out;
  }
  const auto order = insertion_order(g);
  const int lower_bound = g.edge_count() > 0 ? 1 : 0;

  GrowingTree root(n);
  root.start(order[0], order[1], order[2]);
  const int split_depth = std::min(n, 6);
  std::vector<std::vector<int>> prefixes;
  std::vector<int> path;
  collect_prefixes(root, order, 3, split_depth, prefixes, path);

  auto branch = [&](std::size_t k, std::atomic<int>* shared) {
    GrowingTree tree(n);
    tree.start(order[0], order[1], order[2]);
    for (std::size_t d = 0; d < prefixes[k].size(); ++d) tree.insert(prefixes[k][d], order[3 + d]);
    Search s(g, order, options.prune, lower_bound);
    if (!options.prune || tree.partial_width(g) < (shared ? shared->load() : s.best_width())) {
      s.run(tree, split_depth, shared);
    }
    return s;
  };

  std::vector<int> widths(prefixes.size(), std::numeric_limits<int>::max());
  std::vector<SubcubicTree> trees(prefixes.size());
  if (options.execution == Execution::kSerial) {
    std::atomic<int> shared{std::numeric_limits<int>::max()};
    for (std::size_t k = 0; k < prefixes.size(); ++k) {
      const Search s = branch(k, &shared);
      widths[k] = s.best_width();
      trees[k] = s.best_tree();
    }
  } else {
    std::atomic<int> shared{std::numeric_limits<int>::max()};
    const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (std::int64_t k = 0; k < count; ++k) {
      const Search s = branch(static_cast<std::size_t>(k), &shared);
      widths[k] = s.best_width();
      trees[k] = s.best_tree();
    }
  }
  const auto best = std::min_element(widths.begin(), widths.end()) - widths.begin();
  out.width = widths[best];
  out.tree = trees[best];
  return out;
}

std::vector<SubcubicTree> enumerate_subcubic_trees(int leaves) {
  check_capacity(leaves);
  if (leaves < 2) throw std::invalid_argument("subcubic trees need at least two leaves");
  if (leaves == 2) return {SubcubicTree{2, 2, {{0, 1}}}};
  std::vector<SubcubicTree> out;
  GrowingTree tree(leaves);
  tree.start(0, 1, 2);
  auto grow = [&](auto&& self, int next) -> void {
    if (next == leaves) {
      out.push_back(tree.snapshot());
      return;
    }
    for (int i = 0; i < tree.edge_count(); ++i) {
      tree.insert(i, next);
      self(self, next + 1);
      tree.undo(i, next);
    }
  };
  grow(grow, 3);
  return out;
}

}  // namespace lcorbit
