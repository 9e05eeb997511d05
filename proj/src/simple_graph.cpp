#include "lcorbit/simple_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcorbit {

SimpleGraph::SimpleGraph(int order) : adjacency_(order), loops_(order, false) {
  if (order < 0) throw std::invalid_argument("negative graph order");
}

SimpleGraph SimpleGraph::from_graph(const Graph& g) {
  SimpleGraph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::out_of_range("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range");
  }
  if (u == v) {
    loops_[u] = true;
    return;
  }
  auto insert = [](std::vector<int>& row, int x) {
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end() || *it != x) row.insert(it, x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
}

bool SimpleGraph::adjacent(int u, int v) const {
  if (u == v) return loops_[u];
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int SimpleGraph::max_degree() const {
  int d = 0;
  for (const auto& row : adjacency_) d = std::max(d, static_cast<int>(row.size()));
  return d;
}

int SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return static_cast<int>(twice / 2);
}

int SimpleGraph::loop_count() const {
  return static_cast<int>(std::count(loops_.begin(), loops_.end(), true));
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::without_loops() const {
  SimpleGraph g = *this;
  std::fill(g.loops_.begin(), g.loops_.end(), false);
  return g;
}

SimpleGraph SimpleGraph::line_graph() const {
  const auto e = edges();
  SimpleGraph out(static_cast<int>(e.size()));
  std::vector<std::vector<int>> incident(order());
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    incident[e[i].first].push_back(i);
    incident[e[i].second].push_back(i);
  }
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) out.add_edge(inc[a], inc[b]);
    }
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbours(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

}  // namespace lcorbit
