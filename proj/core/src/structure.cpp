#include "specgraph/structure.hpp"

#include <algorithm>
#include <queue>

namespace specgraph {

bool is_connected(const Graph& g) {
  const std::size_t m = g.order();
  std::vector<bool> seen(m, false);
  std::queue<std::size_t> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t u = 0; u < m; ++u) {
      if (!seen[u] && u != v && g.pair_bit(Graph::pair_index(u, v))) {
        seen[u] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == m;
}

std::optional<Partition> detect_complete_multipartite(const Graph& g) {
  const std::size_t m = g.order();
  // Non-adjacency must be an equivalence relation: every vertex's closed
  // non-neighbourhood is its class, and classes must agree.
  std::vector<int> cls(m, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < m; ++v) {
    if (cls[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::size_t size = 0;
    for (std::size_t u = 0; u < m; ++u) {
      if (u == v || !g.pair_bit(Graph::pair_index(u, v))) {
        if (cls[u] >= 0) return std::nullopt;
        cls[u] = id;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  for (std::size_t v = 1; v < m; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      const bool adjacent = g.pair_bit(Graph::pair_index(u, v));
      if (adjacent == (cls[u] == cls[v])) return std::nullopt;
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  return Partition(std::move(sizes));
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bipartition(
    const Graph& g) {
  const std::size_t m = g.order();
  std::vector<int> colour(m, -1);
  for (std::size_t start = 0; start < m; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t u = 0; u < m; ++u) {
        if (u == v || !g.pair_bit(Graph::pair_index(u, v))) continue;
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          frontier.push(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> parts;
  for (std::size_t v = 0; v < m; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_complete(const Graph& g) { return g.edge_count() == Graph::pair_count(g.order()); }

bool is_path_graph(const Graph& g) {
  const std::size_t m = g.order();
  if (g.edge_count() != m - 1 || !is_connected(g)) return false;
  const auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d <= 2; });
}

bool is_star_graph(const Graph& g) {
  const std::size_t m = g.order();
  if (m < 2 || g.edge_count() != m - 1) return false;
  const auto deg = g.degrees();
  return std::any_of(deg.begin(), deg.end(), [m](std::size_t d) { return d == m - 1; });
}

}  // namespace specgraph
