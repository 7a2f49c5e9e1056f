#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Breadth-first search from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

/// Part sizes if the complement is a disjoint union of cliques with at least two
/// cliques (i.e. g is complete multipartite), otherwise nullopt.
std::optional<Partition> detect_complete_multipartite(const Graph& g);

/// Two-colouring by BFS; the part containing vertex 0 comes first, each sorted.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bipartition(
    const Graph& g);

bool is_bipartite(const Graph& g);
bool is_complete(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_star_graph(const Graph& g);

}  // namespace specgraph
