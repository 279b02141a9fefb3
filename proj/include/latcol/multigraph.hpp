#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace latcol {

/// Edge of a MultiGraph; `u == v` is a self-loop.
struct GraphEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Finite multigraph on dense vertex ids [0, vertex_count). Edges are
/// identified by their index, which doubles as the edge label.
struct MultiGraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;

  std::size_t add_vertex() { return vertex_count++; }
  std::size_t add_edge(std::uint32_t u, std::uint32_t v) {
    edges.push_back({u, v});
    return edges.size() - 1;
  }
};

/// Degree of every vertex; a self-loop contributes two.
[[nodiscard]] std::vector<int> degrees(const MultiGraph& g);
[[nodiscard]] int max_degree(const MultiGraph& g);

/// For each vertex, the incident edge ids. A self-loop is listed twice.
[[nodiscard]] std::vector<std::vector<std::size_t>> incidence(const MultiGraph& g);

[[nodiscard]] bool has_self_loop(const MultiGraph& g);
[[nodiscard]] bool has_multi_edge(const MultiGraph& g);
[[nodiscard]] inline bool is_simple(const MultiGraph& g) { return !has_self_loop(g) && !has_multi_edge(g); }

/// Component id per vertex, numbered in order of first appearance.
[[nodiscard]] std::vector<std::size_t> connected_components(const MultiGraph& g);

}  // namespace latcol
