#include "latcol/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace latcol {

std::vector<int> degrees(const MultiGraph& g) {
  std::vector<int> deg(g.vertex_count, 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int max_degree(const MultiGraph& g) {
  const auto deg = degrees(g);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<std::size_t>> incidence(const MultiGraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    inc[g.edges[i].u].push_back(i);
    inc[g.edges[i].v].push_back(i);
  }
  return inc;
}

bool has_self_loop(const MultiGraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(), [](const GraphEdge& e) { return e.u == e.v; });
}

bool has_multi_edge(const MultiGraph& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& e : g.edges) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

std::vector<std::size_t> connected_components(const MultiGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    const auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(g.vertex_count, g.vertex_count);
  std::vector<std::size_t> out(g.vertex_count);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const auto r = find(v);
    if (label[r] == g.vertex_count) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

}  // namespace latcol
