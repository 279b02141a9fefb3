#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "latcol/basis_graph.hpp"
#include "latcol/coloring.hpp"
#include "latcol/multigraph.hpp"
#include "latcol/patch.hpp"

namespace latcol::testing {

inline CellVertex V(int dx, int dy, int s) { return {dx, dy, s}; }

inline BasisGraph honeycomb_basis() {
  const CellVertex a{0, 0, 0}, b{0, 0, 1}, c{1, 0, 0}, d{0, 1, 0};
  return BasisGraph(2, {a, b, c, d}, {Edge(a, b), Edge(b, c), Edge(b, d)});
}

inline BasisGraph square_basis() {
  const CellVertex a{0, 0, 0}, b{1, 0, 0}, c{0, 1, 0};
  return BasisGraph(1, {a, b, c}, {Edge(a, b), Edge(a, c)});
}

inline std::set<Edge> edge_set(const std::vector<Edge>& es) { return {es.begin(), es.end()}; }

/// Random valid basis: 1..max_seeds seeds, 1..max_edges edges, each from a
/// seed to a vertex with offsets in [-max_offset, max_offset]^2.
inline BasisGraph random_basis(std::mt19937& rng, int max_seeds = 3, int max_edges = 6, int max_offset = 2) {
  std::uniform_int_distribution<int> seeds_d(1, max_seeds);
  const int ns = seeds_d(rng);
  std::uniform_int_distribution<int> seed_d(0, ns - 1);
  std::uniform_int_distribution<int> off_d(-max_offset, max_offset);
  std::uniform_int_distribution<int> count_d(1, max_edges);
  const int want = count_d(rng);
  std::set<TranslationKey> used;
  std::vector<Edge> edges;
  for (int tries = 0; static_cast<int>(edges.size()) < want && tries < 100; ++tries) {
    const Edge e(CellVertex{0, 0, seed_d(rng)}, CellVertex{off_d(rng), off_d(rng), seed_d(rng)});
    if (e.is_loop() || !used.insert(edge_translation_class(e)).second) continue;
    edges.push_back(e);
  }
  std::vector<CellVertex> vertices;
  for (int s = 0; s < ns; ++s) vertices.push_back({0, 0, s});
  for (const auto& e : edges) {
    vertices.push_back(e.a);
    vertices.push_back(e.b);
  }
  return BasisGraph(ns, std::move(vertices), std::move(edges));
}

/// Random simple graph with up to max_vertices vertices and max_edges edges.
inline MultiGraph random_simple_graph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv_d(2, max_vertices);
  MultiGraph g;
  g.vertex_count = static_cast<std::size_t>(nv_d(rng));
  std::uniform_int_distribution<std::uint32_t> v_d(0, static_cast<std::uint32_t>(g.vertex_count - 1));
  std::uniform_int_distribution<int> ne_d(0, max_edges);
  const int want = ne_d(rng);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (int tries = 0; static_cast<int>(g.edges.size()) < want && tries < 200; ++tries) {
    std::uint32_t u = v_d(rng), v = v_d(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) g.add_edge(u, v);
  }
  return g;
}

/// Lattice edges generated by `b` with both endpoint cells in [0,w) x [0,h),
/// by direct enumeration of translates.
inline std::set<Edge> window_edges(const BasisGraph& b, int w, int h) {
  std::set<Edge> out;
  const int reach = 8;
  for (const auto& e : b.edges())
    for (int x = -w - reach; x <= w + reach; ++x)
      for (int y = -h - reach; y <= h + reach; ++y) {
        const Edge t = e.translated(x, y);
        const auto inside = [&](const CellVertex& v) { return v.dx >= 0 && v.dx < w && v.dy >= 0 && v.dy < h; };
        if (inside(t.a) && inside(t.b)) out.insert(t);
      }
  return out;
}

/// Whether some proper coloring with colors [0, k) exists, by plain
/// enumeration of all k^|E| assignments.
inline bool colorable_by_enumeration(const MultiGraph& g, int k) {
  const std::size_t ne = g.edges.size();
  if (k <= 0) return ne == 0;
  std::vector<int> color(ne, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < ne && ok; ++i)
      for (std::size_t j = i + 1; j < ne && ok; ++j) {
        const auto& a = g.edges[i];
        const auto& b = g.edges[j];
        const bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        if (touch && color[i] == color[j]) ok = false;
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < ne && ++color[i] == k) color[i++] = 0;
    if (i == ne) return false;
  }
}

/// Properness check written independently of verify_proper.
inline bool is_proper(const MultiGraph& g, const std::vector<int>& color) {
  std::set<std::pair<std::uint32_t, int>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (color[i] < 0) return false;
    if (g.edges[i].u == g.edges[i].v) return false;
    if (!seen.insert({g.edges[i].u, color[i]}).second) return false;
    if (!seen.insert({g.edges[i].v, color[i]}).second) return false;
  }
  return true;
}

/// Conflicting pairs of the lattice coloring induced by `c`: for each vertex u
/// in cells [0,n) x [0,m), every colored edge of `c` with an endpoint p
/// congruent to u modulo (n, m) is translated onto u, and same-colored
/// distinct edges (or one edge with two colors) are reported.
using OracleConflict = std::tuple<CellVertex, Edge, Edge>;

inline std::set<OracleConflict> induced_conflicts_oracle(const ColoredPatch& c) {
  std::set<OracleConflict> out;
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.m; ++y)
      for (int s = 0; s < c.n_seeds; ++s) {
        const CellVertex u{x, y, s};
        std::set<std::pair<Edge, int>> at;
        for (const auto& ce : c.edges)
          for (const auto& p : {ce.edge.a, ce.edge.b}) {
            if (p.s != s) continue;
            const int ddx = x - p.dx, ddy = y - p.dy;
            if (ddx % c.n != 0 || ddy % c.m != 0) continue;
            at.insert({ce.edge.translated(ddx, ddy), ce.color});
          }
        const std::vector<std::pair<Edge, int>> list(at.begin(), at.end());
        for (std::size_t i = 0; i < list.size(); ++i)
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            const bool same_edge = list[i].first == list[j].first;
            if (same_edge != (list[i].second == list[j].second))
              out.insert({u, std::min(list[i].first, list[j].first), std::max(list[i].first, list[j].first)});
          }
      }
  return out;
}

}  // namespace latcol::testing
