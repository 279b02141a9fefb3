#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latcol/basis_graph.hpp"
#include "latcol/coloring.hpp"
#include "latcol/multigraph.hpp"

namespace latcol {

/// n x m translated copies of a basis graph.
struct Patch {
  BasisGraph basis;
  int n = 1;
  int m = 1;
  std::vector<CellVertex> vertices;  // sorted, unique
  std::vector<Edge> edges;           // row-major over offsets, then basis edge order
};

/// Throws std::invalid_argument if n < 1 or m < 1.
[[nodiscard]] Patch build_patch(const BasisGraph& b, int n, int m);

/// Periodic boundary map: cell coordinates reduced by floored modulo.
[[nodiscard]] constexpr CellVertex pbc(const CellVertex& v, int n, int m) {
  return {floor_mod(v.dx, n), floor_mod(v.dy, m), v.s};
}

/// Patch with periodic boundaries imposed. Graph edge i carries labels[i],
/// the patch edge it came from.
struct WrappedPatch {
  int n = 1;
  int m = 1;
  std::vector<CellVertex> vertices;  // sorted; graph vertex id == index
  MultiGraph graph;
  std::vector<Edge> labels;

  [[nodiscard]] std::size_t vertex_id(const CellVertex& v) const;
};

[[nodiscard]] WrappedPatch wrap(const Patch& p);

/// Labels of the wrapped edges that became self-loops.
[[nodiscard]] std::vector<Edge> self_loops(const WrappedPatch& w);
[[nodiscard]] inline bool has_self_loops(const WrappedPatch& w) { return !self_loops(w).empty(); }
[[nodiscard]] bool is_simple(const WrappedPatch& w);

struct ColoredEdge {
  Edge edge;
  int color = 0;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge& x, const ColoredEdge& y) {
    if (auto c = x.edge <=> y.edge; c != 0) return c;
    return x.color <=> y.color;
  }
};

/// Edge-colored patch of dimensions n x m: a candidate coloring basis graph.
struct ColoredPatch {
  int n = 1;
  int m = 1;
  int n_seeds = 0;
  int k = 0;  // palette size
  std::vector<ColoredEdge> edges;

  friend bool operator==(const ColoredPatch&, const ColoredPatch&) = default;
};

/// Carries colors back to the pre-wrap edges. Throws std::invalid_argument on
/// an uncolored edge or a size mismatch.
[[nodiscard]] ColoredPatch unwrap(const WrappedPatch& w, const EdgeColoring& c, int n_seeds);

/// Seed id assigned by reseeding to the patch vertex (x, y, s), 0 <= x < n, 0 <= y < m.
[[nodiscard]] constexpr int reseeded_seed(int x, int y, int s, int n, int n_seeds) {
  return (y * n + x) * n_seeds + s;
}

/// Image of an arbitrary lattice vertex under reseeding of an n x m patch.
[[nodiscard]] constexpr CellVertex reseed_vertex(const CellVertex& v, int n, int m, int n_seeds) {
  return {floor_div(v.dx, n), floor_div(v.dy, m),
          reseeded_seed(floor_mod(v.dx, n), floor_mod(v.dy, m), v.s, n, n_seeds)};
}

struct Reseeded {
  BasisGraph basis;                                    // n*m*n_seeds seeds
  std::vector<std::pair<CellVertex, CellVertex>> map;  // patch vertex -> new vertex
};

/// Re-expresses a patch as a basis graph of a lattice isomorphic to the
/// original one.
[[nodiscard]] Reseeded reseed(const Patch& p);

/// Reseeds a colored patch; result has n = m = 1.
[[nodiscard]] ColoredPatch reseed(const ColoredPatch& c);

struct PatchSize {
  int n = 1;
  int m = 1;
  friend bool operator==(const PatchSize&, const PatchSize&) = default;
};

/// i-th patch size: every (n, m) exactly once, ordered by (n*m, max(n,m), n).
[[nodiscard]] PatchSize patch_size_sequence(std::size_t i);

/// Position of (n, m) in patch_size_sequence.
[[nodiscard]] std::size_t patch_size_index(PatchSize size);

}  // namespace latcol
