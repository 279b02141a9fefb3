#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latcol/basis_graph.hpp"
#include "latcol/patch.hpp"

namespace latcol {

/// N x M tiling of a colored patch: copies translated by (n x, m y) for
/// 0 <= x < N, 0 <= y < M.
struct SuperPatch {
  ColoredPatch source;
  int N = 1;
  int M = 1;
  std::size_t raw_edge_count = 0;  // N * M * |E(source)| before merging
  std::vector<ColoredEdge> edges;  // sorted; identical (edge, color) pairs merged
};

/// Throws std::invalid_argument if N or M < 1.
[[nodiscard]] SuperPatch expand(const ColoredPatch& c, int N, int M);

enum class ConflictKind { kSameColor, kDoubleColored };

[[nodiscard]] const char* to_string(ConflictKind k);

/// Two distinct colored lattice edges meeting at `vertex` with the same color,
/// or one lattice edge carrying two colors.
struct InducedConflict {
  ConflictKind kind = ConflictKind::kSameColor;
  CellVertex vertex;
  ColoredEdge first;
  ColoredEdge second;

  friend bool operator==(const InducedConflict&, const InducedConflict&) = default;
  friend auto operator<=>(const InducedConflict& x, const InducedConflict& y) {
    if (auto c = x.vertex <=> y.vertex; c != 0) return c;
    if (auto c = x.first <=> y.first; c != 0) return c;
    if (auto c = x.second <=> y.second; c != 0) return c;
    return x.kind <=> y.kind;
  }
};

struct InducedReport {
  std::vector<InducedConflict> conflicts;  // representatives in cells [0,n) x [0,m), sorted
  [[nodiscard]] bool ok() const { return conflicts.empty(); }
};

/// Problems with a colored patch as a finite object: colors outside [0, k),
/// self-loop edges, or two of its own edges clashing. Empty means usable.
[[nodiscard]] std::vector<std::string> finite_patch_problems(const ColoredPatch& c);

/// Decides whether the coloring of the whole lattice induced by translating
/// `c` by multiples of (n, m) is proper. Conflicts are reported in the
/// original coordinates, one representative per translation class of vertex.
/// Throws std::invalid_argument if finite_patch_problems(c) is non-empty.
[[nodiscard]] InducedReport check_induced(const ColoredPatch& c, int jobs = 1);

/// Edges of P_{n,m}(b) missing from `c`, then edges of `c` not in P_{n,m}(b).
struct CoverageReport {
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  [[nodiscard]] bool ok() const { return missing.empty() && extra.empty(); }
};

[[nodiscard]] CoverageReport check_covers_patch(const ColoredPatch& c, const BasisGraph& b);

struct SeedViolation {
  int color = 0;
  int seed = 0;
  std::vector<Edge> edges;  // reseeded edges of that color using the seed
};

/// After reseeding, every seed number occurs at most once within each color class.
[[nodiscard]] std::vector<SeedViolation> seed_uniqueness_check(const ColoredPatch& c);

struct MatchingViolation {
  int color = 0;
  CellVertex vertex;
  std::vector<Edge> edges;
};

/// Whether every translate of the source that can place an edge at `v` lies
/// inside the super patch.
[[nodiscard]] bool is_interior(const SuperPatch& s, const CellVertex& v);

/// Each color class, restricted to interior vertices, is a matching.
[[nodiscard]] std::vector<MatchingViolation> matching_check(const SuperPatch& s);

/// Largest degree over interior vertices of the super patch.
[[nodiscard]] int interior_max_degree(const SuperPatch& s);

}  // namespace latcol
