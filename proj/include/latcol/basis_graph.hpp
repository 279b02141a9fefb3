#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latcol/cell_vertex.hpp"

namespace latcol {

/// Raised when a basis graph (or something converted into one) breaks the
/// basis-graph invariants and cannot be repaired.
class InvalidBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite generator of a lattice graph. Holds whatever it was given; call
/// validate_basis() or BasisGraph::checked() to enforce the invariants.
class BasisGraph {
 public:
  BasisGraph() = default;
  BasisGraph(int n_seeds, std::vector<CellVertex> vertices, std::vector<Edge> edges);

  /// Like the constructor, but throws InvalidBasis listing every violation.
  static BasisGraph checked(int n_seeds, std::vector<CellVertex> vertices, std::vector<Edge> edges);

  /// Builds from edges only; the vertex set is the endpoints plus every used seed.
  static BasisGraph from_edges(int n_seeds, std::vector<Edge> edges);

  [[nodiscard]] int n_seeds() const { return n_seeds_; }
  [[nodiscard]] const std::vector<CellVertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const BasisGraph&, const BasisGraph&) = default;

 private:
  int n_seeds_ = 0;
  std::vector<CellVertex> vertices_;  // sorted, unique
  std::vector<Edge> edges_;           // in the order given
};

/// Canonical representative of an edge's translation class: the edge moved so
/// that one endpoint sits in cell (0,0), choosing the smaller of the two
/// candidate placements. `anchor` is the endpoint in cell (0,0).
struct TranslationKey {
  CellVertex anchor;
  CellVertex other;

  friend bool operator==(const TranslationKey&, const TranslationKey&) = default;
  friend std::strong_ordering operator<=>(const TranslationKey& x, const TranslationKey& y) {
    if (auto c = x.anchor <=> y.anchor; c != 0) return c;
    return x.other <=> y.other;
  }
};

[[nodiscard]] TranslationKey edge_translation_class(const Edge& e);

/// The canonical edge of a translation class (anchor first, as an Edge).
[[nodiscard]] Edge canonical_edge(const Edge& e);

/// Moves every edge lacking an endpoint in cell (0,0) to its canonical
/// placement. Edges that already touch cell (0,0) are kept verbatim.
/// Throws InvalidBasis on self-loop edges.
[[nodiscard]] BasisGraph normalize_basis(const BasisGraph& raw);

struct RedundantPair {
  Edge first;
  Edge second;
  friend bool operator==(const RedundantPair&, const RedundantPair&) = default;
};

/// All pairs of distinct edge entries that lie in the same translation class.
[[nodiscard]] std::vector<RedundantPair> detect_redundant(const BasisGraph& b);

enum class ViolationKind {
  kNoSeeds,
  kSeedOutOfRange,
  kSelfLoop,
  kNonseedEdge,
  kRedundantEdge,
  kMissingVertex,
  kMissingSeed,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<Edge> edge;
  std::optional<CellVertex> vertex;
};

[[nodiscard]] const char* to_string(ViolationKind kind);

/// Empty result means `b` satisfies every basis-graph invariant.
[[nodiscard]] std::vector<Violation> validate_basis(const BasisGraph& b);

struct SpanBounds {
  int dx_max = 0;
  int dy_max = 0;
  friend bool operator==(const SpanBounds&, const SpanBounds&) = default;
};

/// Largest |dx| and |dy| over all edge endpoints; zero for an edgeless basis.
[[nodiscard]] SpanBounds span_bounds(const BasisGraph& b);

/// Translates every edge (and vertex) by (x, y).
[[nodiscard]] BasisGraph translate_basis(const BasisGraph& b, int x, int y);

/// All lattice edges generated by `b` whose both endpoints have cells in
/// [x0, x0+w) x [y0, y0+h). Sorted and unique.
[[nodiscard]] std::vector<Edge> lattice_edges_in_window(const BasisGraph& b, int x0, int y0, int w,
                                                        int h);

}  // namespace latcol
