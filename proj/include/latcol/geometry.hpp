#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latcol/basis_graph.hpp"

namespace latcol {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

[[nodiscard]] double cross(Vec2 a, Vec2 b);
[[nodiscard]] double norm(Vec2 a);

/// One end of a geometric edge: seed index plus the cell it sits in.
struct GeoEnd {
  int seed = 0;
  int a = 0;
  int b = 0;
  friend bool operator==(const GeoEnd&, const GeoEnd&) = default;
};

struct GeoEdge {
  GeoEnd p;
  GeoEnd q;
  friend bool operator==(const GeoEdge&, const GeoEdge&) = default;
};

/// Seeds with coordinates inside the half-open cell spanned by v1, v2, plus edges.
struct GeometricLattice {
  Vec2 v1;
  Vec2 v2;
  std::vector<Vec2> seeds;
  std::vector<GeoEdge> edges;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRelTolerance = 1e-6;

/// Empty when v1, v2 are independent, all numbers finite and every seed lies
/// in the cell (up to `tol` in fractional coordinates).
[[nodiscard]] std::vector<std::string> validate_geometry(const GeometricLattice& l, double tol = 1e-9);

/// Fractional coordinates (alpha, beta) with p = alpha v1 + beta v2.
[[nodiscard]] Vec2 fractional(const GeometricLattice& l, Vec2 p);

[[nodiscard]] Vec2 position(const GeometricLattice& l, const CellVertex& v);
[[nodiscard]] Vec2 position(const GeometricLattice& l, const GeoEnd& e);

/// Builds a lattice from arbitrary points: each point is moved into the cell
/// and points equal modulo the lattice are merged. Edges are left empty.
[[nodiscard]] GeometricLattice lattice_from_points(Vec2 v1, Vec2 v2, const std::vector<Vec2>& points,
                                                   double tol = 1e-7);

struct InferredEdges {
  std::vector<GeoEdge> edges;
  std::vector<int> isolated_seeds;
};

/// Connects lattice points whose distance is within relative `eps` of one of
/// `bond_lengths`, searching cell offsets in [-window, window]^2. One edge per
/// translation class, written from the end whose partner lies in a later cell
/// (larger dx, then larger dy). Throws GeometryError if a match uses an offset
/// on the window boundary.
[[nodiscard]] InferredEdges infer_edges(const GeometricLattice& l, const std::vector<double>& bond_lengths,
                                        double eps = kDefaultRelTolerance, int window = 2);

/// Seed i becomes (0,0,i). Throws InvalidBasis if the edges are redundant,
/// loop or otherwise break the basis invariants.
[[nodiscard]] BasisGraph to_basis_graph(const GeometricLattice& l);

/// Polygon sizes around each seed in cyclic order, as the lexicographically
/// smallest rotation or reflection. Requires a planar periodic embedding.
[[nodiscard]] std::vector<std::vector<int>> vertex_configurations(const GeometricLattice& l);

/// Face dual: one vertex per face (at its centroid), one edge per edge.
[[nodiscard]] GeometricLattice dual(const GeometricLattice& l);

/// One vertex per edge (at its midpoint); edges join edges that share a vertex.
[[nodiscard]] GeometricLattice line_graph(const GeometricLattice& l);

/// Inserts a vertex at the midpoint of every edge.
[[nodiscard]] GeometricLattice subdivide(const GeometricLattice& l);

}  // namespace latcol
