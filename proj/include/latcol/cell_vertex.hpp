#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace latcol {

/// A lattice vertex: the cell (dx, dy) it lives in and its seed id s.
///
/// Vertices are ordered by (s, dx, dy). Every canonical form in the library
/// (translation-class keys, sorted vertex tables) uses this order.
struct CellVertex {
  int dx = 0;
  int dy = 0;
  int s = 0;

  [[nodiscard]] constexpr bool is_seed() const { return dx == 0 && dy == 0; }

  [[nodiscard]] constexpr CellVertex translated(int x, int y) const {
    return {dx + x, dy + y, s};
  }

  friend constexpr bool operator==(const CellVertex&, const CellVertex&) = default;
  friend constexpr std::strong_ordering operator<=>(const CellVertex& a, const CellVertex& b) {
    if (auto c = a.s <=> b.s; c != 0) return c;
    if (auto c = a.dx <=> b.dx; c != 0) return c;
    return a.dy <=> b.dy;
  }
};

/// Undirected edge between two cell vertices; endpoints stored in ascending order.
struct Edge {
  CellVertex a;
  CellVertex b;

  Edge() = default;
  Edge(CellVertex u, CellVertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  [[nodiscard]] bool is_loop() const { return a == b; }
  [[nodiscard]] Edge translated(int x, int y) const { return {a.translated(x, y), b.translated(x, y)}; }
  [[nodiscard]] bool touches(const CellVertex& v) const { return a == v || b == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge& x, const Edge& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

/// Floored modulo: result always in [0, n) for n > 0.
[[nodiscard]] constexpr int floor_mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

/// Floored division matching floor_mod: x == n * floor_div(x, n) + floor_mod(x, n).
[[nodiscard]] constexpr int floor_div(int x, int n) {
  return (x - floor_mod(x, n)) / n;
}

std::ostream& operator<<(std::ostream& os, const CellVertex& v);
std::ostream& operator<<(std::ostream& os, const Edge& e);
[[nodiscard]] std::string to_string(const CellVertex& v);
[[nodiscard]] std::string to_string(const Edge& e);

struct CellVertexHash {
  std::size_t operator()(const CellVertex& v) const noexcept {
    std::size_t h = std::hash<int>{}(v.dx);
    h = h * 1000003u ^ std::hash<int>{}(v.dy);
    h = h * 1000003u ^ std::hash<int>{}(v.s);
    return h;
  }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    CellVertexHash h;
    return h(e.a) * 31u ^ h(e.b);
  }
};

}  // namespace latcol
