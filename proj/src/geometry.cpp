#include "latcol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace latcol {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

Vec2 fractional(const GeometricLattice& l, Vec2 p) {
  const double det = cross(l.v1, l.v2);
  return {cross(p, l.v2) / det, cross(l.v1, p) / det};
}

Vec2 position(const GeometricLattice& l, const CellVertex& v) {
  if (v.s < 0 || v.s >= static_cast<int>(l.seeds.size()))
    throw GeometryError("no coordinates for seed " + std::to_string(v.s));
  return l.seeds[static_cast<std::size_t>(v.s)] + static_cast<double>(v.dx) * l.v1 + static_cast<double>(v.dy) * l.v2;
}

Vec2 position(const GeometricLattice& l, const GeoEnd& e) { return position(l, CellVertex{e.a, e.b, e.seed}); }

namespace {

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

bool same_mod_lattice(Vec2 fa, Vec2 fb, double tol) {
  const auto near_int = [&](double d) { return std::abs(d - std::round(d)) <= tol; };
  return near_int(fa.x - fb.x) && near_int(fa.y - fb.y);
}

// Point moved into the cell, plus the cell it came from.
struct Wrapped {
  Vec2 point;
  int a = 0;
  int b = 0;
};

Wrapped wrap_point(const GeometricLattice& l, Vec2 p, double tol = 1e-7) {
  const Vec2 f = fractional(l, p);
  const int a = static_cast<int>(std::floor(f.x + tol));
  const int b = static_cast<int>(std::floor(f.y + tol));
  return {p - static_cast<double>(a) * l.v1 - static_cast<double>(b) * l.v2, a, b};
}

Edge to_edge(const GeoEdge& e) { return Edge(CellVertex{e.p.a, e.p.b, e.p.seed}, CellVertex{e.q.a, e.q.b, e.q.seed}); }

std::vector<GeoEdge> dedupe(const std::vector<GeoEdge>& edges) {
  std::set<TranslationKey> seen;
  std::vector<GeoEdge> out;
  for (const auto& e : edges)
    if (seen.insert(edge_translation_class(to_edge(e))).second) out.push_back(e);
  return out;
}

struct HalfEdge {
  int from = 0;
  int to = 0;
  int a = 0;  // offset of the head relative to the tail's cell
  int b = 0;
  std::size_t edge = 0;
  bool forward = true;
  double angle = 0.0;
};

// Half-edges at every seed, sorted counterclockwise.
struct Rotation {
  std::vector<std::vector<HalfEdge>> at;
  std::vector<std::size_t> offset;  // global id of at[s][0]

  [[nodiscard]] std::size_t id(int s, std::size_t j) const { return offset[static_cast<std::size_t>(s)] + j; }
  [[nodiscard]] const HalfEdge& get(std::size_t id) const {
    const auto s = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin() - 1);
    return at[s][id - offset[s]];
  }
  [[nodiscard]] std::size_t size() const { return offset.empty() ? 0 : offset.back() + at.back().size(); }
};

Rotation rotation_system(const GeometricLattice& l) {
  Rotation r;
  r.at.assign(l.seeds.size(), {});
  for (std::size_t k = 0; k < l.edges.size(); ++k) {
    const auto& e = l.edges[k];
    r.at[static_cast<std::size_t>(e.p.seed)].push_back({e.p.seed, e.q.seed, e.q.a - e.p.a, e.q.b - e.p.b, k, true, 0});
    r.at[static_cast<std::size_t>(e.q.seed)].push_back({e.q.seed, e.p.seed, e.p.a - e.q.a, e.p.b - e.q.b, k, false, 0});
  }
  for (std::size_t s = 0; s < r.at.size(); ++s) {
    for (auto& h : r.at[s]) {
      const Vec2 d = position(l, CellVertex{h.a, h.b, h.to}) - l.seeds[s];
      h.angle = std::atan2(d.y, d.x);
    }
    std::sort(r.at[s].begin(), r.at[s].end(), [](const HalfEdge& x, const HalfEdge& y) { return x.angle < y.angle; });
    for (std::size_t j = 1; j < r.at[s].size(); ++j)
      if (std::abs(r.at[s][j].angle - r.at[s][j - 1].angle) < 1e-9)
        throw GeometryError("overlapping edges at seed " + std::to_string(s));
  }
  std::size_t total = 0;
  for (const auto& list : r.at) {
    r.offset.push_back(total);
    total += list.size();
  }
  return r;
}

std::size_t reverse_of(const Rotation& r, const HalfEdge& h) {
  const auto& list = r.at[static_cast<std::size_t>(h.to)];
  for (std::size_t j = 0; j < list.size(); ++j)
    if (list[j].edge == h.edge && list[j].forward != h.forward) return r.id(h.to, j);
  throw GeometryError("half-edge without reverse");
}

// The half-edge following h around the face on its left.
std::size_t next_in_face(const Rotation& r, const HalfEdge& h) {
  const std::size_t rev = reverse_of(r, h);
  const auto& list = r.at[static_cast<std::size_t>(h.to)];
  const std::size_t j = rev - r.id(h.to, 0);
  return r.id(h.to, (j + list.size() - 1) % list.size());
}

struct Face {
  std::vector<std::size_t> half_edges;
  std::vector<std::pair<int, int>> cells;  // tail cell of each half-edge relative to the first
  Vec2 centroid;
};

struct FaceSet {
  Rotation rot;
  std::vector<Face> faces;
  std::vector<std::size_t> face_of;          // per half-edge
  std::vector<std::pair<int, int>> cell_of;  // per half-edge, within its face
};

FaceSet trace_faces(const GeometricLattice& l) {
  FaceSet fs;
  fs.rot = rotation_system(l);
  const std::size_t nh = fs.rot.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  fs.face_of.assign(nh, kUnset);
  fs.cell_of.assign(nh, {0, 0});
  for (std::size_t h0 = 0; h0 < nh; ++h0) {
    if (fs.face_of[h0] != kUnset) continue;
    Face f;
    int ca = 0, cb = 0;
    std::size_t cur = h0;
    do {
      if (fs.face_of[cur] != kUnset || f.half_edges.size() > nh)
        throw GeometryError("face tracing did not close; the embedding is not a planar tiling");
      fs.face_of[cur] = fs.faces.size();
      fs.cell_of[cur] = {ca, cb};
      f.half_edges.push_back(cur);
      f.cells.push_back({ca, cb});
      const HalfEdge& h = fs.rot.get(cur);
      ca += h.a;
      cb += h.b;
      cur = next_in_face(fs.rot, h);
    } while (cur != h0);
    if (ca != 0 || cb != 0) throw GeometryError("unbounded face; the embedding is not a planar tiling");

    double area = 0.0;
    Vec2 sum;
    const std::size_t len = f.half_edges.size();
    for (std::size_t i = 0; i < len; ++i) {
      const auto& h = fs.rot.get(f.half_edges[i]);
      const Vec2 p = position(l, CellVertex{f.cells[i].first, f.cells[i].second, h.from});
      const auto& g = fs.rot.get(f.half_edges[(i + 1) % len]);
      const Vec2 q = position(l, CellVertex{f.cells[(i + 1) % len].first, f.cells[(i + 1) % len].second, g.from});
      area += cross(p, q);
      sum = sum + p;
    }
    if (area <= 0.0) throw GeometryError("face with non-positive area; edges cross or the embedding is not planar");
    f.centroid = (1.0 / static_cast<double>(len)) * sum;
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

std::vector<int> min_cyclic_form(const std::vector<int>& seq) {
  std::vector<int> best = seq;
  const std::vector<int> rev(seq.rbegin(), seq.rend());
  for (const std::vector<int>* base : {&seq, &rev})
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::vector<int> cand(base->begin() + static_cast<long>(i), base->end());
      cand.insert(cand.end(), base->begin(), base->begin() + static_cast<long>(i));
      best = std::min(best, cand);
    }
  return best;
}

}  // namespace

std::vector<std::string> validate_geometry(const GeometricLattice& l, double tol) {
  std::vector<std::string> out;
  if (!finite(l.v1) || !finite(l.v2)) {
    out.push_back("cell vectors must be finite");
    return out;
  }
  if (std::abs(cross(l.v1, l.v2)) <= 1e-12 * norm(l.v1) * norm(l.v2) || norm(l.v1) == 0.0 || norm(l.v2) == 0.0) {
    out.push_back("cell vectors are linearly dependent");
    return out;
  }
  if (l.seeds.empty()) out.push_back("no seeds");
  std::vector<Vec2> fracs;
  for (std::size_t i = 0; i < l.seeds.size(); ++i) {
    if (!finite(l.seeds[i])) {
      out.push_back("seed " + std::to_string(i) + " is not finite");
      continue;
    }
    const Vec2 f = fractional(l, l.seeds[i]);
    if (f.x < -tol || f.y < -tol || f.x >= 1.0 - tol || f.y >= 1.0 - tol)
      out.push_back("seed " + std::to_string(i) + " lies outside the unit cell");
    for (std::size_t j = 0; j < fracs.size(); ++j)
      if (same_mod_lattice(fracs[j], f, 1e-7))
        out.push_back("seeds " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    fracs.push_back(f);
  }
  const int ns = static_cast<int>(l.seeds.size());
  for (const auto& e : l.edges)
    if (e.p.seed < 0 || e.p.seed >= ns || e.q.seed < 0 || e.q.seed >= ns)
      out.push_back("edge references a seed outside [0, " + std::to_string(ns) + ")");
  return out;
}

GeometricLattice lattice_from_points(Vec2 v1, Vec2 v2, const std::vector<Vec2>& points, double tol) {
  GeometricLattice l{v1, v2, {}, {}};
  std::vector<Vec2> fracs;
  for (const auto& p : points) {
    const Vec2 w = wrap_point(l, p, tol).point;
    Vec2 f = fractional(l, w);
    if (std::any_of(fracs.begin(), fracs.end(), [&](Vec2 g) { return same_mod_lattice(f, g, tol); })) continue;
    // Snap values within tolerance of the cell edge onto it.
    if (std::abs(f.x) <= tol) f.x = 0.0;
    if (std::abs(f.y) <= tol) f.y = 0.0;
    fracs.push_back(f);
    l.seeds.push_back(f.x * v1 + f.y * v2);
  }
  return l;
}

InferredEdges infer_edges(const GeometricLattice& l, const std::vector<double>& bond_lengths, double eps, int window) {
  InferredEdges out;
  std::vector<GeoEdge> found;
  const int ns = static_cast<int>(l.seeds.size());
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b) {
          if (i == j && a == 0 && b == 0) continue;
          const double d = norm(position(l, CellVertex{a, b, j}) - l.seeds[static_cast<std::size_t>(i)]);
          const bool bonded = std::any_of(bond_lengths.begin(), bond_lengths.end(),
                                          [&](double r) { return std::abs(d - r) <= eps * r; });
          if (!bonded) continue;
          if (std::abs(a) == window || std::abs(b) == window)
            throw GeometryError("bond from seed " + std::to_string(i) + " reaches the edge of the search window");
          // Each bond is found from both ends; keep the copy pointing to a later cell.
          const bool forward = a > 0 || (a == 0 && b > 0) || (a == 0 && b == 0 && i < j);
          if (forward) found.push_back({{i, 0, 0}, {j, a, b}});
        }
  out.edges = dedupe(found);
  std::vector<bool> used(l.seeds.size(), false);
  for (const auto& e : out.edges) used[static_cast<std::size_t>(e.p.seed)] = used[static_cast<std::size_t>(e.q.seed)] = true;
  for (int i = 0; i < ns; ++i)
    if (!used[static_cast<std::size_t>(i)]) out.isolated_seeds.push_back(i);
  return out;
}

BasisGraph to_basis_graph(const GeometricLattice& l) {
  const int ns = static_cast<int>(l.seeds.size());
  std::vector<CellVertex> vertices;
  std::vector<Edge> edges;
  for (int s = 0; s < ns; ++s) vertices.push_back({0, 0, s});
  for (const auto& e : l.edges) {
    const Edge ed = to_edge(e);
    if (ed.is_loop()) throw InvalidBasis("self-loop edge " + to_string(ed));
    edges.push_back(ed);
    vertices.push_back(ed.a);
    vertices.push_back(ed.b);
  }
  const BasisGraph b = normalize_basis(BasisGraph(ns, std::move(vertices), std::move(edges)));
  const auto redundant = detect_redundant(b);
  if (!redundant.empty())
    throw InvalidBasis("redundant edges " + to_string(redundant.front().first) + " and " +
                       to_string(redundant.front().second));
  const auto violations = validate_basis(b);
  if (!violations.empty()) throw InvalidBasis(violations.front().message);
  return b;
}

std::vector<std::vector<int>> vertex_configurations(const GeometricLattice& l) {
  const FaceSet fs = trace_faces(l);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < l.seeds.size(); ++s) {
    std::vector<int> sizes;
    for (std::size_t j = 0; j < fs.rot.at[s].size(); ++j)
      sizes.push_back(static_cast<int>(fs.faces[fs.face_of[fs.rot.id(static_cast<int>(s), j)]].half_edges.size()));
    out.push_back(min_cyclic_form(sizes));
  }
  return out;
}

GeometricLattice dual(const GeometricLattice& l) {
  const FaceSet fs = trace_faces(l);
  GeometricLattice d{l.v1, l.v2, {}, {}};
  std::vector<std::pair<int, int>> sigma;
  for (const auto& f : fs.faces) {
    const Wrapped w = wrap_point(l, f.centroid);
    d.seeds.push_back(w.point);
    sigma.push_back({w.a, w.b});
  }
  for (std::size_t id = 0; id < fs.rot.size(); ++id) {
    const HalfEdge& h = fs.rot.get(id);
    if (!h.forward) continue;
    const std::size_t rev = reverse_of(fs.rot, h);
    const std::size_t f1 = fs.face_of[id];
    const std::size_t f2 = fs.face_of[rev];
    const auto [t1a, t1b] = fs.cell_of[id];
    const auto [t2a, t2b] = fs.cell_of[rev];
    d.edges.push_back({{static_cast<int>(f1), sigma[f1].first - t1a, sigma[f1].second - t1b},
                       {static_cast<int>(f2), sigma[f2].first + h.a - t2a, sigma[f2].second + h.b - t2b}});
  }
  d.edges = dedupe(d.edges);
  return d;
}

namespace {

struct Midpoints {
  std::vector<Vec2> points;
  std::vector<std::pair<int, int>> sigma;
};

// Midpoint of each edge, with its tail at cell (0,0), moved into the cell.
Midpoints midpoints(const GeometricLattice& l) {
  Midpoints m;
  for (const auto& e : l.edges) {
    const Vec2 tail = l.seeds[static_cast<std::size_t>(e.p.seed)];
    const Vec2 head = position(l, CellVertex{e.q.a - e.p.a, e.q.b - e.p.b, e.q.seed});
    const Wrapped w = wrap_point(l, 0.5 * (tail + head));
    m.points.push_back(w.point);
    m.sigma.push_back({w.a, w.b});
  }
  return m;
}

}  // namespace

GeometricLattice line_graph(const GeometricLattice& l) {
  const Rotation rot = rotation_system(l);
  const Midpoints mid = midpoints(l);
  GeometricLattice out{l.v1, l.v2, mid.points, {}};
  for (std::size_t s = 0; s < rot.at.size(); ++s) {
    std::vector<GeoEnd> around;
    for (const auto& h : rot.at[s]) {
      const auto [sa, sb] = mid.sigma[h.edge];
      // A backward half-edge at s is its edge with the tail moved to -offset.
      if (h.forward)
        around.push_back({static_cast<int>(h.edge), sa, sb});
      else
        around.push_back({static_cast<int>(h.edge), sa + h.a, sb + h.b});
    }
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j) out.edges.push_back({around[i], around[j]});
  }
  out.edges = dedupe(out.edges);
  return out;
}

GeometricLattice subdivide(const GeometricLattice& l) {
  const Midpoints mid = midpoints(l);
  GeometricLattice out{l.v1, l.v2, l.seeds, {}};
  const int base = static_cast<int>(l.seeds.size());
  for (std::size_t k = 0; k < l.edges.size(); ++k) {
    const auto& e = l.edges[k];
    out.seeds.push_back(mid.points[k]);
    const GeoEnd m{base + static_cast<int>(k), mid.sigma[k].first + e.p.a, mid.sigma[k].second + e.p.b};
    out.edges.push_back({e.p, m});
    out.edges.push_back({m, e.q});
  }
  return out;
}

}  // namespace latcol
