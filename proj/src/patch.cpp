#include "latcol/patch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace latcol {

Patch build_patch(const BasisGraph& b, int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("patch dimensions must be positive, got " + std::to_string(n) + "x" +
                                std::to_string(m));
  Patch p{b, n, m, {}, {}};
  p.edges.reserve(b.edges().size() * static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  p.vertices.reserve(b.vertices().size() * static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < n; ++x) {
      for (const auto& v : b.vertices()) p.vertices.push_back(v.translated(x, y));
      for (const auto& e : b.edges()) p.edges.push_back(e.translated(x, y));
    }
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  return p;
}

std::size_t WrappedPatch::vertex_id(const CellVertex& v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v)
    throw std::out_of_range("vertex " + to_string(v) + " is not in the wrapped patch");
  return static_cast<std::size_t>(it - vertices.begin());
}

WrappedPatch wrap(const Patch& p) {
  WrappedPatch w;
  w.n = p.n;
  w.m = p.m;
  w.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) w.vertices.push_back(pbc(v, p.n, p.m));
  std::sort(w.vertices.begin(), w.vertices.end());
  w.vertices.erase(std::unique(w.vertices.begin(), w.vertices.end()), w.vertices.end());
  w.graph.vertex_count = w.vertices.size();
  w.graph.edges.reserve(p.edges.size());
  w.labels.reserve(p.edges.size());
  for (const auto& e : p.edges) {
    const auto u = static_cast<std::uint32_t>(w.vertex_id(pbc(e.a, p.n, p.m)));
    const auto v = static_cast<std::uint32_t>(w.vertex_id(pbc(e.b, p.n, p.m)));
    w.graph.edges.push_back({u, v});
    w.labels.push_back(e);
  }
  return w;
}

std::vector<Edge> self_loops(const WrappedPatch& w) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < w.graph.edges.size(); ++i) {
    if (w.graph.edges[i].u == w.graph.edges[i].v) out.push_back(w.labels[i]);
  }
  return out;
}

bool is_simple(const WrappedPatch& w) { return is_simple(w.graph); }

ColoredPatch unwrap(const WrappedPatch& w, const EdgeColoring& c, int n_seeds) {
  if (c.color.size() != w.labels.size())
    throw std::invalid_argument("coloring covers " + std::to_string(c.color.size()) + " edges, wrapped patch has " +
                                std::to_string(w.labels.size()));
  ColoredPatch out{w.n, w.m, n_seeds, c.k, {}};
  out.edges.reserve(w.labels.size());
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    if (c.color[i] < 0) throw std::invalid_argument("wrapped edge " + to_string(w.labels[i]) + " is uncolored");
    out.edges.push_back({w.labels[i], c.color[i]});
  }
  return out;
}

Reseeded reseed(const Patch& p) {
  const int ns = p.basis.n_seeds();
  Reseeded out;
  std::vector<CellVertex> vertices;
  for (const auto& v : p.vertices) {
    const auto image = reseed_vertex(v, p.n, p.m, ns);
    out.map.emplace_back(v, image);
    vertices.push_back(image);
  }
  std::vector<Edge> edges;
  edges.reserve(p.edges.size());
  for (const auto& e : p.edges) {
    edges.emplace_back(reseed_vertex(e.a, p.n, p.m, ns), reseed_vertex(e.b, p.n, p.m, ns));
    vertices.push_back(edges.back().a);
    vertices.push_back(edges.back().b);
  }
  out.basis = BasisGraph(p.n * p.m * ns, std::move(vertices), std::move(edges));
  return out;
}

ColoredPatch reseed(const ColoredPatch& c) {
  ColoredPatch out{1, 1, c.n * c.m * c.n_seeds, c.k, {}};
  out.edges.reserve(c.edges.size());
  for (const auto& ce : c.edges) {
    out.edges.push_back({Edge(reseed_vertex(ce.edge.a, c.n, c.m, c.n_seeds),
                              reseed_vertex(ce.edge.b, c.n, c.m, c.n_seeds)),
                         ce.color});
  }
  return out;
}

namespace {

std::vector<PatchSize> sizes_with_area(int area) {
  std::vector<PatchSize> out;
  for (int n = 1; n <= area; ++n)
    if (area % n == 0) out.push_back({n, area / n});
  std::sort(out.begin(), out.end(), [](const PatchSize& a, const PatchSize& b) {
    const int ma = std::max(a.n, a.m), mb = std::max(b.n, b.m);
    return ma != mb ? ma < mb : a.n < b.n;
  });
  return out;
}

}  // namespace

PatchSize patch_size_sequence(std::size_t i) {
  for (int area = 1;; ++area) {
    const auto sizes = sizes_with_area(area);
    if (i < sizes.size()) return sizes[i];
    i -= sizes.size();
  }
}

std::size_t patch_size_index(PatchSize size) {
  if (size.n < 1 || size.m < 1) throw std::invalid_argument("patch dimensions must be positive");
  std::size_t base = 0;
  for (int area = 1; area < size.n * size.m; ++area) base += sizes_with_area(area).size();
  const auto sizes = sizes_with_area(size.n * size.m);
  const auto it = std::find(sizes.begin(), sizes.end(), size);
  return base + static_cast<std::size_t>(it - sizes.begin());
}

}  // namespace latcol
