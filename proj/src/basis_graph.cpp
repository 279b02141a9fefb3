#include "latcol/basis_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace latcol {

std::ostream& operator<<(std::ostream& os, const CellVertex& v) {
  return os << '(' << v.dx << ',' << v.dy << ',' << v.s << ')';
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.a << ',' << e.b << '}';
}

std::string to_string(const CellVertex& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

namespace {

std::vector<CellVertex> sorted_unique(std::vector<CellVertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BasisGraph::BasisGraph(int n_seeds, std::vector<CellVertex> vertices, std::vector<Edge> edges)
    : n_seeds_(n_seeds), vertices_(sorted_unique(std::move(vertices))), edges_(std::move(edges)) {}

BasisGraph BasisGraph::checked(int n_seeds, std::vector<CellVertex> vertices,
                               std::vector<Edge> edges) {
  BasisGraph b(n_seeds, std::move(vertices), std::move(edges));
  if (auto violations = validate_basis(b); !violations.empty()) {
    std::string msg = "invalid basis graph:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw InvalidBasis(msg);
  }
  return b;
}

BasisGraph BasisGraph::from_edges(int n_seeds, std::vector<Edge> edges) {
  std::vector<CellVertex> vertices;
  for (const auto& e : edges) {
    vertices.push_back(e.a);
    vertices.push_back(e.b);
    vertices.push_back({0, 0, e.a.s});
    vertices.push_back({0, 0, e.b.s});
  }
  return BasisGraph(n_seeds, std::move(vertices), std::move(edges));
}

TranslationKey edge_translation_class(const Edge& e) {
  const TranslationKey from_a{{0, 0, e.a.s}, e.b.translated(-e.a.dx, -e.a.dy)};
  const TranslationKey from_b{{0, 0, e.b.s}, e.a.translated(-e.b.dx, -e.b.dy)};
  return std::min(from_a, from_b);
}

Edge canonical_edge(const Edge& e) {
  const auto key = edge_translation_class(e);
  return Edge(key.anchor, key.other);
}

BasisGraph normalize_basis(const BasisGraph& raw) {
  std::vector<Edge> edges;
  edges.reserve(raw.edges().size());
  for (const auto& e : raw.edges()) {
    if (e.is_loop()) throw InvalidBasis("self-loop edge " + to_string(e));
    edges.push_back(e.a.is_seed() || e.b.is_seed() ? e : canonical_edge(e));
  }
  std::vector<CellVertex> vertices;
  for (const auto& e : edges) {
    vertices.push_back(e.a);
    vertices.push_back(e.b);
    vertices.push_back({0, 0, e.a.s});
    vertices.push_back({0, 0, e.b.s});
  }
  // Isolated vertices collapse onto their seed.
  for (const auto& v : raw.vertices()) vertices.push_back({0, 0, v.s});
  return BasisGraph(raw.n_seeds(), std::move(vertices), std::move(edges));
}

std::vector<RedundantPair> detect_redundant(const BasisGraph& b) {
  std::map<TranslationKey, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < b.edges().size(); ++i) {
    if (b.edges()[i].is_loop()) continue;
    classes[edge_translation_class(b.edges()[i])].push_back(i);
  }
  std::vector<RedundantPair> out;
  for (const auto& [key, idx] : classes) {
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        out.push_back({b.edges()[idx[i]], b.edges()[idx[j]]});
  }
  return out;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNoSeeds: return "no-seeds";
    case ViolationKind::kSeedOutOfRange: return "seed-out-of-range";
    case ViolationKind::kSelfLoop: return "self-loop";
    case ViolationKind::kNonseedEdge: return "nonseed-edge";
    case ViolationKind::kRedundantEdge: return "redundant-edge";
    case ViolationKind::kMissingVertex: return "missing-vertex";
    case ViolationKind::kMissingSeed: return "missing-seed";
  }
  return "unknown";
}

std::vector<Violation> validate_basis(const BasisGraph& b) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::string msg, std::optional<Edge> e,
                    std::optional<CellVertex> v) {
    out.push_back({kind, std::string(to_string(kind)) + ": " + std::move(msg), e, v});
  };

  if (b.n_seeds() < 1) report(ViolationKind::kNoSeeds, "n_seeds must be positive", {}, {});

  const std::set<CellVertex> vertex_set(b.vertices().begin(), b.vertices().end());
  std::set<int> used_seeds;
  for (const auto& v : b.vertices()) {
    used_seeds.insert(v.s);
    if (v.s < 0 || v.s >= b.n_seeds())
      report(ViolationKind::kSeedOutOfRange, "vertex " + to_string(v) + " has seed id outside [0, n_seeds)",
             {}, v);
  }

  for (const auto& e : b.edges()) {
    for (const auto& v : {e.a, e.b}) {
      used_seeds.insert(v.s);
      if (!vertex_set.contains(v))
        report(ViolationKind::kMissingVertex, "endpoint " + to_string(v) + " of " + to_string(e) +
                                                  " is not in the vertex set",
               e, v);
    }
    if (e.a.s < 0 || e.a.s >= b.n_seeds() || e.b.s < 0 || e.b.s >= b.n_seeds())
      report(ViolationKind::kSeedOutOfRange, "edge " + to_string(e) + " uses a seed id outside [0, n_seeds)",
             e, {});
    if (e.is_loop()) {
      report(ViolationKind::kSelfLoop, "edge " + to_string(e) + " is a self-loop", e, {});
    } else if (!e.a.is_seed() && !e.b.is_seed()) {
      report(ViolationKind::kNonseedEdge, "edge " + to_string(e) + " joins two nonseeds", e, {});
    }
  }

  for (const auto& pair : detect_redundant(b)) {
    report(ViolationKind::kRedundantEdge,
           "edges " + to_string(pair.first) + " and " + to_string(pair.second) +
               " are translates of each other",
           pair.second, {});
  }

  for (int s : used_seeds) {
    const CellVertex seed{0, 0, s};
    if (!vertex_set.contains(seed))
      report(ViolationKind::kMissingSeed, "seed " + to_string(seed) + " is used but not a vertex", {}, seed);
  }
  return out;
}

SpanBounds span_bounds(const BasisGraph& b) {
  SpanBounds out;
  for (const auto& e : b.edges()) {
    for (const auto& v : {e.a, e.b}) {
      out.dx_max = std::max(out.dx_max, std::abs(v.dx));
      out.dy_max = std::max(out.dy_max, std::abs(v.dy));
    }
  }
  return out;
}

BasisGraph translate_basis(const BasisGraph& b, int x, int y) {
  std::vector<CellVertex> vertices;
  vertices.reserve(b.vertices().size());
  for (const auto& v : b.vertices()) vertices.push_back(v.translated(x, y));
  std::vector<Edge> edges;
  edges.reserve(b.edges().size());
  for (const auto& e : b.edges()) edges.push_back(e.translated(x, y));
  return BasisGraph(b.n_seeds(), std::move(vertices), std::move(edges));
}

std::vector<Edge> lattice_edges_in_window(const BasisGraph& b, int x0, int y0, int w, int h) {
  auto inside = [&](const CellVertex& v) {
    return v.dx >= x0 && v.dx < x0 + w && v.dy >= y0 && v.dy < y0 + h;
  };
  const auto span = span_bounds(b);
  std::vector<Edge> out;
  for (int y = y0 - span.dy_max; y < y0 + h + span.dy_max; ++y) {
    for (int x = x0 - span.dx_max; x < x0 + w + span.dx_max; ++x) {
      for (const auto& e : b.edges()) {
        const Edge t = e.translated(x, y);
        if (inside(t.a) && inside(t.b)) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace latcol
