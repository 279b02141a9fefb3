#include "latcol/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

namespace latcol {

const char* to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::kSameColor: return "same-color";
    case ConflictKind::kDoubleColored: return "double-colored";
  }
  return "?";
}

SuperPatch expand(const ColoredPatch& c, int N, int M) {
  if (N < 1 || M < 1) throw std::invalid_argument("super patch repetitions must be positive");
  SuperPatch s{c, N, M, 0, {}};
  s.edges.reserve(c.edges.size() * static_cast<std::size_t>(N) * static_cast<std::size_t>(M));
  for (int y = 0; y < M; ++y)
    for (int x = 0; x < N; ++x)
      for (const auto& ce : c.edges) s.edges.push_back({ce.edge.translated(c.n * x, c.m * y), ce.color});
  s.raw_edge_count = s.edges.size();
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

namespace {

using Incidence = std::map<CellVertex, std::vector<ColoredEdge>>;

void scan_vertex(const CellVertex& v, const std::vector<ColoredEdge>& list, std::vector<InducedConflict>& out) {
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const auto& a = list[i];
      const auto& b = list[j];
      if (a.edge == b.edge) {
        if (a.color != b.color) out.push_back({ConflictKind::kDoubleColored, v, a, b});
      } else if (a.color == b.color) {
        out.push_back({ConflictKind::kSameColor, v, a, b});
      }
    }
}

// Inverse of reseed_vertex.
CellVertex unreseed(const CellVertex& v, int n, int m, int n_seeds) {
  const int cell = v.s / n_seeds;
  return {v.dx * n + cell % n, v.dy * m + cell / n, v.s % n_seeds};
}

ColoredEdge unreseed(const ColoredEdge& e, int n, int m, int n_seeds) {
  return {Edge(unreseed(e.edge.a, n, m, n_seeds), unreseed(e.edge.b, n, m, n_seeds)), e.color};
}

}  // namespace

std::vector<std::string> finite_patch_problems(const ColoredPatch& c) {
  std::vector<std::string> out;
  if (c.n < 1 || c.m < 1) out.push_back("patch dimensions must be positive");
  if (c.n_seeds < 1 && !c.edges.empty()) out.push_back("n_seeds must be positive");
  Incidence inc;
  for (const auto& ce : c.edges) {
    if (ce.color < 0 || ce.color >= c.k)
      out.push_back("edge " + to_string(ce.edge) + " has color " + std::to_string(ce.color) + " outside [0, " +
                    std::to_string(c.k) + ")");
    if (ce.edge.is_loop()) out.push_back("edge " + to_string(ce.edge) + " is a self-loop");
    if (ce.edge.a.s < 0 || ce.edge.b.s < 0 || ce.edge.a.s >= c.n_seeds || ce.edge.b.s >= c.n_seeds)
      out.push_back("edge " + to_string(ce.edge) + " uses a seed outside [0, n_seeds)");
    inc[ce.edge.a].push_back(ce);
    inc[ce.edge.b].push_back(ce);
  }
  for (const auto& [v, list] : inc) {
    std::vector<InducedConflict> found;
    scan_vertex(v, list, found);
    for (const auto& f : found)
      out.push_back("edges " + to_string(f.first.edge) + " and " + to_string(f.second.edge) + " clash at " +
                    to_string(v));
  }
  return out;
}

InducedReport check_induced(const ColoredPatch& c, int jobs) {
  const auto problems = finite_patch_problems(c);
  if (!problems.empty()) throw std::invalid_argument("colored patch rejected: " + problems.front());
  InducedReport report;
  if (c.edges.empty()) return report;

  const ColoredPatch prime = reseed(c);
  int span = 0;
  for (const auto& ce : prime.edges)
    for (const auto& v : {ce.edge.a, ce.edge.b}) span = std::max({span, std::abs(v.dx), std::abs(v.dy)});

  // Every lattice edge at a vertex of the central copy comes from a copy at
  // most `span` cells away.
  const int reach = 2 * span + 1;
  const SuperPatch sp = expand(prime, reach, reach);
  Incidence inc;
  for (const auto& ce : sp.edges)
    for (const auto& v : {ce.edge.a, ce.edge.b})
      if (v.dx == span && v.dy == span) inc[v].push_back(ce);

  std::vector<std::pair<CellVertex, std::vector<ColoredEdge>>> work(inc.begin(), inc.end());
  const auto scan_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<InducedConflict> out;
    for (std::size_t i = lo; i < hi; ++i) {
      std::vector<InducedConflict> found;
      scan_vertex(work[i].first, work[i].second, found);
      for (auto& f : found) {
        const CellVertex centered = work[i].first.translated(-span, -span);
        out.push_back({f.kind, unreseed(centered, c.n, c.m, c.n_seeds),
                       unreseed({f.first.edge.translated(-span, -span), f.first.color}, c.n, c.m, c.n_seeds),
                       unreseed({f.second.edge.translated(-span, -span), f.second.color}, c.n, c.m, c.n_seeds)});
      }
    }
    return out;
  };

  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(jobs, work.size()));
  if (parts == 1) {
    report.conflicts = scan_range(0, work.size());
  } else {
    std::vector<std::future<std::vector<InducedConflict>>> futures;
    for (std::size_t p = 0; p < parts; ++p)
      futures.push_back(std::async(std::launch::async, scan_range, work.size() * p / parts,
                                   work.size() * (p + 1) / parts));
    for (auto& f : futures) {
      auto part = f.get();
      report.conflicts.insert(report.conflicts.end(), part.begin(), part.end());
    }
  }
  for (auto& f : report.conflicts)
    if (f.second < f.first) std::swap(f.first, f.second);
  std::sort(report.conflicts.begin(), report.conflicts.end());
  return report;
}

CoverageReport check_covers_patch(const ColoredPatch& c, const BasisGraph& b) {
  CoverageReport out;
  std::set<Edge> want;
  for (const auto& e : build_patch(b, c.n, c.m).edges) want.insert(e);
  std::set<Edge> have;
  for (const auto& ce : c.edges) have.insert(ce.edge);
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(out.missing));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(out.extra));
  return out;
}

std::vector<SeedViolation> seed_uniqueness_check(const ColoredPatch& c) {
  const ColoredPatch prime = reseed(c);
  std::map<std::pair<int, int>, std::vector<Edge>> uses;  // (color, seed) -> edges
  for (const auto& ce : prime.edges) {
    uses[{ce.color, ce.edge.a.s}].push_back(ce.edge);
    uses[{ce.color, ce.edge.b.s}].push_back(ce.edge);
  }
  std::vector<SeedViolation> out;
  for (auto& [key, edges] : uses)
    if (edges.size() > 1) out.push_back({key.first, key.second, std::move(edges)});
  return out;
}

namespace {

struct Extent {
  int lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
};

Extent extent(const ColoredPatch& c) {
  Extent e;
  bool first = true;
  for (const auto& ce : c.edges)
    for (const auto& v : {ce.edge.a, ce.edge.b}) {
      if (first) {
        e = {v.dx, v.dx, v.dy, v.dy};
        first = false;
      }
      e.lo_x = std::min(e.lo_x, v.dx);
      e.hi_x = std::max(e.hi_x, v.dx);
      e.lo_y = std::min(e.lo_y, v.dy);
      e.hi_y = std::max(e.hi_y, v.dy);
    }
  return e;
}

// Every translate index t with step*t + lo <= coord <= step*t + hi lies in [0, count).
bool interior_axis(int coord, int step, int lo, int hi, int count) {
  const int t_min = -floor_div(-(coord - hi), step);  // ceil((coord - hi) / step)
  const int t_max = floor_div(coord - lo, step);
  return t_min >= 0 && t_max < count;
}

}  // namespace

bool is_interior(const SuperPatch& s, const CellVertex& v) {
  if (s.source.edges.empty()) return false;
  const Extent e = extent(s.source);
  return interior_axis(v.dx, s.source.n, e.lo_x, e.hi_x, s.N) && interior_axis(v.dy, s.source.m, e.lo_y, e.hi_y, s.M);
}

std::vector<MatchingViolation> matching_check(const SuperPatch& s) {
  std::map<std::pair<int, CellVertex>, std::vector<Edge>> at;  // (color, vertex) -> edges
  for (const auto& ce : s.edges)
    for (const auto& v : {ce.edge.a, ce.edge.b})
      if (is_interior(s, v)) at[{ce.color, v}].push_back(ce.edge);
  std::vector<MatchingViolation> out;
  for (auto& [key, edges] : at) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() > 1 || (edges.size() == 1 && edges[0].is_loop()))
      out.push_back({key.first, key.second, std::move(edges)});
  }
  return out;
}

int interior_max_degree(const SuperPatch& s) {
  std::map<CellVertex, std::set<Edge>> at;
  for (const auto& ce : s.edges)
    for (const auto& v : {ce.edge.a, ce.edge.b})
      if (is_interior(s, v)) at[v].insert(ce.edge);
  std::size_t best = 0;
  for (const auto& [v, edges] : at) best = std::max(best, edges.size());
  return static_cast<int>(best);
}

}  // namespace latcol
