#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "latcol/catalog.hpp"
#include "latcol/driver.hpp"
#include "latcol/verify.hpp"
#include "support.hpp"

using namespace latcol;
using latcol::testing::honeycomb_basis;
using latcol::testing::induced_conflicts_oracle;
using latcol::testing::OracleConflict;
using latcol::testing::random_basis;
using latcol::testing::square_basis;
using latcol::testing::V;

namespace {

std::set<OracleConflict> as_oracle_set(const InducedReport& r) {
  std::set<OracleConflict> out;
  for (const auto& c : r.conflicts)
    out.insert({c.vertex, std::min(c.first.edge, c.second.edge), std::max(c.first.edge, c.second.edge)});
  return out;
}

// Colors the wrapped patch at (n, m) greedily regardless of loops
// (loops get distinct fresh colors), then unwraps.
ColoredPatch color_ignoring_gate(const BasisGraph& b, int n, int m) {
  const WrappedPatch w = wrap(build_patch(b, n, m));
  MultiGraph loopless;
  loopless.vertex_count = w.graph.vertex_count;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < w.graph.edges.size(); ++i)
    if (w.graph.edges[i].u != w.graph.edges[i].v) {
      loopless.add_edge(w.graph.edges[i].u, w.graph.edges[i].v);
      ids.push_back(i);
    }
  const EdgeColoring r = greedy_proper(loopless);
  EdgeColoring c{std::vector<int>(w.graph.edges.size(), kUncolored), std::max(1, r.k)};
  for (std::size_t j = 0; j < ids.size(); ++j) c.color[ids[j]] = r.color[j];
  for (auto& col : c.color)
    if (col == kUncolored) col = c.k++;
  return unwrap(w, c, b.n_seeds());
}

ColoredPatch honeycomb_coloring() {
  const auto be = honeycomb_basis().edges();
  return ColoredPatch{1, 1, 2, 3, {{be[0], 0}, {be[1], 1}, {be[2], 2}}};
}

}  // namespace

TEST(Expand, IdentityAtOneByOne) {
  const ColoredPatch c = honeycomb_coloring();
  const SuperPatch s = expand(c, 1, 1);
  auto sorted = c.edges;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(s.edges, sorted);
  EXPECT_EQ(s.raw_edge_count, 3u);
}

TEST(Expand, HoneycombThreeByThree) {
  const SuperPatch s = expand(honeycomb_coloring(), 3, 3);
  EXPECT_EQ(s.raw_edge_count, 27u);
  EXPECT_EQ(s.edges.size(), 27u);
  std::set<ColoredEdge> want;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (const auto& ce : honeycomb_coloring().edges) want.insert({ce.edge.translated(x, y), ce.color});
  EXPECT_EQ(std::set<ColoredEdge>(s.edges.begin(), s.edges.end()), want);
}

TEST(Expand, RawCountAndTranslationOfColors) {
  const ColoringResult r = color_lattice(square_basis());
  ASSERT_TRUE(r.ok());
  const SuperPatch s = expand(r.coloring, 3, 2);
  EXPECT_EQ(s.raw_edge_count, 6 * r.coloring.edges.size());
  std::set<ColoredEdge> all(s.edges.begin(), s.edges.end());
  for (const auto& ce : r.coloring.edges)
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 2; ++y) EXPECT_TRUE(all.count({ce.edge.translated(r.n * x, r.m * y), ce.color}));
  EXPECT_THROW((void)expand(r.coloring, 0, 1), std::invalid_argument);
}

TEST(Expand, PalettePermutationCommutes) {
  const ColoringResult r = color_lattice(builtin("kagome").basis);
  ASSERT_TRUE(r.ok());
  std::vector<int> perm(static_cast<std::size_t>(r.coloring.k));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>((i + 1) % perm.size());
  ColoredPatch permuted = r.coloring;
  for (auto& ce : permuted.edges) ce.color = perm[static_cast<std::size_t>(ce.color)];
  const SuperPatch a = expand(permuted, 3, 3);
  SuperPatch b = expand(r.coloring, 3, 3);
  for (auto& ce : b.edges) ce.color = perm[static_cast<std::size_t>(ce.color)];
  std::sort(b.edges.begin(), b.edges.end());
  EXPECT_EQ(a.edges, b.edges);
}

TEST(CheckInduced, HoneycombOk) { EXPECT_TRUE(check_induced(honeycomb_coloring()).ok()); }

TEST(CheckInduced, SkippedGateOnSquareConflictsEverywhere) {
  // Square at (1,1): both basis edges wrap to loops at a. Two colors.
  const auto be = square_basis().edges();
  const ColoredPatch c{1, 1, 1, 2, {{be[0], 0}, {be[1], 1}}};
  const InducedReport r = check_induced(c);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(as_oracle_set(r), induced_conflicts_oracle(c));
  std::set<CellVertex> at;
  for (const auto& cf : r.conflicts) at.insert(cf.vertex);
  EXPECT_EQ(at, (std::set<CellVertex>{V(0, 0, 0)}));
}

TEST(CheckInduced, InjectedConflictIsFound) {
  const ColoringResult r = color_lattice(builtin("triangular").basis);
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(check_induced(r.coloring).ok());
  for (std::size_t e = 0; e < r.coloring.edges.size(); ++e) {
    ColoredPatch bad = r.coloring;
    bad.edges[e].color = (bad.edges[e].color + 1) % bad.k;
    if (!finite_patch_problems(bad).empty()) continue;
    const InducedReport rep = check_induced(bad);
    EXPECT_FALSE(rep.ok());
    EXPECT_EQ(as_oracle_set(rep), induced_conflicts_oracle(bad));
  }
}

TEST(CheckInduced, MatchesOracleOnRandomColorings) {
  std::mt19937 rng(307);
  for (int i = 0; i < 150; ++i) {
    const BasisGraph b = random_basis(rng, 2, 4, 2);
    const int n = 1 + i % 2, m = 1 + (i / 2) % 2;
    const Patch p = build_patch(b, n, m);
    std::uniform_int_distribution<int> col(0, 3);
    ColoredPatch c{n, m, b.n_seeds(), 4, {}};
    for (const auto& e : p.edges) c.edges.push_back({e, col(rng)});
    if (!finite_patch_problems(c).empty()) continue;
    EXPECT_EQ(as_oracle_set(check_induced(c)), induced_conflicts_oracle(c));
  }
}

TEST(CheckInduced, OkIffWrappedPatchLoopFree) {
  std::mt19937 rng(311);
  int with_loops = 0, without = 0;
  for (int i = 0; i < 150; ++i) {
    const BasisGraph b = random_basis(rng, 2, 4, 2);
    const int n = 1 + i % 3, m = 1 + (i / 3) % 2;
    const bool loops = has_self_loops(wrap(build_patch(b, n, m)));
    const ColoredPatch c = color_ignoring_gate(b, n, m);
    if (!finite_patch_problems(c).empty()) {
      EXPECT_TRUE(loops);
      ++with_loops;
      continue;
    }
    EXPECT_EQ(check_induced(c).ok(), !loops);
    (loops ? with_loops : without)++;
  }
  EXPECT_GT(with_loops, 10);
  EXPECT_GT(without, 10);
}

TEST(CheckInduced, ParallelScanMatchesSerial) {
  const auto be = square_basis().edges();
  const ColoredPatch c{1, 1, 1, 2, {{be[0], 0}, {be[1], 1}}};
  EXPECT_EQ(check_induced(c, 1).conflicts, check_induced(c, 4).conflicts);
}

TEST(CheckInduced, RejectsImproperFinitePatch) {
  const auto be = honeycomb_basis().edges();
  const ColoredPatch clash{1, 1, 2, 3, {{be[0], 0}, {be[1], 0}, {be[2], 2}}};
  EXPECT_FALSE(finite_patch_problems(clash).empty());
  EXPECT_THROW((void)check_induced(clash), std::invalid_argument);
  const ColoredPatch out_of_palette{1, 1, 2, 2, {{be[0], 0}, {be[1], 1}, {be[2], 2}}};
  EXPECT_THROW((void)check_induced(out_of_palette), std::invalid_argument);
}

TEST(CheckCoversPatch, DetectsMissingAndExtra) {
  EXPECT_TRUE(check_covers_patch(honeycomb_coloring(), honeycomb_basis()).ok());
  ColoredPatch c = honeycomb_coloring();
  c.edges.pop_back();
  c.edges.push_back({Edge(V(0, 0, 0), V(5, 0, 1)), 2});
  const auto r = check_covers_patch(c, honeycomb_basis());
  EXPECT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.extra.size(), 1u);
}

TEST(SeedUniqueness, Examples) {
  EXPECT_TRUE(seed_uniqueness_check(ColoredPatch{1, 1, 2, 1, {}}).empty());
  const ColoredPatch bad{1, 1, 2, 1, {{Edge(V(0, 0, 0), V(1, 0, 1)), 0}, {Edge(V(0, 0, 1), V(0, 1, 0)), 0}}};
  const auto v = seed_uniqueness_check(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const SeedViolation& s) { return s.seed == 1 && s.color == 0; }));
}

TEST(SeedUniqueness, DriverOutputsPass) {
  for (const char* name : {"honeycomb", "square", "kagome", "triangular", "ruby"}) {
    const ColoringResult r = color_lattice(builtin(name).basis);
    ASSERT_TRUE(r.ok()) << name;
    EXPECT_TRUE(seed_uniqueness_check(r.coloring).empty()) << name;
  }
}

TEST(Matching, DriverOutputsAreMatchingsInInterior) {
  for (const char* name : {"honeycomb", "square", "snub-square"}) {
    const ColoringResult r = color_lattice(builtin(name).basis);
    ASSERT_TRUE(r.ok()) << name;
    const SuperPatch s = expand(r.coloring, 4, 4);
    EXPECT_TRUE(matching_check(s).empty()) << name;
    EXPECT_EQ(interior_max_degree(s), r.delta) << name;
  }
}

TEST(Matching, SkippedGateViolates) {
  const auto be = square_basis().edges();
  const SuperPatch s = expand(ColoredPatch{1, 1, 1, 2, {{be[0], 0}, {be[1], 1}}}, 5, 5);
  EXPECT_FALSE(matching_check(s).empty());
  EXPECT_TRUE(is_interior(s, V(2, 2, 0)));
  EXPECT_FALSE(is_interior(s, V(0, 0, 0)));
}

TEST(Matching, InjectedConflictViolates) {
  ColoredPatch c = honeycomb_coloring();
  c.edges[1].color = 0;
  const SuperPatch s = expand(c, 4, 4);
  const auto v = matching_check(s);
  ASSERT_FALSE(v.empty());
  for (const auto& mv : v) EXPECT_EQ(mv.color, 0);
}
