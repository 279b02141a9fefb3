#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "latcol/catalog.hpp"
#include "latcol/driver.hpp"
#include "latcol/verify.hpp"
#include "support.hpp"

using namespace latcol;
using latcol::testing::honeycomb_basis;
using latcol::testing::random_basis;
using latcol::testing::square_basis;
using latcol::testing::V;

namespace {

// Properness of the wrapped form of a result, checked by reducing every
// colored edge modulo (n, m) and counting colors per wrapped vertex.
bool wrapped_form_proper(const ColoringResult& r) {
  std::set<std::pair<CellVertex, int>> seen;
  for (const auto& ce : r.coloring.edges) {
    const CellVertex a = pbc(ce.edge.a, r.n, r.m), b = pbc(ce.edge.b, r.n, r.m);
    if (a == b) return false;
    if (!seen.insert({a, ce.color}).second || !seen.insert({b, ce.color}).second) return false;
  }
  return true;
}

// Basis with one seed and bonds of length D along both axes plus a diagonal.
BasisGraph long_bond_basis(int d) {
  return BasisGraph::from_edges(1, {Edge(V(0, 0, 0), V(d, 0, 0)), Edge(V(0, 0, 0), V(0, d, 0)),
                                    Edge(V(0, 0, 0), V(1, 1, 0))});
}

}  // namespace

TEST(LatticeMaxDegree, Examples) {
  EXPECT_EQ(lattice_max_degree(honeycomb_basis()), 3);
  EXPECT_EQ(lattice_max_degree(square_basis()), 4);
  EXPECT_EQ(lattice_max_degree(builtin("kagome").basis), 4);
  EXPECT_EQ(lattice_max_degree(BasisGraph::from_edges(2, {Edge(V(0, 0, 0), V(0, 0, 1))})), 1);
}

TEST(LatticeMaxDegree, MatchesSuperPatchInterior) {
  std::mt19937 rng(211);
  for (int i = 0; i < 40; ++i) {
    const BasisGraph b = random_basis(rng);
    ColoredPatch c{1, 1, b.n_seeds(), 1, {}};
    for (const auto& e : b.edges()) c.edges.push_back({e, 0});
    const auto s = span_bounds(b);
    const SuperPatch sp = expand(c, 2 * s.dx_max + 5, 2 * s.dy_max + 5);
    EXPECT_EQ(interior_max_degree(sp), lattice_max_degree(b));
  }
}

TEST(ColorLattice, HoneycombTypeOne) {
  const ColoringResult r = color_lattice(honeycomb_basis());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.delta, 3);
  EXPECT_EQ(r.t_achieved, 1);
  EXPECT_EQ(r.stats.patches_tried(), 1u);
  EXPECT_TRUE(wrapped_form_proper(r));
  EXPECT_TRUE(check_induced(r.coloring).ok());
}

TEST(ColorLattice, SquareRejectsOneByOneWithTwoLoops) {
  const ColoringResult r = color_lattice(square_basis());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 2);
  EXPECT_EQ(r.k, 4);
  ASSERT_FALSE(r.stats.attempts.empty());
  const SizeAttempt& first = r.stats.attempts.front();
  EXPECT_EQ(first.size, (PatchSize{1, 1}));
  EXPECT_EQ(first.outcome, AttemptOutcome::kSelfLoops);
  EXPECT_EQ(first.self_loops.size(), 2u);
  for (const auto& a : r.stats.attempts)
    if (a.size.n * a.size.m < 4) EXPECT_EQ(a.outcome, AttemptOutcome::kSelfLoops);
  EXPECT_TRUE(check_induced(r.coloring).ok());
}

TEST(ColorLattice, SquareTypeThree) {
  ColoringRequest req;
  req.t = 3;
  const ColoringResult r = color_lattice(square_basis(), req);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 2);
  EXPECT_LE(r.k, 2 * 4 - 1);
  EXPECT_TRUE(wrapped_form_proper(r));
  EXPECT_TRUE(check_induced(r.coloring).ok());
}

TEST(ColorLattice, TypeTwoWithinDeltaPlusOne) {
  std::mt19937 rng(223);
  for (int i = 0; i < 40; ++i) {
    const BasisGraph b = random_basis(rng);
    ColoringRequest req;
    req.t = 2;
    const ColoringResult r = color_lattice(b, req);
    ASSERT_TRUE(r.ok());
    EXPECT_LE(r.k, lattice_max_degree(b) + 1);
    EXPECT_LE(r.t_achieved, 2);
    EXPECT_TRUE(wrapped_form_proper(r));
    EXPECT_TRUE(check_induced(r.coloring).ok());
  }
}

TEST(ColorLattice, TypeOneUsesExactlyDelta) {
  std::mt19937 rng(227);
  int colored = 0;
  for (int i = 0; i < 40; ++i) {
    const BasisGraph b = random_basis(rng, 2, 4, 1);
    ColoringRequest req;
    req.max_area = 12;
    const ColoringResult r = color_lattice(b, req);
    if (!r.ok()) continue;
    ++colored;
    EXPECT_EQ(r.k, lattice_max_degree(b));
    EXPECT_EQ(r.t_achieved, 1);
    EXPECT_TRUE(check_induced(r.coloring).ok());
  }
  EXPECT_GT(colored, 20);
}

TEST(ColorLattice, InitialSizeIsRespected) {
  ColoringRequest req;
  req.initial = PatchSize{3, 1};
  const ColoringResult r = color_lattice(square_basis(), req);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.stats.attempts.front().size, (PatchSize{3, 1}));
  EXPECT_GE(patch_size_index({r.n, r.m}), patch_size_index({3, 1}));
}

TEST(ColorLattice, AreaExhaustedOnWheelDecoratedHoneycomb) {
  ColoringRequest req;
  req.max_area = 8;
  const ColoringResult r = color_lattice(build_wheel_decorated_honeycomb(), req);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.status, DriverStatus::kAreaExhausted);
  for (const auto& a : r.stats.attempts) {
    EXPECT_LE(a.size.n * a.size.m, 8);
    EXPECT_TRUE(a.outcome == AttemptOutcome::kUnsat || a.outcome == AttemptOutcome::kSelfLoops);
  }
}

TEST(ColorLattice, WheelDecoratedHoneycombTypeTwo) {
  ColoringRequest req;
  req.t = 2;
  const ColoringResult r = color_lattice(build_wheel_decorated_honeycomb(), req);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.delta, 3);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.t_achieved, 2);
  EXPECT_TRUE(check_induced(r.coloring).ok());
}

TEST(ColorLattice, BudgetEventsAdvanceTheSequence) {
  ColoringRequest req;
  req.step_budget = 1;
  req.max_area = 4;
  const ColoringResult r = color_lattice(build_wheel_decorated_honeycomb(), req);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.stats.budget_events, 0u);
}

TEST(ColorLattice, SpeculativeJobsMatchSequential) {
  for (const char* name : {"square", "nn-square", "kagome", "trellis"}) {
    const BasisGraph b = builtin(name).basis;
    ColoringRequest seq, par;
    par.jobs = 4;
    const ColoringResult a = color_lattice(b, seq), c = color_lattice(b, par);
    ASSERT_TRUE(a.ok()) << name;
    EXPECT_EQ(a.n, c.n) << name;
    EXPECT_EQ(a.m, c.m) << name;
    EXPECT_EQ(a.coloring, c.coloring) << name;
  }
}

TEST(ColorLattice, Deterministic) {
  const BasisGraph b = builtin("snub-square").basis;
  EXPECT_EQ(color_lattice(b).coloring, color_lattice(b).coloring);
}

TEST(ColorLattice, RejectsInvalidInput) {
  EXPECT_THROW((void)color_lattice(BasisGraph(2, {}, {Edge(V(1, 0, 0), V(2, 0, 1))})), InvalidBasis);
  ColoringRequest mg;
  mg.engine = Engine::kMisraGries;
  EXPECT_THROW((void)color_lattice(square_basis(), mg), std::invalid_argument);
  ColoringRequest bad_t;
  bad_t.t = 4;
  EXPECT_THROW((void)color_lattice(square_basis(), bad_t), std::invalid_argument);
  ColoringRequest bad_jobs;
  bad_jobs.jobs = 0;
  EXPECT_THROW((void)color_lattice(square_basis(), bad_jobs), std::invalid_argument);
}

TEST(ColorLattice, IsolatedSeedIsWarned) {
  const BasisGraph b = BasisGraph::from_edges(2, {Edge(V(0, 0, 0), V(1, 0, 0))});
  ColoringRequest req;
  req.t = 2;
  const ColoringResult r = color_lattice(b, req);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r.stats.warnings.empty());
}

TEST(Algorithm1, HoneycombAndSquare) {
  const ColoringResult h = algorithm1(honeycomb_basis());
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(h.n, 3);
  EXPECT_EQ(h.m, 3);
  EXPECT_LE(h.k, 4);
  EXPECT_EQ(h.stats.patches_tried(), 1u);
  EXPECT_EQ(h.stats.attempts.front().engine, Engine::kMisraGries);
  EXPECT_TRUE(check_induced(h.coloring).ok());

  const ColoringResult s = algorithm1(square_basis());
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.m, 3);
  EXPECT_LE(s.k, 5);
  EXPECT_TRUE(check_induced(s.coloring).ok());
}

TEST(Algorithm1, SingleEdgeBasis) {
  const ColoringResult r = algorithm1(BasisGraph::from_edges(2, {Edge(V(0, 0, 0), V(0, 0, 1))}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.k, 1);
}

TEST(Algorithm1, RandomBasesAreTypeTwo) {
  std::mt19937 rng(229);
  for (int i = 0; i < 60; ++i) {
    const BasisGraph b = random_basis(rng);
    const ColoringResult r = algorithm1(b);
    ASSERT_TRUE(r.ok());
    const auto s = span_bounds(b);
    EXPECT_EQ(r.n, 2 * s.dx_max + 1);
    EXPECT_EQ(r.m, 2 * s.dy_max + 1);
    EXPECT_LE(r.k, lattice_max_degree(b) + 1);
    EXPECT_TRUE(check_induced(r.coloring).ok());
  }
}

TEST(Algorithm1, StageWorkIsLinearInPatchEdges) {
  double lo = 1e18, hi = 0;
  for (int d = 1; d <= 6; ++d) {
    const BasisGraph b = long_bond_basis(d);
    const ColoringResult r = algorithm1(b);
    ASSERT_TRUE(r.ok());
    const double patch_edges = static_cast<double>(r.n * r.m) * static_cast<double>(b.edges().size());
    const double ratio = static_cast<double>(r.stats.stage_steps) / patch_edges;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LE(hi / lo, 2.0);
}

TEST(EngineNames, RoundTrip) {
  for (Engine e : {Engine::kAuto, Engine::kExact, Engine::kMisraGries, Engine::kGreedy})
    EXPECT_EQ(parse_engine(to_string(e)), e);
  EXPECT_FALSE(parse_engine("z3").has_value());
}
