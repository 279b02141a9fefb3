#include "latcol/driver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latcol {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::kAuto: return "auto";
    case Engine::kExact: return "exact";
    case Engine::kMisraGries: return "misra-gries";
    case Engine::kGreedy: return "greedy";
  }
  return "?";
}

std::optional<Engine> parse_engine(const std::string& s) {
  for (const auto e : {Engine::kAuto, Engine::kExact, Engine::kMisraGries, Engine::kGreedy})
    if (s == to_string(e)) return e;
  return std::nullopt;
}

const char* to_string(AttemptOutcome o) {
  switch (o) {
    case AttemptOutcome::kSelfLoops: return "self-loops";
    case AttemptOutcome::kNotSimple: return "not-simple";
    case AttemptOutcome::kUnsat: return "unsat";
    case AttemptOutcome::kBudgetExceeded: return "budget-exceeded";
    case AttemptOutcome::kTooManyColors: return "too-many-colors";
    case AttemptOutcome::kColored: return "colored";
  }
  return "?";
}

int lattice_max_degree(const BasisGraph& b) {
  const auto span = span_bounds(b);
  return max_degree(wrap(build_patch(b, span.dx_max + 1, span.dy_max + 1)).graph);
}

namespace {

struct AttemptResult {
  SizeAttempt attempt;
  std::optional<ColoredPatch> coloring;
  std::uint64_t stage_steps = 0;
  MisraGriesStats mg;
};

int palette_size(const EdgeColoring& c) {
  int k = 0;
  for (int x : c.color) k = std::max(k, x + 1);
  return k;
}

int color_bound(int t, int delta) {
  if (t == 1) return delta;
  if (t == 2) return delta + 1;
  return std::max(1, 2 * delta - 1);
}

Engine resolve_engine(Engine requested, int t, bool simple) {
  if (requested != Engine::kAuto) return requested;
  if (t == 1) return Engine::kExact;
  if (t == 2) return simple ? Engine::kMisraGries : Engine::kExact;
  return Engine::kGreedy;
}

AttemptResult attempt_size(const BasisGraph& b, PatchSize size, const ColoringRequest& req, int delta) {
  AttemptResult r;
  r.attempt.size = size;
  const Patch p = build_patch(b, size.n, size.m);
  const WrappedPatch w = wrap(p);
  r.stage_steps += p.vertices.size() + 2 * p.edges.size();

  r.attempt.self_loops = self_loops(w);
  r.stage_steps += w.graph.edges.size();
  if (!r.attempt.self_loops.empty()) {
    r.attempt.outcome = AttemptOutcome::kSelfLoops;
    return r;
  }

  const bool simple = !has_multi_edge(w.graph);
  const Engine engine = resolve_engine(req.engine, req.t, simple);
  r.attempt.engine = engine;
  const int bound = color_bound(req.t, delta);

  std::optional<EdgeColoring> coloring;
  switch (engine) {
    case Engine::kMisraGries:
      if (!simple) {
        r.attempt.outcome = AttemptOutcome::kNotSimple;
        return r;
      }
      coloring = misra_gries_instrumented(w.graph, r.mg);
      r.attempt.solver_steps = r.mg.fan_steps + r.mg.path_steps;
      break;
    case Engine::kGreedy:
      coloring = greedy_proper(w.graph);
      r.attempt.solver_steps = w.graph.edges.size();
      break;
    case Engine::kExact:
    case Engine::kAuto: {
      const auto res = exact_color(w.graph, std::max(1, bound), req.step_budget);
      r.attempt.solver_steps = res.steps;
      if (res.status == ExactStatus::kUnsat) {
        r.attempt.outcome = AttemptOutcome::kUnsat;
        return r;
      }
      if (res.status == ExactStatus::kBudgetExceeded) {
        r.attempt.outcome = AttemptOutcome::kBudgetExceeded;
        return r;
      }
      coloring = res.coloring;
      break;
    }
  }
  coloring->k = palette_size(*coloring);
  r.attempt.colors = coloring->k;
  if (coloring->k > bound) {
    r.attempt.outcome = AttemptOutcome::kTooManyColors;
    return r;
  }
  r.attempt.outcome = AttemptOutcome::kColored;
  r.coloring = unwrap(w, *coloring, b.n_seeds());
  r.stage_steps += w.labels.size();
  return r;
}

void validate_request(const ColoringRequest& req) {
  if (req.t < 1 || req.t > 3) throw std::invalid_argument("coloring type must be 1, 2 or 3");
  if (req.engine == Engine::kMisraGries && req.t == 1)
    throw std::invalid_argument("misra-gries cannot guarantee a type-I coloring; use --type 2 or 3");
  if (req.initial && (req.initial->n < 1 || req.initial->m < 1))
    throw std::invalid_argument("initial patch dimensions must be positive");
  if (req.max_area && *req.max_area < 1) throw std::invalid_argument("max area must be positive");
  if (req.jobs < 1) throw std::invalid_argument("jobs must be positive");
}

void require_valid(const BasisGraph& b) {
  const auto violations = validate_basis(b);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid basis graph:";
  for (const auto& v : violations) os << "\n  " << v.message;
  throw InvalidBasis(os.str());
}

std::vector<std::string> isolated_seed_warnings(const BasisGraph& b) {
  std::set<int> touched;
  for (const auto& e : b.edges()) {
    touched.insert(e.a.s);
    touched.insert(e.b.s);
  }
  std::vector<std::string> out;
  for (int s = 0; s < b.n_seeds(); ++s)
    if (!touched.count(s)) out.push_back("seed " + std::to_string(s) + " is isolated");
  return out;
}

int achieved_type(int k, int delta) {
  if (k <= delta) return 1;
  if (k <= delta + 1) return 2;
  return 3;
}

void absorb(DriverStats& stats, AttemptResult& r) {
  stats.solver_steps += r.attempt.solver_steps;
  stats.stage_steps += r.stage_steps;
  stats.misra_gries.fan_steps += r.mg.fan_steps;
  stats.misra_gries.path_steps += r.mg.path_steps;
  if (r.attempt.outcome == AttemptOutcome::kSelfLoops) ++stats.self_loop_rejections;
  if (r.attempt.outcome == AttemptOutcome::kBudgetExceeded) ++stats.budget_events;
  stats.attempts.push_back(std::move(r.attempt));
}

void finish(ColoringResult& out, const ColoredPatch& c) {
  out.status = DriverStatus::kColored;
  out.coloring = c;
  out.n = c.n;
  out.m = c.m;
  out.k = c.k;
  out.t_achieved = achieved_type(c.k, out.delta);
}

}  // namespace

ColoringResult color_lattice(const BasisGraph& b, const ColoringRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  validate_request(req);
  require_valid(b);

  ColoringResult out;
  out.t_requested = req.t;
  out.delta = lattice_max_degree(b);
  out.stats.warnings = isolated_seed_warnings(b);

  std::optional<int> cap = req.max_area;
  if (!cap && req.t == 1) cap = kDefaultMaxAreaTypeI;

  std::size_t index = req.initial ? patch_size_index(*req.initial) : 0;
  const auto within_cap = [&](std::size_t i) {
    const auto s = patch_size_sequence(i);
    return !cap || s.n * s.m <= *cap;
  };

  while (within_cap(index)) {
    std::vector<std::size_t> batch;
    for (std::size_t i = index; batch.size() < static_cast<std::size_t>(req.jobs) && within_cap(i); ++i)
      batch.push_back(i);

    std::vector<AttemptResult> results;
    if (batch.size() == 1) {
      results.push_back(attempt_size(b, patch_size_sequence(batch[0]), req, out.delta));
    } else {
      std::vector<std::future<AttemptResult>> futures;
      for (const auto i : batch)
        futures.push_back(std::async(std::launch::async, attempt_size, std::cref(b), patch_size_sequence(i),
                                     std::cref(req), out.delta));
      for (auto& f : futures) results.push_back(f.get());
    }

    for (auto& r : results) {
      const auto colored = std::move(r.coloring);
      absorb(out.stats, r);
      if (colored) {
        finish(out, *colored);
        out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
      }
    }
    index += batch.size();
  }
  out.status = DriverStatus::kAreaExhausted;
  out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ColoringResult algorithm1(const BasisGraph& b) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(b);
  ColoringResult out;
  out.t_requested = 2;
  out.delta = lattice_max_degree(b);
  out.stats.warnings = isolated_seed_warnings(b);

  const auto span = span_bounds(b);
  ColoringRequest req;
  req.t = 2;
  req.engine = Engine::kMisraGries;
  auto r = attempt_size(b, {2 * span.dx_max + 1, 2 * span.dy_max + 1}, req, out.delta);
  if (r.attempt.outcome != AttemptOutcome::kColored)
    throw std::logic_error(std::string("algorithm1: initial patch was rejected: ") + to_string(r.attempt.outcome));
  const auto colored = std::move(r.coloring);
  absorb(out.stats, r);
  finish(out, *colored);
  out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace latcol
