#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcol/basis_graph.hpp"
#include "latcol/coloring.hpp"
#include "latcol/patch.hpp"

namespace latcol {

enum class Engine { kAuto, kExact, kMisraGries, kGreedy };

[[nodiscard]] const char* to_string(Engine e);
/// Accepts "auto", "exact", "misra-gries", "greedy".
[[nodiscard]] std::optional<Engine> parse_engine(const std::string& s);

/// Default area cap for type-I requests without a user-supplied cap.
inline constexpr int kDefaultMaxAreaTypeI = 64;

struct ColoringRequest {
  int t = 1;  // 1: at most delta colors, 2: at most delta + 1, 3: any proper coloring
  Engine engine = Engine::kAuto;
  std::optional<PatchSize> initial;
  std::optional<int> max_area;
  std::optional<std::uint64_t> step_budget;  // per exact_color call
  int jobs = 1;                              // > 1 evaluates sizes speculatively in parallel
};

enum class AttemptOutcome { kSelfLoops, kNotSimple, kUnsat, kBudgetExceeded, kTooManyColors, kColored };

[[nodiscard]] const char* to_string(AttemptOutcome o);

struct SizeAttempt {
  PatchSize size;
  AttemptOutcome outcome = AttemptOutcome::kUnsat;
  Engine engine = Engine::kExact;  // engine actually run
  std::vector<Edge> self_loops;    // labels, for kSelfLoops
  std::uint64_t solver_steps = 0;
  int colors = 0;
};

struct DriverStats {
  std::vector<SizeAttempt> attempts;
  std::uint64_t solver_steps = 0;
  std::size_t self_loop_rejections = 0;
  std::size_t budget_events = 0;
  std::uint64_t stage_steps = 0;  // build, wrap, loop scan and unwrap work
  MisraGriesStats misra_gries;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;

  [[nodiscard]] std::size_t patches_tried() const { return attempts.size(); }
};

enum class DriverStatus { kColored, kAreaExhausted };

struct ColoringResult {
  DriverStatus status = DriverStatus::kAreaExhausted;
  ColoredPatch coloring;  // the coloring basis graph, valid when colored
  int n = 0;
  int m = 0;
  int t_requested = 1;
  int t_achieved = 0;
  int k = 0;
  int delta = 0;
  DriverStats stats;

  [[nodiscard]] bool ok() const { return status == DriverStatus::kColored; }
};

/// Maximum degree of the lattice graph generated by `b`.
[[nodiscard]] int lattice_max_degree(const BasisGraph& b);

/// Grows patches along patch_size_sequence until a wrapped patch is
/// self-loop-free and admits a coloring of the requested type.
/// Throws InvalidBasis if `b` is not a valid basis graph and
/// std::invalid_argument on an inconsistent request.
[[nodiscard]] ColoringResult color_lattice(const BasisGraph& b, const ColoringRequest& req = {});

/// Single pass at (2 dx_max + 1, 2 dy_max + 1) with Misra-Gries; always type-II.
[[nodiscard]] ColoringResult algorithm1(const BasisGraph& b);

}  // namespace latcol
