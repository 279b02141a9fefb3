#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "latcol/multigraph.hpp"

namespace latcol {

inline constexpr int kUncolored = -1;

/// Color per edge id of some MultiGraph. Colors are in [0, k); kUncolored
/// marks a missing assignment.
struct EdgeColoring {
  std::vector<int> color;
  int k = 0;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Number of distinct colors actually used.
[[nodiscard]] int colors_used(const EdgeColoring& c);

// ---------------------------------------------------------------------------
// Engines

/// Misra-Gries fan/path recoloring. Proper, at most max_degree + 1 colors.
/// Throws std::invalid_argument on self-loops or parallel edges.
[[nodiscard]] EdgeColoring misra_gries(const MultiGraph& g);

/// Work counters filled by misra_gries_instrumented().
struct MisraGriesStats {
  std::uint64_t fan_steps = 0;
  std::uint64_t path_steps = 0;
};
[[nodiscard]] EdgeColoring misra_gries_instrumented(const MultiGraph& g, MisraGriesStats& stats);

/// First-fit in edge-id order. Throws std::invalid_argument on self-loops.
[[nodiscard]] EdgeColoring greedy_proper(const MultiGraph& g);

enum class ExactStatus { kSat, kUnsat, kBudgetExceeded };

[[nodiscard]] const char* to_string(ExactStatus s);

struct ExactResult {
  ExactStatus status = ExactStatus::kUnsat;
  EdgeColoring coloring;  // filled only for kSat
  std::uint64_t steps = 0;
};

/// Complete backtracking search for a proper coloring with colors [0, k).
/// `step_budget` bounds the number of value assignments tried.
/// Throws std::invalid_argument on self-loops, k < 1 or k > 64.
[[nodiscard]] ExactResult exact_color(const MultiGraph& g, int k,
                                      std::optional<std::uint64_t> step_budget = std::nullopt);

inline constexpr std::size_t kBruteforceMaxEdges = 16;

/// Chromatic index by exhaustive partition of the edge set into matchings.
/// Throws std::invalid_argument past kBruteforceMaxEdges edges or on self-loops.
[[nodiscard]] int chromatic_index_bruteforce(const MultiGraph& g);

// ---------------------------------------------------------------------------
// Checking

struct ColorConflict {
  std::size_t vertex = 0;
  std::size_t first = 0;   // edge id
  std::size_t second = 0;  // edge id; equals `first` for a self-loop
  friend bool operator==(const ColorConflict&, const ColorConflict&) = default;
};

struct ProperReport {
  std::vector<std::size_t> uncolored;  // edge ids without a color (or out of palette)
  std::vector<ColorConflict> conflicts;
  [[nodiscard]] bool ok() const { return uncolored.empty() && conflicts.empty(); }
  [[nodiscard]] bool partial() const { return !uncolored.empty(); }
};

[[nodiscard]] ProperReport verify_proper(const MultiGraph& g, const EdgeColoring& c);

/// Each color class of a proper coloring on a loop-free graph is a matching.
[[nodiscard]] bool color_classes_are_matchings(const MultiGraph& g, const EdgeColoring& c);

}  // namespace latcol
