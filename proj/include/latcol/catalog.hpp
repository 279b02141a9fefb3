#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latcol/basis_graph.hpp"
#include "latcol/geometry.hpp"
#include "latcol/multigraph.hpp"

namespace latcol {

enum class VizingClass { kI, kII };

[[nodiscard]] const char* to_string(VizingClass c);

struct CatalogEntry {
  std::vector<std::string> names;  // primary name first, then symbol and aliases
  GeometricLattice lattice;
  BasisGraph basis;
  std::optional<int> expected_delta;
  std::optional<VizingClass> expected_class;

  [[nodiscard]] const std::string& name() const { return names.front(); }
};

class UnknownLattice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Built-in entry by any of its names (case-insensitive; spaces and
/// underscores match '-', parentheses are ignored). Throws UnknownLattice.
[[nodiscard]] CatalogEntry builtin(const std::string& name);

/// Primary names of all built-ins, in library order.
[[nodiscard]] std::vector<std::string> builtin_names();

/// Geometric form of the wheel-decorated honeycomb. Seeds: 0, 1 honeycomb,
/// 2 the decorating vertex on a honeycomb edge, 3 the wheel hub, 4..7 the rim.
[[nodiscard]] GeometricLattice wheel_decorated_honeycomb_geometry();
[[nodiscard]] BasisGraph build_wheel_decorated_honeycomb();

/// Wheel on a 4-cycle rim with one spoke removed, vertex 0 the hub.
[[nodiscard]] MultiGraph broken_wheel();

struct IngestIssue {
  std::size_t index = 0;  // position in the file
  std::string name;
  std::string message;
};

struct IngestReport {
  std::vector<CatalogEntry> entries;
  std::vector<IngestIssue> errors;
  std::vector<IngestIssue> warnings;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a catalog document: a JSON array of entries (a single object is
/// accepted as a one-entry catalog; blank input is an empty catalog). Bad
/// entries go to `errors`, the rest are returned. Throws CatalogError if the
/// document itself is not valid JSON of that shape.
[[nodiscard]] IngestReport ingest_catalog(std::istream& in, int jobs = 1);
[[nodiscard]] IngestReport ingest_catalog_file(const std::string& path, int jobs = 1);

}  // namespace latcol
