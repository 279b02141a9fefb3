#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "latcol/basis_graph.hpp"
#include "latcol/driver.hpp"
#include "latcol/geometry.hpp"
#include "latcol/patch.hpp"
#include "latcol/verify.hpp"

namespace latcol {

/// Malformed or unreadable input document.
class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] nlohmann::json read_json_file(const std::string& path);

[[nodiscard]] nlohmann::json to_json(const CellVertex& v);
[[nodiscard]] CellVertex vertex_from_json(const nlohmann::json& j);

/// {"n_seeds": int, "vertices": [[dx,dy,s],...], "edges": [[[dx,dy,s],[dx,dy,s]],...]};
/// "vertices" is optional on input.
[[nodiscard]] nlohmann::json to_json(const BasisGraph& b);
[[nodiscard]] BasisGraph basis_from_json(const nlohmann::json& j);

/// {"k": int, "n": int, "m": int, "n_seeds": int, "edges": [[[v],[v'],c],...]}.
/// On input n, m default to 1 and n_seeds to one past the largest seed id.
[[nodiscard]] nlohmann::json to_json(const ColoredPatch& c);
[[nodiscard]] ColoredPatch colored_patch_from_json(const nlohmann::json& j);

/// Coloring JSON plus "t", "delta", "status" and "stats". Wall time only when `timing`.
[[nodiscard]] nlohmann::json to_json(const ColoringResult& r, bool timing = false);

[[nodiscard]] nlohmann::json to_json(const SuperPatch& s);
[[nodiscard]] nlohmann::json to_json(const InducedConflict& c);
[[nodiscard]] nlohmann::json to_json(const WrappedPatch& w);

/// One catalog entry as stored on disk.
struct CatalogRecord {
  std::vector<std::string> names;  // "name" then "aliases"
  GeometricLattice lattice;
  bool has_edges = false;
  double bond_length = 1.0;
  std::optional<int> expected_delta;
};

[[nodiscard]] CatalogRecord catalog_record_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const CatalogRecord& r);

}  // namespace latcol
