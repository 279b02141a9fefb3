#include "latcol/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iterator>
#include <numbers>
#include <sstream>

#include "latcol/driver.hpp"
#include "latcol/json_io.hpp"

namespace latcol {

const char* to_string(VizingClass c) { return c == VizingClass::kI ? "I" : "II"; }

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

Vec2 polar(double r, double degrees) { return {r * std::cos(degrees * kPi / 180.0), r * std::sin(degrees * kPi / 180.0)}; }

GeometricLattice unit_bonds(Vec2 v1, Vec2 v2, const std::vector<Vec2>& points) {
  GeometricLattice l = lattice_from_points(v1, v2, points);
  l.edges = infer_edges(l, {1.0}).edges;
  return l;
}

std::vector<Vec2> ring(double r, double start, double step, int count) {
  std::vector<Vec2> out;
  for (int j = 0; j < count; ++j) out.push_back(polar(r, start + step * j));
  return out;
}

GeometricLattice honeycomb() { return unit_bonds({kSqrt3, 0}, {kSqrt3 / 2, 1.5}, {{0, 0}, {kSqrt3 / 2, 0.5}}); }

// Integer grid with explicit bonds: offsets listed from the single seed.
GeometricLattice square_grid(const std::vector<std::pair<int, int>>& offsets) {
  GeometricLattice l{{1, 0}, {0, 1}, {{0, 0}}, {}};
  for (const auto& [a, b] : offsets) l.edges.push_back({{0, 0, 0}, {0, a, b}});
  return l;
}

GeometricLattice square() { return square_grid({{1, 0}, {0, 1}}); }

GeometricLattice triangular() { return unit_bonds({1, 0}, {0.5, kSqrt3 / 2}, {{0, 0}}); }

GeometricLattice square_octagon() {
  const double side = 1 + kSqrt2;
  const double c = side / 2;
  const double h = 1 / kSqrt2;
  return unit_bonds({side, 0}, {0, side}, {{c + h, c}, {c - h, c}, {c, c + h}, {c, c - h}});
}

GeometricLattice trellis() { return unit_bonds({1, 0}, {0.5, 1 + kSqrt3 / 2}, {{0, 0}, {0, 1}}); }

GeometricLattice snub_square() {
  const double side = 2 * std::cos(15.0 * kPi / 180.0);
  return unit_bonds({side, 0}, {0, side}, ring(1 / kSqrt2, 60, 90, 4));
}

GeometricLattice kagome() { return unit_bonds({2, 0}, {1, kSqrt3}, {{0, 0}, {1, 0}, {0.5, kSqrt3 / 2}}); }

// Triangular lattice with every point of a sqrt(7) superlattice removed.
GeometricLattice bridge() {
  const Vec2 a1{1, 0};
  const Vec2 a2{0.5, kSqrt3 / 2};
  const Vec2 v1 = 2.0 * a1 + a2;
  const Vec2 v2 = 3.0 * a2 - a1;
  GeometricLattice probe{v1, v2, {}, {}};
  std::vector<Vec2> points;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      const Vec2 p = static_cast<double>(i) * a1 + static_cast<double>(j) * a2;
      const Vec2 f = fractional(probe, p);
      const bool on_superlattice = std::abs(f.x - std::round(f.x)) < 1e-9 && std::abs(f.y - std::round(f.y)) < 1e-9;
      if (!on_superlattice) points.push_back(p);
    }
  return unit_bonds(v1, v2, points);
}

GeometricLattice hexagonal_cell(double side, const std::vector<Vec2>& points) {
  return unit_bonds({side, 0}, {side / 2, side * kSqrt3 / 2}, points);
}

GeometricLattice ruby() { return hexagonal_cell(1 + kSqrt3, ring(1, 30, 60, 6)); }

double dodecagon_radius() { return 1 / (2 * std::sin(15.0 * kPi / 180.0)); }

GeometricLattice star() { return hexagonal_cell(2 + kSqrt3, ring(dodecagon_radius(), 15, 30, 12)); }

GeometricLattice cross() { return hexagonal_cell(3 + kSqrt3, ring(dodecagon_radius(), 15, 30, 12)); }

struct BuiltinDef {
  std::vector<std::string> names;
  std::function<GeometricLattice()> make;
  int delta;
  VizingClass cls;
};

const std::vector<BuiltinDef>& library() {
  static const std::vector<BuiltinDef> defs = {
      {{"honeycomb", "6^3", "hexagonal", "hextille"}, honeycomb, 3, VizingClass::kI},
      {{"square", "4^4", "grid", "quadrille"}, square, 4, VizingClass::kI},
      {{"triangular", "3^6", "deltille"}, triangular, 6, VizingClass::kI},
      {{"square-octagon", "4.8^2", "truncated-square", "bathroom-tile", "truncated-quadrille"}, square_octagon, 3,
       VizingClass::kI},
      {{"trellis", "3^3.4^2", "elongated-triangular", "isosnub-quadrille"}, trellis, 5, VizingClass::kI},
      {{"snub-square", "3^2.4.3.4", "shastry-sutherland", "snub-quadrille"}, snub_square, 5, VizingClass::kI},
      {{"kagome", "3.6.3.6", "trihexagonal", "hexadeltille"}, kagome, 4, VizingClass::kI},
      {{"bridge", "3^4.6", "maple-leaf", "snub-trihexagonal", "snub-hextille"}, bridge, 5, VizingClass::kI},
      {{"ruby", "3.4.6.4", "bounce", "rhombitrihexagonal", "rhombihexadeltille"}, ruby, 4, VizingClass::kI},
      {{"star", "3.12^2", "extended-kagome", "truncated-hexagonal", "truncated-hextille"}, star, 3, VizingClass::kI},
      {{"cross", "4.6.12", "shd", "truncated-trihexagonal", "truncated-hexadeltille"}, cross, 3, VizingClass::kI},
      {{"union-jack", "[4.8^2]"}, [] { return dual(square_octagon()); }, 8, VizingClass::kI},
      {{"prismatic-pentagonal", "[3^3.4^2]", "iso-4-pentille"}, [] { return dual(trellis()); }, 4, VizingClass::kI},
      {{"cairo", "[3^2.4.3.4]", "cairo-pentagonal", "4-fold-pentille"}, [] { return dual(snub_square()); }, 4,
       VizingClass::kI},
      {{"dice", "[3.6.3.6]", "rhombille"}, [] { return dual(kagome()); }, 6, VizingClass::kI},
      {{"tetrille", "[3.4.6.4]", "deltoidal-trihexagonal"}, [] { return dual(ruby()); }, 6, VizingClass::kI},
      {{"asanoha", "[3.12^2]", "hemp-leaf", "triakis-triangular", "kisdeltille"}, [] { return dual(star()); }, 12,
       VizingClass::kI},
      {{"floret", "[3^4.6]", "floret-pentagonal", "6-fold-pentille"}, [] { return dual(bridge()); }, 6,
       VizingClass::kI},
      {{"kisrhombille", "[4.6.12]"}, [] { return dual(cross()); }, 12, VizingClass::kI},
      {{"nn-square", "j1j2-square"}, [] { return square_grid({{1, 0}, {0, 1}, {1, 1}, {1, -1}}); }, 8,
       VizingClass::kI},
      {{"nnn-square", "j1j2j3-square"},
       [] { return square_grid({{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}, {0, 2}}); }, 12, VizingClass::kI},
      {{"shuriken", "square-kagome", "squagome"}, [] { return line_graph(square_octagon()); }, 4, VizingClass::kI},
      {{"heavy-hex", "heavy-hexagon"}, [] { return subdivide(honeycomb()); }, 3, VizingClass::kI},
      {{"wheel-decorated-honeycomb"}, wheel_decorated_honeycomb_geometry, 3, VizingClass::kII},
  };
  return defs;
}

std::string normalize_name(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    if (ch == '(' || ch == ')') continue;
    if (ch == ' ' || ch == '_') {
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  return out;
}

}  // namespace

GeometricLattice wheel_decorated_honeycomb_geometry() {
  const Vec2 a{0, 0};
  const Vec2 b{kSqrt3 / 2, 0.5};
  const Vec2 v{3 * kSqrt3 / 4, 0.25};  // midpoint of b and a + v1
  const Vec2 hub{kSqrt3, 1};           // centre of the hexagon bordering that edge
  GeometricLattice l{{kSqrt3, 0}, {kSqrt3 / 2, 1.5}, {a, b, v, hub}, {}};
  for (const auto& p : ring(0.45, 240, 90, 4)) l.seeds.push_back(hub + p);
  const auto e = [](int s, int t, int da = 0, int db = 0) { return GeoEdge{{s, 0, 0}, {t, da, db}}; };
  l.edges = {e(0, 1), e(1, 0, 0, 1), e(1, 2), e(2, 0, 1, 0),               // honeycomb with v on one edge
             e(4, 5), e(5, 6), e(6, 7), e(7, 4),                           // rim
             e(3, 5), e(3, 6), e(3, 7),                                    // remaining spokes
             e(2, 4)};                                                     // redirected spoke
  return l;
}

BasisGraph build_wheel_decorated_honeycomb() { return to_basis_graph(wheel_decorated_honeycomb_geometry()); }

MultiGraph broken_wheel() {
  MultiGraph g;
  g.vertex_count = 5;
  for (std::uint32_t r = 1; r <= 4; ++r) g.add_edge(r, r % 4 + 1);
  for (std::uint32_t r = 2; r <= 4; ++r) g.add_edge(0, r);
  return g;
}

CatalogEntry builtin(const std::string& name) {
  const std::string key = normalize_name(name);
  for (const auto& def : library()) {
    const bool match = std::any_of(def.names.begin(), def.names.end(),
                                   [&](const std::string& n) { return normalize_name(n) == key; });
    if (!match) continue;
    CatalogEntry entry{def.names, def.make(), {}, def.delta, def.cls};
    entry.basis = to_basis_graph(entry.lattice);
    return entry;
  }
  std::ostringstream os;
  os << "unknown lattice '" << name << "'; available:";
  for (const auto& n : builtin_names()) os << ' ' << n;
  throw UnknownLattice(os.str());
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& def : library()) out.push_back(def.names.front());
  return out;
}

namespace {

struct EntryOutcome {
  std::optional<CatalogEntry> entry;
  std::string name;
  std::string error;
  std::vector<std::string> warnings;
};

EntryOutcome ingest_entry(const nlohmann::json& j) {
  EntryOutcome out;
  try {
    if (j.is_object() && j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
    CatalogRecord rec = catalog_record_from_json(j);
    out.name = rec.names.front();
    const auto problems = validate_geometry(rec.lattice);
    if (!problems.empty()) throw GeometryError(problems.front());
    if (!rec.has_edges) {
      auto inferred = infer_edges(rec.lattice, {rec.bond_length});
      rec.lattice.edges = std::move(inferred.edges);
      for (const int s : inferred.isolated_seeds) out.warnings.push_back("seed " + std::to_string(s) + " has no bonds");
    }
    CatalogEntry entry{rec.names, rec.lattice, to_basis_graph(rec.lattice), rec.expected_delta, std::nullopt};
    if (rec.expected_delta) {
      const int delta = lattice_max_degree(entry.basis);
      if (delta != *rec.expected_delta)
        throw CatalogError("expected_delta " + std::to_string(*rec.expected_delta) + " but the lattice has maximum degree " +
                           std::to_string(delta));
    }
    out.entry = std::move(entry);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

IngestReport ingest_catalog(std::istream& in, int jobs) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  IngestReport report;
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return report;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (doc.is_object()) doc = nlohmann::json::array({doc});
  if (!doc.is_array()) throw CatalogError("catalog must be a JSON array of entries");

  std::vector<EntryOutcome> outcomes(doc.size());
  if (jobs <= 1 || doc.size() < 2) {
    for (std::size_t i = 0; i < doc.size(); ++i) outcomes[i] = ingest_entry(doc[i]);
  } else {
    std::vector<std::future<EntryOutcome>> futures;
    for (std::size_t i = 0; i < doc.size(); ++i)
      futures.push_back(std::async(std::launch::async, ingest_entry, std::cref(doc[i])));
    for (std::size_t i = 0; i < doc.size(); ++i) outcomes[i] = futures[i].get();
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    for (auto& w : o.warnings) report.warnings.push_back({i, o.name, std::move(w)});
    if (o.entry) {
      report.entries.push_back(std::move(*o.entry));
    } else {
      report.errors.push_back({i, o.name, o.error});
    }
  }
  return report;
}

IngestReport ingest_catalog_file(const std::string& path, int jobs) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  return ingest_catalog(in, jobs);
}

}  // namespace latcol
