#include "latcol/json_io.hpp"

#include <cmath>
#include <fstream>

namespace latcol {

using nlohmann::json;

namespace {

int get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw JsonError(what + " must be an integer, got " + j.dump());
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw JsonError(what + " is out of range: " + j.dump());
  return static_cast<int>(v);
}

double get_real(const json& j, const std::string& what) {
  if (!j.is_number()) throw JsonError(what + " must be a number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw JsonError(what + " must be finite");
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw JsonError(std::string("field \"") + key + "\" must be an array");
  return a;
}

Vec2 vec_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw JsonError(what + " must be a pair [x, y]");
  return {get_real(j[0], what + ".x"), get_real(j[1], what + ".y")};
}

json to_json(Vec2 v) { return json::array({v.x, v.y}); }

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2) throw JsonError("edge must be [[dx,dy,s],[dx,dy,s]]: " + j.dump());
  return Edge(vertex_from_json(j[0]), vertex_from_json(j[1]));
}

json to_json(const Edge& e) { return json::array({to_json(e.a), to_json(e.b)}); }

json to_json(const ColoredEdge& e) { return json::array({to_json(e.edge.a), to_json(e.edge.b), e.color}); }

json colored_edges(const std::vector<ColoredEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(to_json(e));
  return out;
}

GeoEnd geo_end_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[1].is_array() || j[1].size() != 2)
    throw JsonError("edge end must be [seed, [a, b]]: " + j.dump());
  return {get_int(j[0], "seed index"), get_int(j[1][0], "cell offset"), get_int(j[1][1], "cell offset")};
}

json to_json(const GeoEnd& e) { return json::array({e.seed, json::array({e.a, e.b})}); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
}

json to_json(const CellVertex& v) { return json::array({v.dx, v.dy, v.s}); }

CellVertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw JsonError("vertex must be [dx, dy, s]: " + j.dump());
  return {get_int(j[0], "dx"), get_int(j[1], "dy"), get_int(j[2], "s")};
}

json to_json(const BasisGraph& b) {
  json vertices = json::array();
  for (const auto& v : b.vertices()) vertices.push_back(to_json(v));
  json edges = json::array();
  for (const auto& e : b.edges()) edges.push_back(to_json(e));
  return {{"n_seeds", b.n_seeds()}, {"vertices", vertices}, {"edges", edges}};
}

BasisGraph basis_from_json(const json& j) {
  const int n_seeds = get_int(field(j, "n_seeds"), "n_seeds");
  std::vector<Edge> edges;
  for (const auto& e : array_field(j, "edges")) edges.push_back(edge_from_json(e));
  if (!j.contains("vertices")) return BasisGraph::from_edges(n_seeds, std::move(edges));
  std::vector<CellVertex> vertices;
  for (const auto& v : array_field(j, "vertices")) vertices.push_back(vertex_from_json(v));
  return BasisGraph(n_seeds, std::move(vertices), std::move(edges));
}

json to_json(const ColoredPatch& c) {
  return {{"k", c.k}, {"n", c.n}, {"m", c.m}, {"n_seeds", c.n_seeds}, {"edges", colored_edges(c.edges)}};
}

ColoredPatch colored_patch_from_json(const json& j) {
  ColoredPatch c;
  c.k = get_int(field(j, "k"), "k");
  c.n = j.contains("n") ? get_int(j["n"], "n") : 1;
  c.m = j.contains("m") ? get_int(j["m"], "m") : 1;
  int max_seed = -1;
  for (const auto& item : array_field(j, "edges")) {
    if (!item.is_array() || item.size() != 3) throw JsonError("colored edge must be [[v],[v'],c]: " + item.dump());
    const Edge e = edge_from_json(item);
    c.edges.push_back({e, get_int(item[2], "color")});
    max_seed = std::max({max_seed, e.a.s, e.b.s});
  }
  c.n_seeds = j.contains("n_seeds") ? get_int(j["n_seeds"], "n_seeds") : max_seed + 1;
  if (c.n < 1 || c.m < 1) throw JsonError("n and m must be positive");
  return c;
}

json to_json(const ColoringResult& r, bool timing) {
  json out = to_json(r.coloring);
  out["status"] = r.ok() ? "colored" : "area-exhausted";
  out["n"] = r.n;
  out["m"] = r.m;
  out["t"] = r.t_achieved;
  out["t_requested"] = r.t_requested;
  out["k"] = r.k;
  out["delta"] = r.delta;

  json attempts = json::array();
  for (const auto& a : r.stats.attempts) {
    json item = {{"n", a.size.n}, {"m", a.size.m}, {"outcome", to_string(a.outcome)}};
    if (a.outcome != AttemptOutcome::kSelfLoops) {
      item["engine"] = to_string(a.engine);
      item["solver_steps"] = a.solver_steps;
    }
    if (!a.self_loops.empty()) {
      json loops = json::array();
      for (const auto& e : a.self_loops) loops.push_back(to_json(e));
      item["self_loops"] = loops;
    }
    if (a.colors > 0) item["colors"] = a.colors;
    attempts.push_back(item);
  }
  json stats = {{"patches_tried", r.stats.patches_tried()},
                {"self_loop_rejections", r.stats.self_loop_rejections},
                {"budget_events", r.stats.budget_events},
                {"solver_steps", r.stats.solver_steps},
                {"stage_steps", r.stats.stage_steps},
                {"attempts", attempts}};
  if (!r.stats.warnings.empty()) stats["warnings"] = r.stats.warnings;
  if (timing) stats["wall_seconds"] = r.stats.wall_seconds;
  out["stats"] = stats;
  return out;
}

json to_json(const SuperPatch& s) {
  return {{"N", s.N},
          {"M", s.M},
          {"n", s.source.n},
          {"m", s.source.m},
          {"n_seeds", s.source.n_seeds},
          {"k", s.source.k},
          {"raw_edge_count", s.raw_edge_count},
          {"edges", colored_edges(s.edges)}};
}

json to_json(const InducedConflict& c) {
  return {{"kind", to_string(c.kind)},
          {"vertex", to_json(c.vertex)},
          {"first", to_json(c.first)},
          {"second", to_json(c.second)}};
}

json to_json(const WrappedPatch& w) {
  json vertices = json::array();
  for (const auto& v : w.vertices) vertices.push_back(to_json(v));
  json edges = json::array();
  json labels = json::array();
  for (std::size_t i = 0; i < w.graph.edges.size(); ++i) {
    edges.push_back(json::array({w.graph.edges[i].u, w.graph.edges[i].v}));
    labels.push_back(to_json(w.labels[i]));
  }
  return {{"n", w.n}, {"m", w.m}, {"vertices", vertices}, {"edges", edges}, {"labels", labels}};
}

CatalogRecord catalog_record_from_json(const json& j) {
  if (!j.is_object()) throw JsonError("catalog entry must be an object");
  CatalogRecord r;
  const json& name = field(j, "name");
  if (!name.is_string() || name.get<std::string>().empty()) throw JsonError("\"name\" must be a non-empty string");
  r.names.push_back(name.get<std::string>());
  if (j.contains("aliases")) {
    for (const auto& a : array_field(j, "aliases")) {
      if (!a.is_string()) throw JsonError("aliases must be strings");
      r.names.push_back(a.get<std::string>());
    }
  }
  r.lattice.v1 = vec_from_json(field(j, "v1"), "v1");
  r.lattice.v2 = vec_from_json(field(j, "v2"), "v2");
  std::size_t i = 0;
  for (const auto& s : array_field(j, "seeds")) r.lattice.seeds.push_back(vec_from_json(s, "seed " + std::to_string(i++)));
  if (j.contains("edges")) {
    r.has_edges = true;
    for (const auto& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw JsonError("edge must be [[i,[a,b]],[j,[c,d]]]: " + e.dump());
      r.lattice.edges.push_back({geo_end_from_json(e[0]), geo_end_from_json(e[1])});
    }
  }
  if (j.contains("bond_length")) {
    r.bond_length = get_real(j["bond_length"], "bond_length");
    if (r.bond_length <= 0) throw JsonError("bond_length must be positive");
  }
  if (j.contains("expected_delta")) r.expected_delta = get_int(j["expected_delta"], "expected_delta");
  return r;
}

json to_json(const CatalogRecord& r) {
  json out = {{"name", r.names.front()},
              {"aliases", std::vector<std::string>(r.names.begin() + 1, r.names.end())},
              {"v1", to_json(r.lattice.v1)},
              {"v2", to_json(r.lattice.v2)}};
  json seeds = json::array();
  for (const auto& s : r.lattice.seeds) seeds.push_back(to_json(s));
  out["seeds"] = seeds;
  if (r.has_edges) {
    json edges = json::array();
    for (const auto& e : r.lattice.edges) edges.push_back(json::array({to_json(e.p), to_json(e.q)}));
    out["edges"] = edges;
  }
  if (r.bond_length != 1.0) out["bond_length"] = r.bond_length;
  if (r.expected_delta) out["expected_delta"] = *r.expected_delta;
  return out;
}

}  // namespace latcol
