#include "latcol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "latcol/catalog.hpp"
#include "latcol/driver.hpp"
#include "latcol/json_io.hpp"
#include "latcol/svg.hpp"
#include "latcol/verify.hpp"

namespace latcol {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string basis_file;
  std::string builtin_name;
  std::string lattice_file;
};

BasisGraph load_basis(const Source& src) {
  if (!src.builtin_name.empty()) return builtin(src.builtin_name).basis;
  return basis_from_json(read_json_file(src.basis_file));
}

GeometricLattice load_lattice(const Source& src) {
  if (!src.builtin_name.empty()) return builtin(src.builtin_name).lattice;
  const auto report = ingest_catalog_file(src.lattice_file);
  if (!report.errors.empty()) throw BadInput(src.lattice_file + ": " + report.errors.front().message);
  if (report.entries.empty()) throw BadInput(src.lattice_file + ": no catalog entries");
  return report.entries.front().lattice;
}

ColoredPatch load_coloring(const std::string& path) { return colored_patch_from_json(read_json_file(path)); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadInput("cannot write " + path);
  f << text;
}

struct ColorArgs {
  Source src;
  int type = 1;
  std::string engine = "auto";
  std::vector<int> initial;
  std::optional<int> max_area;
  std::optional<std::uint64_t> budget;
  bool algorithm1 = false;
  int jobs = 1;
  bool timing = false;
  bool quiet = false;
  std::string output;
};

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  const BasisGraph b = load_basis(a.src);
  ColoringResult r;
  if (a.algorithm1) {
    r = algorithm1(b);
  } else {
    ColoringRequest req;
    req.t = a.type;
    req.engine = *parse_engine(a.engine);
    if (!a.initial.empty()) req.initial = PatchSize{a.initial[0], a.initial[1]};
    req.max_area = a.max_area;
    req.step_budget = a.budget;
    req.jobs = a.jobs;
    try {
      r = color_lattice(b, req);
    } catch (const InvalidBasis&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!a.quiet) {
    for (const auto& w : r.stats.warnings) err << "warning: " << w << '\n';
    for (const auto& at : r.stats.attempts) {
      const std::string size = std::to_string(at.size.n) + "x" + std::to_string(at.size.m);
      for (const auto& e : at.self_loops) err << "rejected " << size << ": self-loop " << e << '\n';
      if (at.outcome != AttemptOutcome::kSelfLoops)
        err << size << ": " << to_string(at.outcome) << " (" << to_string(at.engine) << ")\n";
    }
  }
  emit(to_json(r, a.timing).dump(2) + "\n", a.output, out);
  if (!r.ok()) {
    if (!a.quiet) err << "area exhausted: no coloring found within the area cap\n";
    return kExitAreaExhausted;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string coloring;
  Source src;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const ColoredPatch c = load_coloring(a.coloring);
  bool bad = false;
  for (const auto& p : finite_patch_problems(c)) {
    out << nlohmann::json{{"kind", "finite"}, {"message", p}}.dump() << '\n';
    bad = true;
  }
  if (bad) {
    err << "coloring rejected: the colored patch is not a proper finite coloring\n";
    return kExitConflicts;
  }
  if (!a.src.basis_file.empty() || !a.src.builtin_name.empty()) {
    const auto cov = check_covers_patch(c, load_basis(a.src));
    for (const auto& e : cov.missing)
      out << nlohmann::json{{"kind", "missing-edge"}, {"edge", {to_json(e.a), to_json(e.b)}}}.dump() << '\n';
    for (const auto& e : cov.extra)
      out << nlohmann::json{{"kind", "extra-edge"}, {"edge", {to_json(e.a), to_json(e.b)}}}.dump() << '\n';
    bad = !cov.ok();
  }
  const auto report = check_induced(c, a.jobs);
  for (const auto& conflict : report.conflicts) out << to_json(conflict).dump() << '\n';
  if (bad || !report.ok()) {
    err << "verification failed: " << report.conflicts.size() << " conflict(s)\n";
    return kExitConflicts;
  }
  err << "ok: the induced lattice coloring is proper\n";
  return kExitOk;
}

struct ExpandArgs {
  std::string coloring;
  int N = 1;
  int M = 1;
  std::string output;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  emit(to_json(expand(load_coloring(a.coloring), a.N, a.M)).dump(2) + "\n", a.output, out);
  return kExitOk;
}

struct RenderArgs {
  std::string coloring;
  Source src;
  int N = 1;
  int M = 1;
  double scale = 40.0;
  std::string output;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const ColoredPatch c = load_coloring(a.coloring);
  const GeometricLattice l = load_lattice(a.src);
  SvgOptions opt;
  opt.scale = a.scale;
  const std::string svg = a.N == 1 && a.M == 1 ? render_svg(c, l, opt) : render_svg(expand(c, a.N, a.M), l, opt);
  emit(svg, a.output, out);
  return kExitOk;
}

struct CatalogArgs {
  bool list = false;
  std::string show;
  std::string ingest;
  int jobs = 1;
};

int cmd_catalog(const CatalogArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.show.empty()) {
    const CatalogEntry e = builtin(a.show);
    CatalogRecord rec{e.names, e.lattice, true, 1.0, e.expected_delta};
    nlohmann::json j = to_json(rec);
    j["basis"] = to_json(e.basis);
    if (e.expected_class) j["expected_class"] = to_string(*e.expected_class);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (!a.ingest.empty()) {
    const IngestReport report = ingest_catalog_file(a.ingest, a.jobs);
    for (const auto& w : report.warnings) err << "warning: entry " << w.index << " (" << w.name << "): " << w.message << '\n';
    for (const auto& e : report.errors) err << "error: entry " << e.index << " (" << e.name << "): " << e.message << '\n';
    for (const auto& e : report.entries)
      out << nlohmann::json{{"name", e.name()},
                            {"n_seeds", e.basis.n_seeds()},
                            {"edges", e.basis.edges().size()},
                            {"delta", lattice_max_degree(e.basis)}}
                 .dump()
          << '\n';
    return report.errors.empty() ? kExitOk : kExitBadInput;
  }
  for (const auto& name : builtin_names()) {
    const CatalogEntry e = builtin(name);
    out << name;
    for (std::size_t i = 1; i < e.names.size(); ++i) out << (i == 1 ? "  " : ", ") << e.names[i];
    out << '\n';
  }
  return kExitOk;
}

void add_source(CLI::App* cmd, Source& src, bool with_lattice_file) {
  auto* basis = with_lattice_file ? nullptr : cmd->add_option("--basis", src.basis_file, "Basis graph JSON file");
  auto* name = cmd->add_option("--builtin", src.builtin_name, "Built-in lattice name");
  auto* lattice =
      with_lattice_file ? cmd->add_option("--lattice", src.lattice_file, "Catalog JSON file with the geometry") : nullptr;
  auto* other = basis ? basis : lattice;
  other->excludes(name);
  name->excludes(other);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic edge colorings of lattice graphs", "latcol"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* c = app.add_subcommand("color", "Find a coloring basis graph");
  add_source(c, color.src, false);
  c->add_option("--type,-t", color.type, "1: at most delta colors, 2: at most delta+1, 3: any")
      ->check(CLI::Range(1, 3));
  c->add_option("--engine", color.engine, "Coloring engine")
      ->check(CLI::IsMember({"auto", "exact", "misra-gries", "greedy"}));
  c->add_option("--initial", color.initial, "Initial patch size N M")->expected(2);
  c->add_option("--max-area", color.max_area, "Largest patch area to try")->check(CLI::PositiveNumber);
  c->add_option("--budget", color.budget, "Step budget per exact search");
  c->add_flag("--algorithm1", color.algorithm1, "Single Misra-Gries pass at (2 dx_max + 1, 2 dy_max + 1)");
  c->add_option("--jobs,-j", color.jobs, "Patch sizes evaluated in parallel")->check(CLI::PositiveNumber);
  c->add_flag("--timing", color.timing, "Include wall time in the output");
  c->add_flag("--quiet,-q", color.quiet, "No diagnostics");
  c->add_option("--output,-o", color.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check that a colored patch induces a proper lattice coloring");
  v->add_option("--coloring", verify.coloring, "Coloring JSON file")->required();
  add_source(v, verify.src, false);
  v->add_option("--jobs,-j", verify.jobs, "Scanning threads")->check(CLI::PositiveNumber);

  ExpandArgs ex;
  auto* e = app.add_subcommand("expand", "Tile a colored patch N x M times");
  e->add_option("--coloring", ex.coloring, "Coloring JSON file")->required();
  e->add_option("-N", ex.N, "Copies along v1")->check(CLI::PositiveNumber);
  e->add_option("-M", ex.M, "Copies along v2")->check(CLI::PositiveNumber);
  e->add_option("--output,-o", ex.output, "Output file (default stdout)");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw a colored patch as SVG");
  r->add_option("--coloring", render.coloring, "Coloring JSON file")->required();
  add_source(r, render.src, true);
  r->add_option("-N", render.N, "Copies along v1")->check(CLI::PositiveNumber);
  r->add_option("-M", render.M, "Copies along v2")->check(CLI::PositiveNumber);
  r->add_option("--scale", render.scale, "Pixels per unit length")->check(CLI::PositiveNumber);
  r->add_option("--output,-o", render.output, "Output file (default stdout)");

  CatalogArgs cat;
  auto* k = app.add_subcommand("catalog", "List built-in lattices or ingest a catalog file");
  auto* list = k->add_flag("--list", cat.list, "List built-in lattices");
  auto* show = k->add_option("--show", cat.show, "Print a built-in entry as JSON");
  auto* ingest = k->add_option("--ingest", cat.ingest, "Catalog JSON file");
  list->excludes(show)->excludes(ingest);
  show->excludes(ingest);
  k->add_option("--jobs,-j", cat.jobs, "Entries ingested in parallel")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (c->parsed() && color.src.basis_file.empty() && color.src.builtin_name.empty())
      throw CLI::RequiredError("--basis or --builtin");
    if (r->parsed() && render.src.lattice_file.empty() && render.src.builtin_name.empty())
      throw CLI::RequiredError("--lattice or --builtin");
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_color(color, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (e->parsed()) return cmd_expand(ex, out);
    if (r->parsed()) return cmd_render(render, out);
    if (k->parsed()) return cmd_catalog(cat, out, err);
  } catch (const UsageError& ue) {
    err << "error: " << ue.what() << '\n';
    return kExitUsage;
  } catch (const UnknownLattice& ul) {
    err << "error: " << ul.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitBadInput;
  }
  return kExitUsage;
}

}  // namespace latcol
