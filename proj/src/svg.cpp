#include "latcol/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace latcol {

const std::array<const char*, 12>& svg_palette() {
  static const std::array<const char*, 12> palette = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                                      "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
                                                      "#808000", "#800000", "#469990", "#000075"};
  return palette;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Stroke {
  ColoredEdge edge;
  bool bold = false;
};

std::string draw(const std::vector<Stroke>& strokes, const GeometricLattice& l, const SvgOptions& opt) {
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  std::set<CellVertex> vertices;
  for (const auto& s : strokes)
    for (const auto& v : {s.edge.edge.a, s.edge.edge.b}) {
      const Vec2 p = position(l, v);
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
      vertices.insert(v);
    }
  if (strokes.empty()) min_x = min_y = max_x = max_y = 0.0;

  const double width = (max_x - min_x + 2 * opt.margin) * opt.scale;
  const double height = (max_y - min_y + 2 * opt.margin) * opt.scale;
  // SVG y grows downwards.
  const auto sx = [&](double x) { return (x - min_x + opt.margin) * opt.scale; };
  const auto sy = [&](double y) { return (max_y - y + opt.margin) * opt.scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
     << "<g stroke-linecap=\"round\">\n";
  for (const auto& s : strokes) {
    const Vec2 a = position(l, s.edge.edge.a);
    const Vec2 b = position(l, s.edge.edge.b);
    const auto& palette = svg_palette();
    const char* color = palette[static_cast<std::size_t>(s.edge.color) % palette.size()];
    os << "<line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\"" << num(sx(b.x)) << "\" y2=\""
       << num(sy(b.y)) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(s.bold ? 2 * opt.stroke : opt.stroke)
       << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#000000\">\n";
  for (const auto& v : vertices) {
    const Vec2 p = position(l, v);
    os << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\"" << num(1.5 * opt.stroke)
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void check_seeds(int n_seeds, const GeometricLattice& l) {
  if (n_seeds > static_cast<int>(l.seeds.size()))
    throw GeometryError("coloring uses " + std::to_string(n_seeds) + " seeds, lattice provides coordinates for " +
                        std::to_string(l.seeds.size()));
}

}  // namespace

std::string render_svg(const ColoredPatch& c, const GeometricLattice& l, const SvgOptions& opt) {
  check_seeds(c.n_seeds, l);
  std::vector<Stroke> strokes;
  for (const auto& e : c.edges) strokes.push_back({e, true});
  std::sort(strokes.begin(), strokes.end(), [](const Stroke& x, const Stroke& y) { return x.edge < y.edge; });
  return draw(strokes, l, opt);
}

std::string render_svg(const SuperPatch& s, const GeometricLattice& l, const SvgOptions& opt) {
  check_seeds(s.source.n_seeds, l);
  const std::set<ColoredEdge> source(s.source.edges.begin(), s.source.edges.end());
  std::vector<Stroke> strokes;
  for (const auto& e : s.edges) strokes.push_back({e, source.count(e) > 0});
  return draw(strokes, l, opt);
}

}  // namespace latcol
