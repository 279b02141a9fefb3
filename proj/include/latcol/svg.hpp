#pragma once

#include <array>
#include <string>

#include "latcol/geometry.hpp"
#include "latcol/patch.hpp"
#include "latcol/verify.hpp"

namespace latcol {

/// Stroke colors; color c is drawn with svg_palette()[c % 12].
[[nodiscard]] const std::array<const char*, 12>& svg_palette();

struct SvgOptions {
  double scale = 40.0;   // pixels per length unit
  double margin = 0.75;  // length units around the drawing
  double stroke = 2.0;   // regular edge width; coloring-basis edges get twice this
};

/// Draws every edge of `c` as a bold line (it is its own coloring basis).
/// Throws GeometryError if a seed id has no coordinates in `l`.
[[nodiscard]] std::string render_svg(const ColoredPatch& c, const GeometricLattice& l, const SvgOptions& opt = {});

/// Draws the super patch; edges of the untranslated source copy are bold.
[[nodiscard]] std::string render_svg(const SuperPatch& s, const GeometricLattice& l, const SvgOptions& opt = {});

}  // namespace latcol
