#pragma once

#include <string>
#include <vector>

#include "circlefft/circle_geometry.hpp"

namespace circlefft {

// All dimensions in pixels; every field must be positive.
struct RenderStyle {
    double circle_radius = 100.0;
    double panel_gap = 60.0;
    double font_size = 14.0;
    double dot_radius = 3.0;
};

// Standalone SVG: one outlined circle per panel present in the input, one
// filled dot per distinct point, one text label per placement. Placements
// that share a point keep a single dot and stack their labels. A placement
// at angle a is drawn at (cx + r*cos(-a), cy - r*sin(-a)): display angles
// are negated so figures read counterclockwise. Output is byte-identical
// for identical inputs and references no external resources. Throws
// std::invalid_argument for empty input or a non-positive style dimension.
[[nodiscard]] std::string render_circle(const std::vector<CirclePlacement>& placements,
                                        const RenderStyle& style);

// The figure as a row: "A_k", the full circle, "=", the even half-size
// circle, then "+" or U+2212 with the twiddle label, then the odd circle.
[[nodiscard]] std::string render_decomposition(const DecompositionFigure& fig,
                                               const RenderStyle& style);

}  // namespace circlefft
