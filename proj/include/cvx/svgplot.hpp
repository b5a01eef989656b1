#pragma once

#include <string>

#include "cvx/polygon.hpp"

namespace cvx {

/// Self-contained SVG showing the polygon edges P1..PnP1, the dashed chord
/// P1Pn, the shaded half-space band on the polygon's side of the chord
/// (convex verdicts only), and labeled vertices. For NotConvex verdicts the
/// witness vertex is highlighted instead of shading a band. Output is a
/// pure function of the input.
std::string render_svg(const PointSeq& seq, const PolygonVerdict& verdict);

}  // namespace cvx
