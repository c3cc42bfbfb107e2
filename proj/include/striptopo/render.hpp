#pragma once

#include <string>

#include "striptopo/leaf_space.hpp"
#include "striptopo/strip.hpp"

namespace striptopo {

/// Strip nodes (boxes) and leaf-point nodes (ellipses, doubled when special); a solid edge
/// per incidence of a point on a side-end and a dashed edge per non-separated pair.
std::string render_dot(const LeafSpace& ls);

/// Stacked strip bands grouped by connected component, intervals as bold segments on
/// their side, gluings as curves between paired segments (dashed when reversing).
std::string render_svg(const StripedSurface& surface);

}  // namespace striptopo
