#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "striptopo/decomposition.hpp"
#include "striptopo/homeo.hpp"
#include "striptopo/leaf_space.hpp"

namespace striptopo {

struct RealizeOptions {
  std::size_t depth = 3;     // dyadic depth of each trapezoid
  std::size_t samples = 64;  // crossing checks during rectification
  double shear = 0.0;        // phi(x, y) = (x + shear * (y + 1), y) on the open part
};

/// [a, b] x (-1, d] together with its base (a, b) x {-1}.
struct ChartRectangle {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
  std::size_t base_point = 0;            // LeafPoint index
  std::string leaf_id;
  std::pair<double, double> target;      // where the base lands: (2k, 2k+1) x {-1}
};

/// M = R x (-1, 0] plus the open bases of the rectangles.
struct HalfStripChart {
  std::vector<ChartRectangle> rectangles;

  bool contains(Point p) const;
};

struct HalfStripRealization {
  HalfStripChart chart;
  /// Pieces: "S<k>" for each rectangle with base, then "Z".
  LevelMap eta;
  /// Trapezoids T_k in the local coordinates N = (-1,1) x 0 u R x (0,1].
  std::vector<Trapezoid> trapezoids;
  std::string interior_prefix;  // id of the component's first strip

  /// Leaf of an image point: the base leaf id on level -1, "<prefix>@<level>" above it.
  /// Errors: OutOfDomain.
  std::string leaf_of(Point image) const;
};

/// Builds the chart of a half-closure of a chain component and the piecewise map
/// eta = psi_k o xi_k on each rectangle with base, phi o R^{-1} on Z, where R straightens
/// the trapezoids into rectangles. Errors: NotOpenStripComponent, GraphsIntersect.
HalfStripRealization realize_half_strip(const LeafSpace& ls, const Component& comp, const ClosureStrip& closure,
                                        const RealizeOptions& options = {});

}  // namespace striptopo
