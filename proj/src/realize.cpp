#include "striptopo/realize.hpp"

#include <cstdio>
#include <memory>

#include "striptopo/error.hpp"

namespace striptopo {

namespace {

std::string level_text(double y) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", y);
  return buf;
}

double centre(std::size_t k) { return 2.0 * static_cast<double>(k) + 0.5; }

// Sides of phi^{-1} psi_k(T_k) in chart levels y = v - 1.
PLFunction chart_side(const PLFunction& side, double m, double shear) {
  std::vector<double> ys, xs;
  for (std::size_t j = 0; j < side.breakpoints().size(); ++j) {
    const double v = side.breakpoints()[j];
    ys.push_back(v - 1.0);
    xs.push_back(m + 0.5 * side.values()[j] - shear * v);
  }
  return PLFunction(std::move(ys), std::move(xs));
}

}  // namespace

bool HalfStripChart::contains(Point p) const {
  if (p.y > -1.0 && p.y <= 0.0) return true;
  if (p.y != -1.0) return false;
  for (const ChartRectangle& r : rectangles) {
    if (r.a < p.x && p.x < r.b) return true;
  }
  return false;
}

std::string HalfStripRealization::leaf_of(Point image) const {
  if (image.y > -1.0) return interior_prefix + "@" + level_text(image.y);
  if (image.y == -1.0) {
    for (const ChartRectangle& r : chart.rectangles) {
      if (r.target.first < image.x && image.x < r.target.second) return r.leaf_id;
    }
  }
  throw Error(ErrorCode::OutOfDomain, "point is not in the closed half-strip");
}

HalfStripRealization realize_half_strip(const LeafSpace& ls, const Component& comp, const ClosureStrip& closure,
                                        const RealizeOptions& options) {
  if (comp.shape != ComponentShape::Chain) {
    throw Error(ErrorCode::NotOpenStripComponent, "cylinder and Moebius components have no half-closures");
  }
  HalfStripRealization out;
  out.interior_prefix = ls.surface().strip(comp.strips.front().strip).id;
  const double shear = options.shear;
  const std::size_t k = closure.base_points.size();

  std::vector<Stage> stages;
  for (std::size_t i = 0; i < k; ++i) {
    const double h = 0.9 / static_cast<double>(i + 1);
    const PLFunction collar({-1.0, 0.0, 1.0}, {0.0, h, 0.0});
    Trapezoid t = trapezoid_under_clearance(collar, -1.0, 1.0, options.depth);
    const double d = t.d - 1.0;
    stages.push_back({chart_side(t.alpha, centre(i), shear), d});
    stages.push_back({chart_side(t.beta, centre(i), shear), d});
    out.trapezoids.push_back(std::move(t));
  }
  auto rect = std::make_shared<StageRectification>(rectify_stages(stages, -1.0, options.samples));

  struct Local {
    Trapezoid rectangle;
    LevelMap xi;
    double m;
  };
  auto locals = std::make_shared<std::vector<Local>>();
  for (std::size_t i = 0; i < k; ++i) {
    ChartRectangle r;
    r.a = rect->columns[2 * i];
    r.b = rect->columns[2 * i + 1];
    r.d = stages[2 * i].level;
    r.base_point = closure.base_points[i];
    r.leaf_id = ls.point(r.base_point).id;
    r.target = {2.0 * static_cast<double>(i), 2.0 * static_cast<double>(i) + 1.0};
    out.chart.rectangles.push_back(r);
    Trapezoid box = make_trapezoid(PLFunction::constant(r.a), PLFunction::constant(r.b), -1.0, r.d);
    LevelMap xi = roof_homeo(box, out.trapezoids[i], PLFunction::affine(1.0, 1.0));
    locals->push_back({std::move(box), std::move(xi), centre(i)});
  }

  std::vector<LevelMap::Piece> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    const ChartRectangle r = out.chart.rectangles[i];
    LevelMap::Piece piece;
    piece.name = "S" + std::to_string(i);
    piece.contains = [r](Point p) {
      if (p.y == -1.0) return r.a < p.x && p.x < r.b;
      return p.y > -1.0 && p.y <= r.d && r.a <= p.x && p.x <= r.b;
    };
    piece.forward = [locals, i](Point p) {
      const Local& l = (*locals)[i];
      const Point uv = l.xi(p);
      return Point{l.m + 0.5 * uv.x, uv.y - 1.0};
    };
    pieces.push_back(std::move(piece));
  }
  const std::vector<ChartRectangle> rects = out.chart.rectangles;
  LevelMap::Piece z;
  z.name = "Z";
  z.contains = [rects](Point p) {
    if (!(p.y > -1.0)) return false;
    for (const ChartRectangle& r : rects) {
      if (r.a < p.x && p.x < r.b && p.y < r.d) return false;
    }
    return true;
  };
  z.forward = [rect, shear](Point p) {
    const Point w = rect->map.inverse(p);
    return Point{w.x + shear * (w.y + 1.0), w.y};
  };
  pieces.push_back(std::move(z));

  auto inverse = [rect, locals, rects, shear](Point q) {
    if (q.y > -1.0) return rect->map(Point{q.x - shear * (q.y + 1.0), q.y});
    if (q.y == -1.0) {
      for (std::size_t i = 0; i < rects.size(); ++i) {
        if (rects[i].target.first < q.x && q.x < rects[i].target.second) {
          const Local& l = (*locals)[i];
          return l.xi.inverse(Point{2.0 * (q.x - l.m), 0.0});
        }
      }
    }
    throw Error(ErrorCode::OutOfDomain, "point is not in the closed half-strip");
  };
  out.eta = LevelMap(std::move(pieces), [](double y) { return y; }, inverse);
  return out;
}

}  // namespace striptopo
