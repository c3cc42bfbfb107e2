#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "striptopo/strip.hpp"

namespace striptopo {

enum class PointKind : std::uint8_t { Special, NonSpecialGlued, BoundaryLeaf };
std::string_view to_string(PointKind k);

/// The image in the leaf space of one interval-leaf: a glued pair or a lone boundary interval.
struct LeafPoint {
  std::string id;                    // gluing id, or interval id when unglued
  std::vector<std::string> members;  // 2 interval ids if glued, else 1
  std::vector<SideEnd> side_ends;    // one per member, same order
  std::optional<std::size_t> gluing;
  /// BoundaryLeaf is kept for unglued intervals even when the point is special;
  /// `special` carries the Hausdorff property on its own.
  PointKind kind = PointKind::NonSpecialGlued;
  bool special = false;
};

/// Combinatorial skeleton of the leaf space: one open arc per strip, one point per
/// interval class, and the side-end incidence that encodes the topology near each point.
class LeafSpace {
 public:
  const StripedSurface& surface() const noexcept { return *surface_; }
  std::size_t arc_count() const noexcept { return surface_->strip_count(); }
  const std::vector<LeafPoint>& points() const noexcept { return points_; }
  const LeafPoint& point(std::size_t i) const { return points_.at(i); }
  std::optional<std::size_t> find_point(std::string_view id) const;
  /// Point index owning the given interval.
  std::size_t point_of(const IntervalRef& ref) const;
  /// Points whose member intervals lie on `end`, in interval-index order.
  const std::vector<std::size_t>& incident(SideEnd end) const;
  const std::map<SideEnd, std::vector<std::size_t>>& incidence() const noexcept { return incidence_; }

 private:
  friend LeafSpace build_leaf_space(const StripedSurface&);

  std::shared_ptr<const StripedSurface> surface_;
  std::vector<LeafPoint> points_;
  std::map<SideEnd, std::vector<std::size_t>> incidence_;
  std::map<IntervalRef, std::size_t> owner_;
};

/// Keeps its own copy of the surface. Points are ordered gluings first
/// (in gluing order), then unglued intervals by (strip, side, index).
LeafSpace build_leaf_space(const StripedSurface& surface);

/// {point} plus every other point sharing one of its side-ends.
std::set<std::size_t> hausdorff_closure(const LeafSpace& ls, std::size_t point);
std::set<std::size_t> special_points(const LeafSpace& ls);

enum class ArcComponentType : std::uint8_t { OpenInterval, HalfClosed, Closed, Circle };
std::string_view to_string(ArcComponentType t);

struct ArcComponent {
  std::vector<std::size_t> arcs;    // strips, in walk order
  std::vector<std::size_t> joints;  // non-special glued points joining consecutive arcs
  std::vector<std::size_t> closed_ends;  // non-special boundary points
  ArcComponentType type = ArcComponentType::OpenInterval;
};

/// Connected components of the leaf space minus its special points.
std::vector<ArcComponent> arc_component_types(const LeafSpace& ls);

}  // namespace striptopo
