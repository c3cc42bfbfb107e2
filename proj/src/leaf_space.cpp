#include "striptopo/leaf_space.hpp"

#include <algorithm>

namespace striptopo {

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::Special: return "Special";
    case PointKind::NonSpecialGlued: return "NonSpecialGlued";
    case PointKind::BoundaryLeaf: return "BoundaryLeaf";
  }
  return "?";
}

std::string_view to_string(ArcComponentType t) {
  switch (t) {
    case ArcComponentType::OpenInterval: return "OpenInterval";
    case ArcComponentType::HalfClosed: return "HalfClosed";
    case ArcComponentType::Closed: return "Closed";
    case ArcComponentType::Circle: return "Circle";
  }
  return "?";
}

std::optional<std::size_t> LeafSpace::find_point(std::string_view id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t LeafSpace::point_of(const IntervalRef& ref) const { return owner_.at(ref); }

const std::vector<std::size_t>& LeafSpace::incident(SideEnd end) const {
  static const std::vector<std::size_t> empty;
  auto it = incidence_.find(end);
  return it == incidence_.end() ? empty : it->second;
}

LeafSpace build_leaf_space(const StripedSurface& surface) {
  LeafSpace ls;
  ls.surface_ = std::make_shared<const StripedSurface>(surface);
  const StripedSurface& s = *ls.surface_;

  for (std::size_t g = 0; g < s.gluings().size(); ++g) {
    const GluingSpec& spec = s.gluings()[g];
    const IntervalRef a = s.locate(spec.first);
    const IntervalRef b = s.locate(spec.second);
    LeafPoint p;
    p.id = spec.id;
    p.members = {spec.first, spec.second};
    p.side_ends = {a.side_end(), b.side_end()};
    p.gluing = g;
    ls.owner_[a] = ls.points_.size();
    ls.owner_[b] = ls.points_.size();
    ls.points_.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    for (Side side : {Side::Lower, Side::Upper}) {
      for (const Interval& iv : s.strip(i).side(side)) {
        if (s.gluing_of(iv.id)) continue;
        LeafPoint p;
        p.id = iv.id;
        p.members = {iv.id};
        p.side_ends = {SideEnd{i, side}};
        p.kind = PointKind::BoundaryLeaf;
        ls.owner_[IntervalRef{i, side, iv.index}] = ls.points_.size();
        ls.points_.push_back(std::move(p));
      }
    }
  }

  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    for (Side side : {Side::Lower, Side::Upper}) {
      auto& list = ls.incidence_[SideEnd{i, side}];
      for (const Interval& iv : s.strip(i).side(side)) list.push_back(ls.owner_.at(IntervalRef{i, side, iv.index}));
    }
  }

  for (std::size_t p = 0; p < ls.points_.size(); ++p) {
    LeafPoint& pt = ls.points_[p];
    pt.special = hausdorff_closure(ls, p).size() > 1;
    if (pt.kind != PointKind::BoundaryLeaf) pt.kind = pt.special ? PointKind::Special : PointKind::NonSpecialGlued;
  }
  return ls;
}

std::set<std::size_t> hausdorff_closure(const LeafSpace& ls, std::size_t point) {
  std::set<std::size_t> out{point};
  for (const SideEnd& end : ls.point(point).side_ends) {
    const auto& cohabitants = ls.incident(end);
    out.insert(cohabitants.begin(), cohabitants.end());
  }
  return out;
}

std::set<std::size_t> special_points(const LeafSpace& ls) {
  std::set<std::size_t> out;
  for (std::size_t p = 0; p < ls.points().size(); ++p) {
    if (ls.point(p).special) out.insert(p);
  }
  return out;
}

namespace {

// What lies beyond one end of an arc once special points are removed.
struct EndLink {
  enum class Kind { Open, Closed, Joined } kind = Kind::Open;
  std::size_t point = 0;
  SideEnd other{};
};

EndLink link_at(const LeafSpace& ls, SideEnd end) {
  const auto& pts = ls.incident(end);
  if (pts.size() != 1 || ls.point(pts[0]).special) return {};
  const LeafPoint& pt = ls.point(pts[0]);
  if (pt.side_ends.size() == 1) return {EndLink::Kind::Closed, pts[0], {}};
  const SideEnd other = pt.side_ends[0] == end ? pt.side_ends[1] : pt.side_ends[0];
  return {EndLink::Kind::Joined, pts[0], other};
}

}  // namespace

std::vector<ArcComponent> arc_component_types(const LeafSpace& ls) {
  const std::size_t n = ls.arc_count();
  std::vector<bool> seen(n, false);
  std::vector<ArcComponent> out;

  auto walk = [&](std::size_t start, Side entry, ArcComponent& comp) {
    std::size_t arc = start;
    Side in = entry;
    while (true) {
      seen[arc] = true;
      comp.arcs.push_back(arc);
      const EndLink next = link_at(ls, SideEnd{arc, opposite(in)});
      if (next.kind == EndLink::Kind::Closed) comp.closed_ends.push_back(next.point);
      if (next.kind != EndLink::Kind::Joined) return false;
      comp.joints.push_back(next.point);
      if (next.other.strip == start && next.other.side == entry) return true;
      arc = next.other.strip;
      in = next.other.side;
    }
  };

  // Paths first: start from an arc end that is not joined to anything.
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    for (Side side : {Side::Lower, Side::Upper}) {
      const EndLink here = link_at(ls, SideEnd{a, side});
      if (here.kind == EndLink::Kind::Joined) continue;
      ArcComponent comp;
      if (here.kind == EndLink::Kind::Closed) comp.closed_ends.push_back(here.point);
      walk(a, side, comp);
      const std::size_t closed = comp.closed_ends.size();
      comp.type = closed == 0 ? ArcComponentType::OpenInterval
                              : closed == 1 ? ArcComponentType::HalfClosed : ArcComponentType::Closed;
      out.push_back(std::move(comp));
      break;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ArcComponent comp;
    walk(a, Side::Lower, comp);
    comp.type = ArcComponentType::Circle;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace striptopo
