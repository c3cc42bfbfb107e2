#include "striptopo/decomposition.hpp"

#include <algorithm>
#include <map>

#include "striptopo/error.hpp"

namespace striptopo {

std::string_view to_string(CutMode m) { return m == CutMode::Interior ? "interior" : "with-boundary"; }

std::string_view to_string(ComponentType t) {
  switch (t) {
    case ComponentType::OpenStrip: return "OpenStrip";
    case ComponentType::HalfClosedStrip: return "HalfClosedStrip";
    case ComponentType::ClosedStrip: return "ClosedStrip";
    case ComponentType::Cylinder: return "Cylinder";
    case ComponentType::Moebius: return "Moebius";
  }
  return "?";
}

int orientation_sign(Orientation o) { return o == Orientation::Preserving ? 1 : -1; }

int side_sign(const StripedSurface& surface, const GluingSpec& g) {
  return surface.locate(g.first).side != surface.locate(g.second).side ? 1 : -1;
}

namespace {

struct MergeLink {
  SideEnd other;
  std::size_t gluing;
};

// The uncut gluing leaving `end`, if any. Uncut gluings are exactly the non-special
// ones, whose two side-ends each carry that single interval.
std::optional<MergeLink> merge_link(const LeafSpace& ls, SideEnd end) {
  const auto& pts = ls.incident(end);
  if (pts.size() != 1) return std::nullopt;
  const LeafPoint& pt = ls.point(pts[0]);
  if (pt.special || !pt.gluing) return std::nullopt;
  const SideEnd other = pt.side_ends[0] == end ? pt.side_ends[1] : pt.side_ends[0];
  return MergeLink{other, *pt.gluing};
}

Component walk_component(const LeafSpace& ls, std::size_t start, Side entry, std::vector<bool>& seen) {
  const StripedSurface& s = ls.surface();
  Component comp;
  comp.outer_lower = SideEnd{start, entry};
  ChainStrip cur{start, entry == Side::Upper, false};
  while (true) {
    seen[cur.strip] = true;
    comp.strips.push_back(cur);
    const Side in = cur.flipped ? Side::Upper : Side::Lower;
    const SideEnd exit{cur.strip, opposite(in)};
    const auto link = merge_link(ls, exit);
    if (!link) {
      comp.outer_upper = exit;
      return comp;
    }
    comp.interfaces.push_back(link->gluing);
    if (link->other == SideEnd{start, entry}) {
      comp.shape = ComponentShape::Cycle;
      comp.outer_lower.reset();
      return comp;
    }
    const bool flag_rev = s.gluings()[link->gluing].orientation == Orientation::Reversing;
    cur = ChainStrip{link->other.strip, link->other.side == Side::Upper, cur.reversed != flag_rev};
  }
}

}  // namespace

Decomposition decompose(const LeafSpace& ls, CutMode mode) {
  const StripedSurface& s = ls.surface();
  if (!is_connected(s)) throw Error(ErrorCode::DisconnectedSurface, "decompose needs a connected surface");

  Decomposition d;
  d.mode = mode;
  for (std::size_t p = 0; p < ls.points().size(); ++p) {
    const LeafPoint& pt = ls.point(p);
    if (pt.special || (mode == CutMode::WithBoundary && pt.kind == PointKind::BoundaryLeaf)) d.cut.insert(p);
  }

  std::vector<bool> seen(s.strip_count(), false);
  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    if (seen[i]) continue;
    for (Side side : {Side::Lower, Side::Upper}) {
      if (merge_link(ls, SideEnd{i, side})) continue;
      d.components.push_back(walk_component(ls, i, side, seen));
      break;
    }
  }
  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    if (!seen[i]) d.components.push_back(walk_component(ls, i, Side::Lower, seen));
  }
  return d;
}

int monodromy(const StripedSurface& surface, const Component& comp) {
  int sign = 1;
  for (std::size_t g : comp.interfaces) {
    const GluingSpec& spec = surface.gluings()[g];
    sign *= orientation_sign(spec.orientation) * side_sign(surface, spec);
  }
  return sign;
}

ComponentType classify_component(const LeafSpace& ls, const Component& comp, CutMode mode) {
  if (comp.shape == ComponentShape::Cycle) {
    return monodromy(ls.surface(), comp) > 0 ? ComponentType::Cylinder : ComponentType::Moebius;
  }
  if (mode == CutMode::WithBoundary) return ComponentType::OpenStrip;
  int closed = 0;
  for (const auto& end : {comp.outer_lower, comp.outer_upper}) {
    const auto& pts = ls.incident(*end);
    if (pts.size() == 1 && ls.point(pts[0]).kind == PointKind::BoundaryLeaf) ++closed;
  }
  return closed == 0 ? ComponentType::OpenStrip
                     : closed == 1 ? ComponentType::HalfClosedStrip : ComponentType::ClosedStrip;
}

bool is_orientable(const StripedSurface& surface) {
  const std::size_t n = surface.strip_count();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const GluingSpec& g : surface.gluings()) {
    const std::size_t a = surface.locate(g.first).strip;
    const std::size_t b = surface.locate(g.second).strip;
    const int eps = orientation_sign(g.orientation) * side_sign(surface, g);
    adj[a].emplace_back(b, eps);
    if (a != b) adj[b].emplace_back(a, eps);
  }
  std::vector<int> sign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto [w, eps] : adj[v]) {
        const int want = sign[v] * eps;
        if (sign[w] == 0) {
          sign[w] = want;
          stack.push_back(w);
        } else if (sign[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

TheoremCheck check_theorem_part1(const LeafSpace& ls, const Decomposition& d) {
  for (const Component& comp : d.components) {
    const ComponentType t = classify_component(ls, comp, d.mode);
    if (t != ComponentType::Cylinder && t != ComponentType::Moebius) continue;
    if (d.components.size() != 1) {
      return {false, "a " + std::string(to_string(t)) + " component coexists with other components"};
    }
    for (const LeafPoint& pt : ls.points()) {
      if (pt.special || pt.kind == PointKind::BoundaryLeaf) {
        return {false, "a " + std::string(to_string(t)) + " surface has special or boundary leaf '" + pt.id + "'"};
      }
    }
    return {true, std::string(to_string(t)) + " component equals the whole surface"};
  }
  return {true, "no cylinder or Moebius component"};
}

ComponentClosures component_closures(const LeafSpace& ls, const Component& comp) {
  if (comp.shape != ComponentShape::Chain) {
    throw Error(ErrorCode::NotAChain, "closures are defined for chain components only");
  }
  ComponentClosures out;
  out.lower.side = Side::Lower;
  out.upper.side = Side::Upper;
  out.lower.base_points = ls.incident(*comp.outer_lower);
  out.upper.base_points = ls.incident(*comp.outer_upper);
  for (std::size_t p : out.lower.base_points) {
    if (std::find(out.upper.base_points.begin(), out.upper.base_points.end(), p) != out.upper.base_points.end()) {
      out.overlap.insert(p);
    }
  }
  return out;
}

namespace {

std::vector<Interval> carried_side(const StripedSurface& s, SideEnd end, bool reversed, Side as) {
  std::vector<Interval> out(s.side(end).begin(), s.side(end).end());
  if (reversed) {
    std::reverse(out.begin(), out.end());
    for (Interval& iv : out) {
      if (iv.endpoints) iv.endpoints = Endpoints{-iv.endpoints->second, -iv.endpoints->first};
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].side = as;
    out[k].index = k;
  }
  return out;
}

}  // namespace

StripedSurface canonicalize(const StripedSurface& surface) {
  const LeafSpace ls = build_leaf_space(surface);
  const Decomposition d = decompose(ls, CutMode::Interior);

  if (d.components.size() == 1 && d.components[0].shape == ComponentShape::Cycle) {
    if (surface.strip_count() == 1) return surface;
    const Component& comp = d.components[0];
    const ModelStripSpec& first = surface.strip(comp.strips[0].strip);
    const Interval& lower = first.lower.at(0);
    const GluingSpec& g = surface.gluings()[*surface.gluing_of(lower.id)];
    Interval upper = surface.interval(*surface.partner(surface.locate(lower.id)));
    upper.side = Side::Upper;
    upper.index = 0;
    ModelStripSpec strip{first.id, {lower}, {upper}};
    const Orientation o = monodromy(surface, comp) > 0 ? Orientation::Preserving : Orientation::Reversing;
    return build_surface({strip}, {GluingSpec{g.id, lower.id, upper.id, o}});
  }

  std::vector<bool> interface(surface.gluings().size(), false);
  std::map<std::string, bool> reversed_interval;  // interval id -> its strip runs against the merged x axis
  std::vector<ModelStripSpec> strips;
  for (const Component& comp : d.components) {
    const ChainStrip& head = comp.strips.front();
    const ChainStrip& tail = comp.strips.back();
    for (std::size_t g : comp.interfaces) interface[g] = true;
    ModelStripSpec merged;
    merged.id = surface.strip(head.strip).id;
    merged.lower = carried_side(surface, *comp.outer_lower, head.reversed, Side::Lower);
    merged.upper = carried_side(surface, *comp.outer_upper, tail.reversed, Side::Upper);
    for (const Interval& iv : merged.lower) reversed_interval[iv.id] = head.reversed;
    for (const Interval& iv : merged.upper) reversed_interval[iv.id] = tail.reversed;
    strips.push_back(std::move(merged));
  }

  std::vector<GluingSpec> gluings;
  for (std::size_t g = 0; g < surface.gluings().size(); ++g) {
    if (interface[g]) continue;
    GluingSpec spec = surface.gluings()[g];
    if (reversed_interval.at(spec.first) != reversed_interval.at(spec.second)) {
      spec.orientation = toggled(spec.orientation);
    }
    gluings.push_back(std::move(spec));
  }
  return build_surface(std::move(strips), std::move(gluings));
}

}  // namespace striptopo
