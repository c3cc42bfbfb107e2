#include "striptopo/report.hpp"

#include "striptopo/document.hpp"
#include "striptopo/error.hpp"

namespace striptopo {

namespace {

Json side_end_json(const StripedSurface& s, SideEnd end) {
  Json j;
  j["strip"] = s.strip(end.strip).id;
  j["side"] = std::string(to_string(end.side));
  return j;
}

Json point_ids(const LeafSpace& ls, const auto& indices) {
  Json out = Json::array();
  for (std::size_t p : indices) out.push_back(ls.point(p).id);
  return out;
}

}  // namespace

Json validation_json(const StripedSurface& surface, const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok;
  j["strips"] = surface.strip_count();
  j["intervals"] = surface.interval_count();
  Json leaves = Json::array();
  for (const GluedLeafReport& g : report.glued_leaves) {
    Json jl;
    jl["gluing"] = g.gluing;
    jl["first"] = side_end_json(surface, g.first);
    jl["second"] = side_end_json(surface, g.second);
    jl["distinct_collars"] = g.distinct_collars;
    leaves.push_back(std::move(jl));
  }
  j["glued_leaves"] = std::move(leaves);
  j["components"] = report.components;
  j["warnings"] = report.warnings;
  j["notes"] = report.notes;
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["ok"] = false;
  j["rule"] = std::string(e.rule());
  j["message"] = e.what();
  j["ids"] = e.ids();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
  }
  return j;
}

Json leaf_space_json(const LeafSpace& ls) {
  const StripedSurface& s = ls.surface();
  Json j;
  Json arcs = Json::array();
  for (std::size_t i = 0; i < ls.arc_count(); ++i) {
    Json a;
    a["strip"] = s.strip(i).id;
    a["lower"] = point_ids(ls, ls.incident(SideEnd{i, Side::Lower}));
    a["upper"] = point_ids(ls, ls.incident(SideEnd{i, Side::Upper}));
    arcs.push_back(std::move(a));
  }
  j["arcs"] = std::move(arcs);
  Json points = Json::array();
  for (std::size_t p = 0; p < ls.points().size(); ++p) {
    const LeafPoint& pt = ls.point(p);
    Json jp;
    jp["id"] = pt.id;
    jp["members"] = pt.members;
    jp["kind"] = std::string(to_string(pt.kind));
    jp["special"] = pt.special;
    jp["hausdorff_closure"] = point_ids(ls, hausdorff_closure(ls, p));
    points.push_back(std::move(jp));
  }
  j["points"] = std::move(points);
  j["special"] = point_ids(ls, special_points(ls));
  Json comps = Json::array();
  for (const ArcComponent& c : arc_component_types(ls)) {
    Json jc;
    Json arcs_of = Json::array();
    for (std::size_t a : c.arcs) arcs_of.push_back(s.strip(a).id);
    jc["arcs"] = std::move(arcs_of);
    jc["joints"] = point_ids(ls, c.joints);
    jc["closed_ends"] = point_ids(ls, c.closed_ends);
    jc["type"] = std::string(to_string(c.type));
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  return j;
}

Json decomposition_json(const LeafSpace& ls, const Decomposition& d) {
  const StripedSurface& s = ls.surface();
  Json j;
  j["mode"] = std::string(to_string(d.mode));
  j["cut"] = point_ids(ls, d.cut);
  Json comps = Json::array();
  for (const Component& c : d.components) {
    Json jc;
    jc["shape"] = c.shape == ComponentShape::Chain ? "chain" : "cycle";
    jc["type"] = std::string(to_string(classify_component(ls, c, d.mode)));
    Json strips = Json::array();
    for (const ChainStrip& cs : c.strips) {
      Json x;
      x["strip"] = s.strip(cs.strip).id;
      x["flipped"] = cs.flipped;
      x["reversed"] = cs.reversed;
      strips.push_back(std::move(x));
    }
    jc["strips"] = std::move(strips);
    Json interfaces = Json::array();
    for (std::size_t g : c.interfaces) interfaces.push_back(s.gluings()[g].id);
    jc["interfaces"] = std::move(interfaces);
    if (c.shape == ComponentShape::Chain) {
      jc["outer_lower"] = side_end_json(s, *c.outer_lower);
      jc["outer_upper"] = side_end_json(s, *c.outer_upper);
      const ComponentClosures cl = component_closures(ls, c);
      Json closures;
      closures["lower"] = point_ids(ls, cl.lower.base_points);
      closures["upper"] = point_ids(ls, cl.upper.base_points);
      closures["overlap"] = point_ids(ls, cl.overlap);
      jc["closures"] = std::move(closures);
    } else {
      jc["monodromy"] = monodromy(s, c);
    }
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  const TheoremCheck check = check_theorem_part1(ls, d);
  j["theorem_part1"] = {{"pass", check.pass}, {"message", check.message}};
  j["orientable"] = is_orientable(s);
  return j;
}

Json canonical_json(const StripedSurface& canonical, const CanonicalCode& code) {
  Json j;
  j["code"] = code.text();
  j["surface"] = surface_to_json(canonical);
  return j;
}

}  // namespace striptopo
