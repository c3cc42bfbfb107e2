#include "striptopo/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace striptopo {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_dot(const LeafSpace& ls) {
  const StripedSurface& s = ls.surface();
  std::ostringstream out;
  out << "graph leafspace {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    out << "  " << dot_quote("strip:" + s.strip(i).id) << " [shape=box, label=" << dot_quote(s.strip(i).id)
        << "];\n";
  }
  for (const LeafPoint& p : ls.points()) {
    out << "  " << dot_quote("point:" + p.id) << " [shape=" << (p.special ? "doublecircle" : "circle")
        << ", label=" << dot_quote(p.id) << "];\n";
  }
  for (const LeafPoint& p : ls.points()) {
    for (const SideEnd& end : p.side_ends) {
      out << "  " << dot_quote("strip:" + s.strip(end.strip).id) << " -- " << dot_quote("point:" + p.id)
          << " [style=solid, label=" << dot_quote(std::string(to_string(end.side))) << "];\n";
    }
  }
  for (std::size_t p = 0; p < ls.points().size(); ++p) {
    for (std::size_t q : hausdorff_closure(ls, p)) {
      if (q <= p) continue;
      out << "  " << dot_quote("point:" + ls.point(p).id) << " -- " << dot_quote("point:" + ls.point(q).id)
          << " [style=dashed, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const StripedSurface& surface) {
  constexpr double kLeft = 40.0, kWidth = 400.0, kBand = 60.0, kGap = 30.0, kGroupGap = 50.0;

  struct Mark {
    double x = 0.0;
    double y = 0.0;
  };
  std::map<std::string, Mark> mid;  // interval id -> midpoint of its segment
  std::ostringstream body;

  double y = 20.0;
  const auto groups = strip_components(surface);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    body << "  <text x=\"" << num(kLeft) << "\" y=\"" << num(y + 12.0) << "\" class=\"component\">component "
         << gi << "</text>\n";
    y += 20.0;
    for (std::size_t i : groups[gi]) {
      const ModelStripSpec& st = surface.strip(i);
      const double top = y;
      const double bottom = y + kBand;
      body << "  <rect x=\"" << num(kLeft) << "\" y=\"" << num(top) << "\" width=\"" << num(kWidth)
           << "\" height=\"" << num(kBand) << "\" class=\"strip\"/>\n";
      body << "  <text x=\"" << num(kLeft + kWidth / 2.0) << "\" y=\"" << num(top + kBand / 2.0 + 4.0)
           << "\" text-anchor=\"middle\">" << xml_escape(st.id) << "</text>\n";
      for (Side side : {Side::Lower, Side::Upper}) {
        const auto& list = st.side(side);
        // SVG y grows downward: the lower side is the band's bottom edge.
        const double ey = side == Side::Lower ? bottom : top;
        const double slot = kWidth / static_cast<double>(std::max<std::size_t>(list.size(), 1));
        for (std::size_t k = 0; k < list.size(); ++k) {
          const Interval& iv = list[k];
          double x0 = kLeft + slot * static_cast<double>(k) + 0.2 * slot;
          double x1 = kLeft + slot * static_cast<double>(k + 1) - 0.2 * slot;
          const bool left_open = iv.endpoints && iv.endpoints->first.kind() == ExtRational::Kind::NegInf;
          const bool right_open = iv.endpoints && iv.endpoints->second.kind() == ExtRational::Kind::PosInf;
          if (left_open) x0 = kLeft;
          if (right_open) x1 = kLeft + kWidth;
          body << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(ey) << "\" x2=\"" << num(x1) << "\" y2=\""
               << num(ey) << "\" class=\"interval\"";
          if (left_open) body << " marker-start=\"url(#arrow)\"";
          if (right_open) body << " marker-end=\"url(#arrow)\"";
          body << "/>\n";
          const double label_y = side == Side::Lower ? ey + 14.0 : ey - 5.0;
          body << "  <text x=\"" << num((x0 + x1) / 2.0) << "\" y=\"" << num(label_y)
               << "\" text-anchor=\"middle\" class=\"label\">" << xml_escape(iv.id) << "</text>\n";
          mid[iv.id] = Mark{(x0 + x1) / 2.0, ey};
        }
      }
      y += kBand + kGap;
    }
    y += kGroupGap - kGap;
  }

  for (const GluingSpec& g : surface.gluings()) {
    const Mark a = mid.at(g.first);
    const Mark b = mid.at(g.second);
    const double bulge = kLeft + kWidth + 30.0 + 0.15 * std::abs(a.y - b.y);
    body << "  <path d=\"M " << num(a.x) << " " << num(a.y) << " C " << num(bulge) << " " << num(a.y) << ", "
         << num(bulge) << " " << num(b.y) << ", " << num(b.x) << " " << num(b.y) << "\" class=\"gluing "
         << to_string(g.orientation) << "\"/>\n";
    body << "  <text x=\"" << num(bulge - 4.0) << "\" y=\"" << num((a.y + b.y) / 2.0) << "\" class=\"label\">"
         << xml_escape(g.id) << "</text>\n";
  }

  const double width = kLeft + kWidth + 200.0;
  const double height = y + 20.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker>\n"
      << "    <style>\n"
      << "      .strip { fill: #eef3fb; stroke: #556; stroke-width: 1; }\n"
      << "      .interval { stroke: #000; stroke-width: 4; }\n"
      << "      .gluing { fill: none; stroke: #b33; stroke-width: 1.5; }\n"
      << "      .reversing { stroke-dasharray: 6 3; }\n"
      << "      .label { font-size: 10px; }\n"
      << "      text { font-family: Helvetica, sans-serif; font-size: 12px; }\n"
      << "    </style>\n"
      << "  </defs>\n";
  out << body.str();
  out << "</svg>\n";
  return out.str();
}

}  // namespace striptopo
