// striptopo: command-line front end for striped surfaces.
//
// Exit codes: 0 success / isomorphic, 1 validation failure / not isomorphic / rejected
// input, 2 parse error, 3 usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "striptopo/canonical.hpp"
#include "striptopo/decomposition.hpp"
#include "striptopo/document.hpp"
#include "striptopo/error.hpp"
#include "striptopo/leaf_space.hpp"
#include "striptopo/realize.hpp"
#include "striptopo/render.hpp"
#include "striptopo/report.hpp"

namespace {

using namespace striptopo;

enum Exit { kOk = 0, kFail = 1, kParse = 2, kUsage = 3 };

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_validate(const std::string& file) {
  const StripedSurface s = load_surface(file);
  const ValidationReport report = validate_class_f(s);
  print(validation_json(s, report));
  return report.ok ? kOk : kFail;
}

int cmd_leafspace(const std::string& file, const std::string& format) {
  const LeafSpace ls = build_leaf_space(load_surface(file));
  if (format == "dot") {
    std::cout << render_dot(ls);
  } else {
    print(leaf_space_json(ls));
  }
  return kOk;
}

CutMode parse_mode(const std::string& mode) {
  return mode == "interior" ? CutMode::Interior : CutMode::WithBoundary;
}

int cmd_decompose(const std::string& file, const std::string& mode) {
  const LeafSpace ls = build_leaf_space(load_surface(file));
  print(decomposition_json(ls, decompose(ls, parse_mode(mode))));
  return kOk;
}

int cmd_canon(const std::string& file) {
  const StripedSurface c = canonicalize(load_surface(file));
  print(canonical_json(c, canonical_code(c)));
  return kOk;
}

int cmd_iso(const std::string& a_file, const std::string& b_file) {
  const StripedSurface a = canonicalize(load_surface(a_file));
  const StripedSurface b = canonicalize(load_surface(b_file));
  const CanonicalCode ca = canonical_code(a);
  const CanonicalCode cb = canonical_code(b);
  Json j;
  j["isomorphic"] = ca == cb;
  j["codes"] = {ca.text(), cb.text()};
  print(j);
  return ca == cb ? kOk : kFail;
}

int cmd_realize(const std::string& file, const std::string& strip_id, std::size_t samples, std::size_t depth,
                const std::string& side_opt) {
  const LeafSpace ls = build_leaf_space(load_surface(file));
  const auto strip = ls.surface().find_strip(strip_id);
  if (!strip) {
    std::cerr << "error: no strip '" << strip_id << "'\n";
    return kUsage;
  }
  const Decomposition d = decompose(ls, CutMode::WithBoundary);
  const Component* comp = nullptr;
  for (const Component& c : d.components) {
    for (const ChainStrip& cs : c.strips) {
      if (cs.strip == *strip) comp = &c;
    }
  }
  if (comp->shape != ComponentShape::Chain) {
    throw Error(ErrorCode::NotOpenStripComponent, "component of '" + strip_id + "' is a cylinder or Moebius band",
                {strip_id});
  }
  const ComponentClosures cl = component_closures(ls, *comp);
  bool upper = cl.upper.base_points.size() > cl.lower.base_points.size();
  if (side_opt == "lower") upper = false;
  if (side_opt == "upper") upper = true;
  RealizeOptions options;
  options.depth = depth;
  const HalfStripRealization r = realize_half_strip(ls, *comp, upper ? cl.upper : cl.lower, options);

  std::vector<Point> pts;
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (const ChartRectangle& rect : r.chart.rectangles) {
    for (std::size_t i = 1; i <= n; ++i) {
      pts.push_back({rect.a + (rect.b - rect.a) * static_cast<double>(i) / static_cast<double>(n + 1), -1.0});
    }
  }
  double lo = -1.0, hi = 1.0;
  for (const ChartRectangle& rect : r.chart.rectangles) {
    lo = std::min(lo, rect.a - 1.0);
    hi = std::max(hi, rect.b + 1.0);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const double y = -1.0 + static_cast<double>(j) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back({lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1), y});
    }
  }
  const std::vector<Point> out = r.eta.evaluate(pts);
  std::cout << "x_in,y_in,x_out,y_out,leaf_id\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::cout << g17(pts[i].x) << "," << g17(pts[i].y) << "," << g17(out[i].x) << "," << g17(out[i].y) << ","
              << r.leaf_of(out[i]) << "\n";
  }
  return kOk;
}

int cmd_render(const std::string& file, const std::string& format) {
  const StripedSurface s = load_surface(file);
  if (format == "dot") {
    std::cout << render_dot(build_leaf_space(s));
  } else {
    std::cout << render_svg(s);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Striped surfaces: validation, leaf spaces, decomposition, invariants, realization"};
  app.require_subcommand(1);

  std::string file, file_b, format, mode = "with-boundary", component, side = "auto";
  std::size_t samples = 8, depth = 3;

  auto* validate = app.add_subcommand("validate", "Check a surface document");
  validate->add_option("FILE", file)->required();

  auto* leafspace = app.add_subcommand("leafspace", "Leaf space as JSON or DOT");
  leafspace->add_option("FILE", file)->required();
  leafspace->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* decomp = app.add_subcommand("decompose", "Cut along special (and boundary) leaves");
  decomp->add_option("FILE", file)->required();
  decomp->add_option("--mode", mode, "interior or with-boundary")->check(CLI::IsMember({"interior", "with-boundary"}));

  auto* canon = app.add_subcommand("canon", "Canonical form and code");
  canon->add_option("FILE", file)->required();

  auto* iso = app.add_subcommand("iso", "Decide foliated-homeomorphism equivalence");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file_b)->required();

  auto* realize = app.add_subcommand("realize", "Sample the half-strip map of a component as CSV");
  realize->add_option("FILE", file)->required();
  realize->add_option("--component", component, "id of a strip in the component")->required();
  realize->add_option("--samples", samples, "samples per axis")->check(CLI::Range(2, 10000));
  realize->add_option("--depth", depth, "trapezoid depth")->check(CLI::Range(1, 40));
  realize->add_option("--side", side, "closure side: lower, upper or auto")
      ->check(CLI::IsMember({"lower", "upper", "auto"}));

  auto* render = app.add_subcommand("render", "Strip diagram (SVG) or leaf space (DOT)");
  render->add_option("FILE", file)->required();
  render->add_option("--format", format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*leafspace) return cmd_leafspace(file, format.empty() ? "json" : format);
    if (*decomp) return cmd_decompose(file, mode);
    if (*canon) return cmd_canon(file);
    if (*iso) return cmd_iso(file, file_b);
    if (*realize) return cmd_realize(file, component, samples, depth, side);
    if (*render) return cmd_render(file, format.empty() ? "svg" : format);
  } catch (const ParseError& e) {
    print(error_json(e));
    return kParse;
  } catch (const Error& e) {
    print(error_json(e));
    return kFail;
  }
  return kUsage;
}
