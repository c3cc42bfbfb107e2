// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "process.hpp"
#include "striptopo/canonical.hpp"
#include "striptopo/decomposition.hpp"
#include "striptopo/document.hpp"
#include "striptopo/error.hpp"
#include "striptopo/homeo.hpp"
#include "striptopo/moves.hpp"
#include "striptopo/realize.hpp"
#include "striptopo/topo_oracle.hpp"

using namespace striptopo;
using striptopo::testkit::fixture;

namespace {

constexpr double kTol = 1e-9;

// Collects failed requirements of one criterion; keeps the first few messages.
struct Check {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  /// `what` is a string or a callable producing one, evaluated only on failure.
  template <typename M>
  void require(bool ok, M&& what) {
    ++checks;
    if (ok || failures.size() > 5) return;
    if (failures.size() == 5) {
      failures.emplace_back("...");
    } else if constexpr (std::is_invocable_v<M>) {
      failures.emplace_back(what());
    } else {
      failures.emplace_back(what);
    }
  }
  bool passed() const { return failures.empty(); }
};

std::set<std::string> ids(const LeafSpace& ls, const std::set<std::size_t>& pts) {
  std::set<std::string> out;
  for (std::size_t p : pts) out.insert(ls.point(p).id);
  return out;
}

bool non_separated(const LeafSpace& ls, const char* a, const char* b) {
  return hausdorff_closure(ls, *ls.find_point(a)).contains(*ls.find_point(b));
}

// 1. Worked example of five strips.
void criterion1(Check& c) {
  const LeafSpace ls = build_leaf_space(load_surface(fixture("kaplan5")));
  c.require(ids(ls, special_points(ls)) == std::set<std::string>{"alpha", "beta", "gamma", "delta"}, "special points");
  const std::vector<std::string> names{"alpha", "beta", "gamma", "delta"};
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (non_separated(ls, names[i].c_str(), names[j].c_str())) pairs.emplace(names[i], names[j]);
    }
  }
  const std::set<std::pair<std::string, std::string>> want{{"alpha", "beta"}, {"beta", "gamma"}, {"gamma", "delta"}};
  c.require(pairs == want, "non-separated pairs");

  const Decomposition d = decompose(ls, CutMode::WithBoundary);
  c.require(d.components.size() == 5, "five components");
  std::map<std::string, std::pair<std::size_t, std::size_t>> closure_sizes;
  for (const Component& comp : d.components) {
    c.require(classify_component(ls, comp, d.mode) == ComponentType::OpenStrip, "OpenStrip");
    const ComponentClosures cl = component_closures(ls, comp);
    const std::size_t lo = cl.lower.base_points.size(), up = cl.upper.base_points.size();
    closure_sizes[ls.surface().strip(comp.strips.front().strip).id] = {std::max(lo, up), std::min(lo, up)};
  }
  const std::map<std::string, std::pair<std::size_t, std::size_t>> want_sizes{
      {"A", {1, 0}}, {"B", {2, 0}}, {"C", {2, 0}}, {"D", {2, 0}}, {"E", {1, 0}}};
  c.require(closure_sizes == want_sizes, "closure base-leaf counts");
}

// 2. Cylinder and Moebius band; monodromy against the cell-orientation oracle.
void criterion2(Check& c) {
  for (auto [o, want] : {std::pair{Orientation::Preserving, ComponentType::Cylinder},
                         std::pair{Orientation::Reversing, ComponentType::Moebius}}) {
    const LeafSpace ls = build_leaf_space(testkit::standard_band(o));
    const Decomposition d = decompose(ls, CutMode::Interior);
    c.require(d.components.size() == 1 && classify_component(ls, d.components[0], d.mode) == want, "band type");
    c.require(check_theorem_part1(ls, d).pass, "theorem check on band");
  }
  std::size_t surfaces = 0, cycles = 0;
  testkit::enumerate_surfaces(3, 2, 7, [&](const StripedSurface& s) {
    ++surfaces;
    const bool oracle = testkit::cell_orientable(s);
    c.require(is_orientable(s) == oracle, [&] { return std::string("orientability: " + serialize_surface(s)); });
    if (!is_connected(s)) return;
    const LeafSpace ls = build_leaf_space(s);
    for (CutMode m : {CutMode::Interior, CutMode::WithBoundary}) {
      const Decomposition d = decompose(ls, m);
      c.require(check_theorem_part1(ls, d).pass, [&] { return std::string("theorem check: " + serialize_surface(s)); });
      for (const Component& comp : d.components) {
        if (comp.shape != ComponentShape::Cycle) continue;
        ++cycles;
        c.require((monodromy(s, comp) > 0) == oracle, [&] { return std::string("monodromy: " + serialize_surface(s)); });
        c.require(classify_component(ls, comp, m) == (oracle ? ComponentType::Cylinder : ComponentType::Moebius),
                  "cycle type");
      }
    }
  });
  c.require(surfaces > 100000 && cycles > 100, "enumeration size " + std::to_string(surfaces) + ", cycles " + std::to_string(cycles));
}

// 3. Combinatorial Hausdorff closure against the brute-force finite topology.
void criterion3(Check& c) {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const StripedSurface s = testkit::random_surface(rng, {1, 6, 4, 0.7, false, false});
    const LeafSpace ls = build_leaf_space(s);
    for (std::size_t n : {3u, 5u, 8u}) {
      const FiniteBasisSpace sp = discretize(ls, n);
      const auto table = bnd_table(sp);
      for (std::size_t p = 0; p < ls.points().size(); ++p) {
        std::set<std::size_t> restricted;
        for (std::size_t z : table[*sp.leaf_index(p)]) {
          if (sp.point(z).kind == OraclePointKind::Leaf) restricted.insert(sp.point(z).leaf);
        }
        c.require(restricted == hausdorff_closure(ls, p), [&] { return std::string("bnd mismatch: " + serialize_surface(s)); });
      }
      for (std::size_t z = 0; z < sp.size(); ++z) {
        if (sp.point(z).kind == OraclePointKind::Sample) c.require(table[z].size() == 1, "sample bnd not singleton");
      }
      const AxiomReport r = check_axioms(sp);
      c.require(r.t1 && r.symmetric, [&] { return std::string("axioms: " + serialize_surface(s)); });
    }
  }
}

// Strips of a component form a path (chain) or a cycle in the merge graph.
bool merge_walk_ok(const StripedSurface& s, const Component& comp) {
  const std::size_t k = comp.strips.size();
  const std::size_t links = comp.shape == ComponentShape::Chain ? k - 1 : k;
  if (comp.interfaces.size() != links) return false;
  for (std::size_t i = 0; i < links; ++i) {
    const GluingSpec& g = s.gluings()[comp.interfaces[i]];
    const std::set<std::size_t> ends{s.locate(g.first).strip, s.locate(g.second).strip};
    const std::set<std::size_t> want{comp.strips[i].strip, comp.strips[(i + 1) % k].strip};
    if (ends != want) return false;
  }
  return true;
}

// 4. Classification soundness on the random corpus.
void criterion4(Check& c) {
  std::mt19937 rng(77);
  const std::map<ComponentType, ArcComponentType> arc_of{
      {ComponentType::OpenStrip, ArcComponentType::OpenInterval},
      {ComponentType::HalfClosedStrip, ArcComponentType::HalfClosed},
      {ComponentType::ClosedStrip, ArcComponentType::Closed},
      {ComponentType::Cylinder, ArcComponentType::Circle},
      {ComponentType::Moebius, ArcComponentType::Circle}};
  for (int iter = 0; iter < 300; ++iter) {
    const StripedSurface s = testkit::random_surface(rng, {1, 6, 4, 0.8, true, false});
    const LeafSpace ls = build_leaf_space(s);
    for (CutMode m : {CutMode::Interior, CutMode::WithBoundary}) {
      const Decomposition d = decompose(ls, m);
      std::vector<int> seen(s.strip_count(), 0);
      std::multiset<ArcComponentType> from_decomposition;
      for (const Component& comp : d.components) {
        const ComponentType t = classify_component(ls, comp, m);
        if (m == CutMode::WithBoundary) {
          c.require(t == ComponentType::OpenStrip || t == ComponentType::Cylinder || t == ComponentType::Moebius,
                    "with-boundary type " + std::string(to_string(t)));
        }
        c.require(merge_walk_ok(s, comp), [&] { return std::string("merge walk: " + serialize_surface(s)); });
        for (const ChainStrip& cs : comp.strips) ++seen[cs.strip];
        from_decomposition.insert(arc_of.at(t));
      }
      for (int h : seen) c.require(h == 1, "strip in exactly one component");
      if (m == CutMode::Interior) {
        std::multiset<ArcComponentType> from_leaf_space;
        for (const ArcComponent& a : arc_component_types(ls)) from_leaf_space.insert(a.type);
        c.require(from_leaf_space == from_decomposition, "interior types vs leaf-space components");
      }
    }
  }
}

// 5. Invariant stability under moves; is_isomorphic against exhaustive search.
void criterion5(Check& c) {
  std::mt19937 rng(5150);
  for (const char* name : {"kaplan5", "kaplan5_mirror", "kaplan5_relabeled", "kaplan4", "cylinder", "moebius",
                           "moebius2", "horseshoe", "two_chain", "two_chain_merged", "open_strip", "closed_strip",
                           "endpoints"}) {
    const StripedSurface s = load_surface(fixture(name));
    const CanonicalCode raw = canonical_code(s);
    const CanonicalCode merged = canonical_code(canonicalize(s));
    for (int seq = 0; seq < 100; ++seq) {
      const StripedSurface m = testkit::random_moves(rng, s, 1 + rng() % 8);
      c.require(canonical_code(m) == raw, std::string("code changed under moves: ") + name);
      c.require(canonical_code(canonicalize(m)) == merged, std::string("merged code changed: ") + name);
    }
  }

  std::vector<StripedSurface> corpus;
  for (int iter = 0; iter < 70; ++iter) {
    const StripedSurface s = testkit::random_surface(rng, {1, 4, 3, 0.75, true, false});
    corpus.push_back(s);
    corpus.push_back(testkit::random_moves(rng, s, 5));
    if (!s.gluings().empty()) {
      // Near miss: one flag toggled.
      std::vector<GluingSpec> gs = s.gluings();
      auto& g = gs[rng() % gs.size()];
      g.orientation = toggled(g.orientation);
      corpus.push_back(build_surface(s.strips(), gs));
    }
  }
  std::size_t positives = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool oracle = testkit::oracle_isomorphic(corpus[i], corpus[j]);
      positives += oracle;
      c.require(is_isomorphic(corpus[i], corpus[j]) == oracle,
                "iso mismatch:\n" + serialize_surface(corpus[i]) + serialize_surface(corpus[j]));
    }
  }
  c.require(positives >= 70, "too few isomorphic pairs: " + std::to_string(positives));
}

// 6. Homeo engine numerics.
void criterion6(Check& c) {
  c.require(uk_eval(5, std::vector<double>{2}, std::vector<double>{0}) == 3.0, "uk worked value 1");
  c.require(uk_eval(3, std::vector<double>{1, 5}, std::vector<double>{0, 2}) == 1.0, "uk worked value 2");
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t k = 1 + rng() % 5;
    std::vector<double> y, q;
    while (y.size() < k) y.push_back(u(rng));
    while (q.size() < k) q.push_back(u(rng));
    std::sort(y.begin(), y.end());
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(y.begin(), y.end()) != y.end() || std::adjacent_find(q.begin(), q.end()) != q.end()) continue;
    for (std::size_t j = 0; j < k; ++j) c.require(uk_eval(y[j], y, q) == q[j], "(c) u(y_i) = q_i");
    double a = 2 * u(rng), b = 2 * u(rng);
    if (a > b) std::swap(a, b);
    if (a < b) c.require(uk_eval(a, y, q) < uk_eval(b, y, q), "(a) increasing");
    c.require(uk_eval(a, y, y) == a, "(b) identity");
  }

  const std::vector<PLFunction> funcs{
      PLFunction({0.0, 0.3, 1.0}, {0.0, 1.0, 0.5}, Tail::Linear, Tail::Linear),
      PLFunction({0.0, 0.6, 1.0}, {3.0, 2.0, 4.0}, Tail::Linear, Tail::Linear),
      PLFunction({0.0, 1.0}, {6.0, 9.0}, Tail::Linear, Tail::Linear)};
  const LevelMap phi = rectify_finite(funcs, 0.0, 1.0);
  for (int j = 1; j <= 1000; ++j) {
    const double y = j / 1000.0;
    for (const PLFunction& f : funcs) {
      const Point p = phi({f(y), y});
      c.require(std::abs(p.x - f(1.0)) <= kTol && p.y == y, "rectified graph vertical");
    }
  }
  for (double x = -5; x <= 15; x += 0.25) c.require(phi({x, 1.0}) == Point{x, 1.0}, "level s fixed");

  const double a = -1.0, b = 1.0, eps = 1.0;
  const LevelMap h = shrink_leaf(a, b, eps);
  c.require(std::abs(h({1.0, 0.0}).x - 0.5) <= kTol && h({1.0, 0.0}).y == 0.0, "shrink worked value");
  std::uniform_real_distribution<double> ux(-100, 100), uy(-2, 2);
  for (int i = 0; i < 10000; ++i) {
    const Point p{ux(rng), uy(rng)};
    const Point q = h(p);
    if (std::abs(p.y) >= eps) c.require(q == p, "shrink identity outside band");
    const double z = h({p.x, 0.0}).x;
    c.require(a < z && z < b, "level 0 into (a,b)");
    const Point back = h.inverse(q);
    c.require(std::abs(back.x - p.x) <= kTol && back.y == p.y, "shrink inverse");
  }

  const Trapezoid s = trapezoid_under_clearance(PLFunction({0.0, 0.5, 1.0}, {0.0, 0.5, 0.0}), 0.0, 1.0, 5);
  const Trapezoid t = trapezoid_under_clearance(PLFunction({2.0, 3.0, 6.0}, {0.0, 3.0, 0.0}), 2.0, 6.0, 3);
  const LevelMap xi = roof_homeo(s, t, PLFunction::affine(t.d / s.d, 0.0));
  for (int j = 1; j <= 1000; ++j) {
    const double y = s.d * j / 1000.0;
    const Point l = xi({s.alpha(y), y});
    const Point r = xi({s.beta(y), y});
    c.require(std::abs(l.x - t.alpha(l.y)) <= kTol && std::abs(r.x - t.beta(r.y)) <= kTol, "roof sides");
    const Point top = xi({s.alpha(s.d) + (s.beta(s.d) - s.alpha(s.d)) * j / 1000.0, s.d});
    c.require(std::abs(top.y - t.d) <= kTol && top.x >= t.alpha(t.d) - kTol && top.x <= t.beta(t.d) + kTol,
              "upper base");
  }
}

// 7. Realization of the half-closure of component B.
void criterion7(Check& c) {
  const LeafSpace ls = build_leaf_space(load_surface(fixture("kaplan5")));
  const Decomposition d = decompose(ls, CutMode::WithBoundary);
  const Component& comp = d.components.at(1);
  c.require(ls.surface().strip(comp.strips.front().strip).id == "B", "component B");
  const ComponentClosures cl = component_closures(ls, comp);
  const HalfStripRealization r = realize_half_strip(ls, comp, cl.upper);
  c.require(r.chart.rectangles.size() == 2, "two rectangles");

  const std::size_t z = r.eta.pieces().size() - 1;
  for (std::size_t i = 0; i < r.chart.rectangles.size(); ++i) {
    const ChartRectangle& rc = r.chart.rectangles[i];
    for (int j = 0; j <= 500; ++j) {
      const double y = -1.0 + (rc.d + 1.0) * j / 500.0;
      const double x = rc.a + (rc.b - rc.a) * j / 500.0;
      std::vector<Point> shared{{x, rc.d}};
      if (j > 0) {
        shared.push_back({rc.a, y});
        shared.push_back({rc.b, y});
      }
      for (const Point& p : shared) {
        const Point s = r.eta.eval_piece(i, p), w = r.eta.eval_piece(z, p);
        c.require(std::abs(s.x - w.x) <= kTol && std::abs(s.y - w.y) <= kTol, "pieces disagree on boundary");
      }
      if (j > 0 && j < 500) {
        const Point base = r.eta({x, -1.0});
        c.require(base.y == -1.0 && rc.target.first < base.x && base.x < rc.target.second, "base membership");
        c.require(r.leaf_of(base) == rc.leaf_id, "base leaf");
      }
    }
  }
  c.require(r.chart.rectangles[0].leaf_id == "alpha" && r.chart.rectangles[1].leaf_id == "beta", "leaf assignment");

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ux(-4.0, 8.0), uy(-1.0, 0.0);
  for (int i = 0; i < 1000; ++i) {
    const double y = uy(rng);
    if (y <= -1.0) continue;
    const Point p = r.eta({ux(rng), y}), q = r.eta({ux(rng), y});
    c.require(std::abs(p.y - y) <= kTol && r.leaf_of(p) == r.leaf_of(q), "level coherence");
  }
}

// 8. CLI exit codes and deterministic output.
void criterion8(Check& c) {
  using testkit::run_cli;
  auto fx = [](const char* n) { return fixture(n).string(); };
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"validate", fx("kaplan5")}, 0},
      {{"validate", fx("bad_sameside")}, 1},
      {{"validate", fx("bad_syntax")}, 2},
      {{"validate"}, 3},
      {{"bogus"}, 3},
      {{"iso", fx("kaplan5"), fx("kaplan5_mirror")}, 0},
      {{"iso", fx("kaplan5"), fx("kaplan4")}, 1},
      {{"decompose", fx("kaplan5"), "--mode", "with-boundary"}, 0},
      {{"decompose", fx("kaplan5"), "--mode", "sideways"}, 3},
      {{"realize", fx("kaplan5"), "--component", "B", "--samples", "5"}, 0},
  };
  for (const auto& [args, want] : cases) {
    c.require(run_cli(args).status == want, "exit code of '" + args[0] + "' != " + std::to_string(want));
  }
  for (const char* name : {"kaplan5", "kaplan5_mirror", "kaplan4", "cylinder", "moebius", "moebius2", "horseshoe",
                           "two_chain", "two_chain_merged", "open_strip", "closed_strip", "endpoints", "disconnected",
                           "bad_sameside", "bad_syntax"}) {
    for (std::vector<std::string> args : {std::vector<std::string>{"validate"},
                                          {"leafspace"},
                                          {"leafspace", "--format", "dot"},
                                          {"decompose"},
                                          {"decompose", "--mode", "interior"},
                                          {"canon"},
                                          {"render"},
                                          {"render", "--format", "dot"}}) {
      args.insert(args.begin() + 1, fx(name));
      const auto first = run_cli(args), second = run_cli(args);
      c.require(first.status == second.status && first.out == second.out && first.err == second.err,
                std::string("nondeterministic output: ") + name + " " + args[0]);
    }
  }
  const std::vector<std::string> realize{"realize", fx("kaplan5"), "--component", "C", "--samples", "6"};
  c.require(run_cli(realize).out == run_cli(realize).out, "realize output differs between runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"kaplan5 example reproduction", criterion1},  {"cylinder/Moebius and orientability", criterion2},
      {"oracle grounding", criterion3},            {"classification soundness", criterion4},
      {"invariant stability", criterion5},         {"homeo-engine numerics", criterion6},
      {"realization coherence", criterion7},       {"CLI contract", criterion8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%zu checks, %.2fs)\n", c.passed() ? "PASS" : "FAIL", i + 1,
                criteria[i].first, c.checks, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    failed += !c.passed();
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
