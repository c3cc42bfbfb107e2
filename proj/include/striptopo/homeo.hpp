#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "striptopo/level_map.hpp"
#include "striptopo/pl_function.hpp"

namespace striptopo {

/// PL increasing bijection of R with u(y_i) = q_i, affine between knots and unit-slope
/// translations outside them. Errors: NonIncreasingInput (y or q not strictly increasing,
/// sizes differ, or k = 0).
double uk_eval(double x, std::span<const double> y, std::span<const double> q);

/// phi(x, y) = (u_k(x; f_1(y), ..., f_k(y)), y) with q_i = f_i(s), and the identity for
/// y >= s. Graphs are checked for crossings at `samples` levels in (c, s].
/// Errors: GraphsIntersect, BadInterval (c >= s).
LevelMap rectify_finite(const std::vector<PLFunction>& funcs, double c, double s, std::size_t samples = 64);

struct Stage {
  PLFunction func;
  double level = 0.0;  // the graph lives over (c, level]
};

struct StageRectification {
  LevelMap map;
  /// Final x position of each input graph, in input order.
  std::vector<double> columns;
  /// Distinct stage levels, highest first.
  std::vector<double> levels;
};

/// Finite composition phi_m o ... o phi_1, one factor per distinct level, highest level
/// first. Factor k is the identity at and above its level. Exact inverse.
/// Errors: GraphsIntersect, BadInterval (a level <= c).
StageRectification rectify_stages(const std::vector<Stage>& stages, double c, std::size_t samples = 64);

/// H(x, y) = mu x + (1 - mu) g(x), mu = min(|y|/eps, 1), g(x) = (a+b)/2 + ((b-a)/pi) atan(x).
/// Errors: BadInterval (a >= b), BadEps (eps <= 0).
LevelMap shrink_leaf(double a, double b, double eps);

/// {alpha(y) <= x <= beta(y), c < y <= d}; `base` is (a, b) when both limits at c are finite.
struct Trapezoid {
  PLFunction alpha;
  PLFunction beta;
  double c = 0.0;
  double d = 1.0;
  std::optional<std::pair<double, double>> base;

  bool contains(Point p) const { return p.y > c && p.y <= d && alpha(p.y) <= p.x && p.x <= beta(p.y); }
  /// Closure: adds [a, b] x c when the base is finite.
  bool contains_closed(Point p) const;
};

/// Half-open trapezoid with base (a, b) x 0 under the graph of `clearance`, built on the
/// dyadic points a_i = a + (b-a) 2^{-i-2}, b_i = b - (b-a) 2^{-i-2} with r_i = min(clearance)/2
/// on [a_i, b_i], forced strictly decreasing. The upper base is [a_0, b_0] at level r_1.
/// Depth grows on its own when the last segment would cross the clearance.
/// Errors: NonPositiveClearance, BadInterval.
Trapezoid trapezoid_under_clearance(const PLFunction& clearance, double a, double b, std::size_t depth);

/// Trapezoid from level functions, with base read off as the limits at c.
Trapezoid make_trapezoid(PLFunction alpha, PLFunction beta, double c, double d);

/// Level-preserving extension xi of a roof map: affine in x on each level, level y -> sigma(y).
/// Errors: LevelRangeMismatch (sigma does not send (c, d] of source onto target's).
LevelMap roof_homeo(const Trapezoid& source, const Trapezoid& target, const PLFunction& sigma);

}  // namespace striptopo
