#pragma once

#include <cstdint>
#include <vector>

namespace striptopo {

enum class Tail : std::uint8_t { Linear, Constant };

/// Continuous piecewise-linear function of one variable. Outside the breakpoint range it
/// either continues the outermost segment (Linear) or holds the end value (Constant).
class PLFunction {
 public:
  PLFunction() : PLFunction({0.0}, {0.0}) {}
  /// Errors: NonIncreasingInput (breakpoints not strictly increasing), BadInterval (size mismatch or empty).
  PLFunction(std::vector<double> breakpoints, std::vector<double> values, Tail left = Tail::Constant,
             Tail right = Tail::Constant);

  static PLFunction constant(double c);
  static PLFunction affine(double slope, double intercept);

  double operator()(double x) const;

  const std::vector<double>& breakpoints() const noexcept { return xs_; }
  const std::vector<double>& values() const noexcept { return ys_; }
  Tail left_tail() const noexcept { return left_; }
  Tail right_tail() const noexcept { return right_; }

  bool strictly_increasing() const;
  bool strictly_decreasing() const;

  /// Exact minimum on [a, b]: attained at a, b or an interior breakpoint.
  double min_on(double a, double b) const;

  /// Solves f(x) = v for a strictly increasing function. Errors: OutOfDomain.
  double solve_increasing(double v) const;

  /// x -> scale * f(x) + shift.
  PLFunction scaled(double scale, double shift) const;
  /// x -> f(k * x + m) for k > 0.
  PLFunction reparametrized(double k, double m) const;
  /// Pointwise sum; breakpoints are merged. Tails are Linear unless both are Constant.
  PLFunction plus(const PLFunction& other) const;

 private:
  double slope_left() const;
  double slope_right() const;

  std::vector<double> xs_;
  std::vector<double> ys_;
  Tail left_ = Tail::Constant;
  Tail right_ = Tail::Constant;
};

}  // namespace striptopo
