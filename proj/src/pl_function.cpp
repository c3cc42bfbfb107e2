#include "striptopo/pl_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "striptopo/error.hpp"

namespace striptopo {

PLFunction::PLFunction(std::vector<double> breakpoints, std::vector<double> values, Tail left, Tail right)
    : xs_(std::move(breakpoints)), ys_(std::move(values)), left_(left), right_(right) {
  if (xs_.empty() || xs_.size() != ys_.size()) {
    throw Error(ErrorCode::BadInterval, "PL function needs matching, non-empty breakpoint and value lists");
  }
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (!(xs_[i] < xs_[i + 1])) throw Error(ErrorCode::NonIncreasingInput, "PL breakpoints must increase strictly");
  }
}

PLFunction PLFunction::constant(double c) { return PLFunction({0.0}, {c}); }

PLFunction PLFunction::affine(double slope, double intercept) {
  return PLFunction({0.0, 1.0}, {intercept, intercept + slope}, Tail::Linear, Tail::Linear);
}

double PLFunction::slope_left() const {
  if (left_ == Tail::Constant || xs_.size() < 2) return 0.0;
  return (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
}

double PLFunction::slope_right() const {
  const std::size_t n = xs_.size();
  if (right_ == Tail::Constant || n < 2) return 0.0;
  return (ys_[n - 1] - ys_[n - 2]) / (xs_[n - 1] - xs_[n - 2]);
}

double PLFunction::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front() + slope_left() * (x - xs_.front());
  if (x >= xs_.back()) return ys_.back() + slope_right() * (x - xs_.back());
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs_.begin());  // xs_[k-1] <= x < xs_[k]
  const double t = (x - xs_[k - 1]) / (xs_[k] - xs_[k - 1]);
  return ys_[k - 1] + t * (ys_[k] - ys_[k - 1]);
}

bool PLFunction::strictly_increasing() const {
  for (std::size_t i = 0; i + 1 < ys_.size(); ++i) {
    if (!(ys_[i] < ys_[i + 1])) return false;
  }
  if (xs_.size() == 1) return false;
  return left_ == Tail::Linear && right_ == Tail::Linear;
}

bool PLFunction::strictly_decreasing() const { return scaled(-1.0, 0.0).strictly_increasing(); }

double PLFunction::min_on(double a, double b) const {
  double m = std::min((*this)(a), (*this)(b));
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] > a && xs_[i] < b) m = std::min(m, ys_[i]);
  }
  return m;
}

double PLFunction::solve_increasing(double v) const {
  if (v <= ys_.front()) {
    const double s = slope_left();
    if (s <= 0.0) {
      if (v == ys_.front()) return xs_.front();
      throw Error(ErrorCode::OutOfDomain, "value below the range of the PL function");
    }
    return xs_.front() + (v - ys_.front()) / s;
  }
  if (v >= ys_.back()) {
    const double s = slope_right();
    if (s <= 0.0) {
      if (v == ys_.back()) return xs_.back();
      throw Error(ErrorCode::OutOfDomain, "value above the range of the PL function");
    }
    return xs_.back() + (v - ys_.back()) / s;
  }
  const auto it = std::upper_bound(ys_.begin(), ys_.end(), v);
  const std::size_t k = static_cast<std::size_t>(it - ys_.begin());
  const double t = (v - ys_[k - 1]) / (ys_[k] - ys_[k - 1]);
  return xs_[k - 1] + t * (xs_[k] - xs_[k - 1]);
}

PLFunction PLFunction::scaled(double scale, double shift) const {
  std::vector<double> ys = ys_;
  for (double& y : ys) y = scale * y + shift;
  return PLFunction(xs_, std::move(ys), left_, right_);
}

PLFunction PLFunction::reparametrized(double k, double m) const {
  if (!(k > 0.0)) throw Error(ErrorCode::OutOfDomain, "reparametrization must be increasing");
  std::vector<double> xs = xs_;
  for (double& x : xs) x = (x - m) / k;
  return PLFunction(std::move(xs), ys_, left_, right_);
}

PLFunction PLFunction::plus(const PLFunction& other) const {
  std::vector<double> xs = xs_;
  xs.insert(xs.end(), other.xs_.begin(), other.xs_.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> ys;
  for (double x : xs) ys.push_back((*this)(x) + other(x));
  // One extra point per linear end pins the tail slope of the sum.
  const Tail left = left_ == Tail::Constant && other.left_ == Tail::Constant ? Tail::Constant : Tail::Linear;
  const Tail right = right_ == Tail::Constant && other.right_ == Tail::Constant ? Tail::Constant : Tail::Linear;
  if (left == Tail::Linear) {
    const double x0 = xs.front() - 1.0;
    xs.insert(xs.begin(), x0);
    ys.insert(ys.begin(), (*this)(x0) + other(x0));
  }
  if (right == Tail::Linear) {
    const double x1 = xs.back() + 1.0;
    xs.push_back(x1);
    ys.push_back((*this)(x1) + other(x1));
  }
  return PLFunction(std::move(xs), std::move(ys), left, right);
}

}  // namespace striptopo
