#include "striptopo/level_map.hpp"

#include <cmath>
#include <exception>

#include "striptopo/error.hpp"

namespace striptopo {

LevelMap::LevelMap()
    : forward_([](Point p) { return p; }), sigma_([](double y) { return y; }), inverse_([](Point p) { return p; }) {}

LevelMap::LevelMap(PointFn forward, LevelFn sigma, PointFn inverse)
    : forward_(std::move(forward)), sigma_(std::move(sigma)), inverse_(std::move(inverse)) {}

LevelMap::LevelMap(std::vector<Piece> pieces, LevelFn sigma, PointFn inverse)
    : sigma_(std::move(sigma)), inverse_(std::move(inverse)), pieces_(std::move(pieces)) {}

std::optional<std::size_t> LevelMap::piece_of(Point p) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].contains(p)) return i;
  }
  return std::nullopt;
}

Point LevelMap::operator()(Point p) const {
  if (forward_) return forward_(p);
  const auto i = piece_of(p);
  if (!i) {
    throw Error(ErrorCode::OutOfDomain,
                "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") lies in no piece");
  }
  return pieces_[*i].forward(p);
}

double invert_increasing(const std::function<double(double)>& f, double target, double guess) {
  double lo = guess - 1.0;
  double hi = guess + 1.0;
  double step = 1.0;
  for (int i = 0; f(lo) > target; ++i) {
    if (i > 64) throw Error(ErrorCode::OutOfDomain, "value below the range of the map");
    hi = lo;
    step *= 2.0;
    lo -= step;
  }
  step = 1.0;
  for (int i = 0; f(hi) < target; ++i) {
    if (i > 64) throw Error(ErrorCode::OutOfDomain, "value above the range of the map");
    lo = hi;
    step *= 2.0;
    hi += step;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo) - target) <= std::abs(f(hi) - target) ? lo : hi;
}

Point LevelMap::inverse(Point q) const {
  if (inverse_) return inverse_(q);
  const double y = invert_increasing(sigma_, q.y, q.y);
  const double x = invert_increasing([&](double t) { return (*this)(Point{t, y}).x; }, q.x, q.x);
  return {x, y};
}

std::vector<Point> LevelMap::evaluate(std::span<const Point> pts, Exec exec) const {
  std::vector<Point> out(pts.size());
  std::vector<std::exception_ptr> errors(pts.size());
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = (*this)(pts[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = (*this)(pts[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace striptopo
