#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "striptopo/exec.hpp"

namespace striptopo {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Plane map sending each horizontal line y into the line sigma(y), increasing in x on
/// each level. Either one global evaluator or a list of pieces tried in order.
class LevelMap {
 public:
  using PointFn = std::function<Point(Point)>;
  using LevelFn = std::function<double(double)>;

  struct Piece {
    std::string name;
    std::function<bool(Point)> contains;
    PointFn forward;
  };

  /// The identity.
  LevelMap();
  LevelMap(PointFn forward, LevelFn sigma, PointFn inverse = {});
  LevelMap(std::vector<Piece> pieces, LevelFn sigma, PointFn inverse = {});

  /// Errors: OutOfDomain when no piece contains the point.
  Point operator()(Point p) const;
  /// Exact inverse when one was supplied, otherwise bisection on sigma and then on x.
  /// Errors: OutOfDomain.
  Point inverse(Point q) const;
  double sigma(double y) const { return sigma_(y); }
  bool has_exact_inverse() const noexcept { return static_cast<bool>(inverse_); }

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  std::optional<std::size_t> piece_of(Point p) const;
  /// Evaluates one piece's formula regardless of membership.
  Point eval_piece(std::size_t i, Point p) const { return pieces_.at(i).forward(p); }

  /// Batch forward evaluation. The first failing point (lowest index) rethrows.
  std::vector<Point> evaluate(std::span<const Point> pts, Exec exec = Exec::Parallel) const;

 private:
  PointFn forward_;
  LevelFn sigma_;
  PointFn inverse_;
  std::vector<Piece> pieces_;
};

/// Numeric inverse of a strictly increasing f, found by bracket doubling and bisection.
/// Errors: OutOfDomain when no bracket is found.
double invert_increasing(const std::function<double(double)>& f, double target, double guess = 0.0);

}  // namespace striptopo
