#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "striptopo/exec.hpp"
#include "striptopo/leaf_space.hpp"

namespace striptopo {

/// Open parameter window (lo, hi) on one arc, arcs parametrized by (0, 1) from the
/// lower end to the upper end.
struct ArcWindow {
  std::size_t arc = 0;
  double lo = 0.0;
  double hi = 1.0;
};

/// A basic open set: explicitly listed points plus open arc windows.
struct Region {
  std::set<std::size_t> points;
  std::vector<ArcWindow> windows;
};

enum class OraclePointKind : std::uint8_t { Sample, Leaf, Abstract };

struct OraclePoint {
  OraclePointKind kind = OraclePointKind::Abstract;
  std::string label;
  std::size_t arc = 0;     // Sample only
  double t = 0.0;          // Sample only
  std::size_t leaf = 0;    // Leaf only: LeafPoint index
};

/// Finite point set with an explicit neighborhood basis. Regions are compared on their
/// continuous windows, which lets a finite sample carry the leaf space's topology.
class FiniteBasisSpace {
 public:
  FiniteBasisSpace() = default;
  FiniteBasisSpace(std::vector<OraclePoint> points, std::vector<std::vector<Region>> basis);

  std::size_t size() const noexcept { return points_.size(); }
  const OraclePoint& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Region>& basis(std::size_t i) const { return basis_.at(i); }
  /// Index of the oracle point standing for LeafPoint `leaf`, if any.
  std::optional<std::size_t> leaf_index(std::size_t leaf) const;

  bool in_region(std::size_t p, const Region& r) const;
  bool meets(const Region& a, const Region& b) const;
  /// a is contained in b: listed points are members of b, each window lies in one window of b.
  bool subset(const Region& a, const Region& b) const;

 private:
  std::vector<OraclePoint> points_;
  std::vector<std::vector<Region>> basis_;
};

/// n samples per arc (arc-major), then one point per LeafPoint. Samples sit at i/(n+1);
/// sample r-th windows have half-width 0.4h + (n-r)h/2 and the k-th tail at a side-end
/// reaches (n+1-k)h - h/2 into the arc, h = 1/(n+1). Errors: OutOfDomain (n < 3).
FiniteBasisSpace discretize(const LeafSpace& ls, std::size_t n = 5);

/// z is in the closure iff every basic set at z contains a point of s.
std::set<std::size_t> closure_of(const FiniteBasisSpace& space, const std::set<std::size_t>& s);
/// z is in the closure iff every basic set at z meets r.
std::set<std::size_t> closure_of(const FiniteBasisSpace& space, const Region& r);

/// Intersection of the closures of the basic sets at p.
std::set<std::size_t> bnd_bruteforce(const FiniteBasisSpace& space, std::size_t p);
/// bnd_bruteforce for every point.
std::vector<std::set<std::size_t>> bnd_table(const FiniteBasisSpace& space, Exec exec = Exec::Parallel);

struct AxiomReport {
  bool t1 = true;
  bool symmetric = true;
  bool filtered = true;
  std::vector<std::string> failures;

  bool ok() const noexcept { return t1 && symmetric && filtered; }
};

AxiomReport check_axioms(const FiniteBasisSpace& space, Exec exec = Exec::Parallel);

}  // namespace striptopo
