#include "striptopo/topo_oracle.hpp"

#include <algorithm>

#include "striptopo/error.hpp"

namespace striptopo {

FiniteBasisSpace::FiniteBasisSpace(std::vector<OraclePoint> points, std::vector<std::vector<Region>> basis)
    : points_(std::move(points)), basis_(std::move(basis)) {
  if (basis_.size() != points_.size()) throw Error(ErrorCode::OutOfDomain, "one basis list per point is required");
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (basis_[p].empty()) throw Error(ErrorCode::OutOfDomain, "point " + points_[p].label + " has no basic set");
    for (const Region& r : basis_[p]) {
      if (!in_region(p, r)) throw Error(ErrorCode::OutOfDomain, "basic set misses its point " + points_[p].label);
    }
  }
}

std::optional<std::size_t> FiniteBasisSpace::leaf_index(std::size_t leaf) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].kind == OraclePointKind::Leaf && points_[i].leaf == leaf) return i;
  }
  return std::nullopt;
}

bool FiniteBasisSpace::in_region(std::size_t p, const Region& r) const {
  if (r.points.contains(p)) return true;
  const OraclePoint& pt = points_[p];
  if (pt.kind != OraclePointKind::Sample) return false;
  return std::any_of(r.windows.begin(), r.windows.end(),
                     [&](const ArcWindow& w) { return w.arc == pt.arc && w.lo < pt.t && pt.t < w.hi; });
}

bool FiniteBasisSpace::meets(const Region& a, const Region& b) const {
  for (std::size_t p : a.points) {
    if (in_region(p, b)) return true;
  }
  for (std::size_t p : b.points) {
    if (in_region(p, a)) return true;
  }
  for (const ArcWindow& u : a.windows) {
    for (const ArcWindow& v : b.windows) {
      if (u.arc == v.arc && std::max(u.lo, v.lo) < std::min(u.hi, v.hi)) return true;
    }
  }
  return false;
}

bool FiniteBasisSpace::subset(const Region& a, const Region& b) const {
  for (std::size_t p : a.points) {
    if (!in_region(p, b)) return false;
  }
  for (const ArcWindow& w : a.windows) {
    const bool inside = std::any_of(b.windows.begin(), b.windows.end(), [&](const ArcWindow& v) {
      return v.arc == w.arc && v.lo <= w.lo && w.hi <= v.hi;
    });
    if (!inside) return false;
  }
  return true;
}

FiniteBasisSpace discretize(const LeafSpace& ls, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::OutOfDomain, "discretization needs at least 3 samples per arc");
  const double h = 1.0 / static_cast<double>(n + 1);
  const StripedSurface& s = ls.surface();
  std::vector<OraclePoint> points;
  for (std::size_t arc = 0; arc < ls.arc_count(); ++arc) {
    for (std::size_t i = 1; i <= n; ++i) {
      OraclePoint p;
      p.kind = OraclePointKind::Sample;
      p.label = s.strip(arc).id + "#" + std::to_string(i);
      p.arc = arc;
      p.t = static_cast<double>(i) * h;
      points.push_back(std::move(p));
    }
  }
  const std::size_t leaf_base = points.size();
  for (std::size_t q = 0; q < ls.points().size(); ++q) {
    OraclePoint p;
    p.kind = OraclePointKind::Leaf;
    p.label = ls.point(q).id;
    p.leaf = q;
    points.push_back(std::move(p));
  }

  std::vector<std::vector<Region>> basis(points.size());
  for (std::size_t idx = 0; idx < leaf_base; ++idx) {
    const OraclePoint& p = points[idx];
    for (std::size_t r = 1; r <= n; ++r) {
      const double w = 0.4 * h + static_cast<double>(n - r) * h / 2.0;
      basis[idx].push_back(Region{{}, {ArcWindow{p.arc, std::max(0.0, p.t - w), std::min(1.0, p.t + w)}}});
    }
  }
  for (std::size_t q = 0; q < ls.points().size(); ++q) {
    for (std::size_t k = 1; k <= n; ++k) {
      const double tau = static_cast<double>(n + 1 - k) * h - h / 2.0;
      Region r;
      r.points.insert(leaf_base + q);
      for (const SideEnd& end : ls.point(q).side_ends) {
        if (end.side == Side::Lower) {
          r.windows.push_back(ArcWindow{end.strip, 0.0, tau});
        } else {
          r.windows.push_back(ArcWindow{end.strip, 1.0 - tau, 1.0});
        }
      }
      basis[leaf_base + q].push_back(std::move(r));
    }
  }
  return FiniteBasisSpace(std::move(points), std::move(basis));
}

std::set<std::size_t> closure_of(const FiniteBasisSpace& space, const std::set<std::size_t>& s) {
  std::set<std::size_t> out;
  for (std::size_t z = 0; z < space.size(); ++z) {
    const auto& nbhds = space.basis(z);
    const bool every = std::all_of(nbhds.begin(), nbhds.end(), [&](const Region& v) {
      return std::any_of(s.begin(), s.end(), [&](std::size_t p) { return space.in_region(p, v); });
    });
    if (every) out.insert(z);
  }
  return out;
}

std::set<std::size_t> closure_of(const FiniteBasisSpace& space, const Region& r) {
  std::set<std::size_t> out;
  for (std::size_t z = 0; z < space.size(); ++z) {
    const auto& nbhds = space.basis(z);
    if (std::all_of(nbhds.begin(), nbhds.end(), [&](const Region& v) { return space.meets(v, r); })) out.insert(z);
  }
  return out;
}

std::set<std::size_t> bnd_bruteforce(const FiniteBasisSpace& space, std::size_t p) {
  std::set<std::size_t> out;
  bool first = true;
  for (const Region& v : space.basis(p)) {
    const std::set<std::size_t> cl = closure_of(space, v);
    if (first) {
      out = cl;
      first = false;
      continue;
    }
    std::set<std::size_t> both;
    std::set_intersection(out.begin(), out.end(), cl.begin(), cl.end(), std::inserter(both, both.begin()));
    out = std::move(both);
  }
  return out;
}

std::vector<std::set<std::size_t>> bnd_table(const FiniteBasisSpace& space, Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(space.size());
  std::vector<std::set<std::size_t>> out(space.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t p = 0; p < n; ++p) out[p] = bnd_bruteforce(space, static_cast<std::size_t>(p));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t p = 0; p < n; ++p) out[p] = bnd_bruteforce(space, static_cast<std::size_t>(p));
  return out;
}

AxiomReport check_axioms(const FiniteBasisSpace& space, Exec exec) {
  AxiomReport report;
  const std::size_t n = space.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (closure_of(space, std::set<std::size_t>{p}) != std::set<std::size_t>{p}) {
      report.t1 = false;
      report.failures.push_back("T1: {" + space.point(p).label + "} is not closed");
    }
    const auto& nbhds = space.basis(p);
    for (std::size_t i = 0; i < nbhds.size(); ++i) {
      for (std::size_t j = i + 1; j < nbhds.size(); ++j) {
        const bool refined = std::any_of(nbhds.begin(), nbhds.end(), [&](const Region& w) {
          return space.subset(w, nbhds[i]) && space.subset(w, nbhds[j]);
        });
        if (!refined) {
          report.filtered = false;
          report.failures.push_back("filtered: basic sets " + std::to_string(i) + ", " + std::to_string(j) + " at " +
                                    space.point(p).label);
        }
      }
    }
  }
  const auto table = bnd_table(space, exec);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = y + 1; z < n; ++z) {
      if (table[y].contains(z) != table[z].contains(y)) {
        report.symmetric = false;
        report.failures.push_back("symmetry: " + space.point(y).label + " / " + space.point(z).label);
      }
    }
  }
  return report;
}

}  // namespace striptopo
