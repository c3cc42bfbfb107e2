#include "striptopo/homeo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>

#include "striptopo/error.hpp"

namespace striptopo {

namespace {

constexpr double kTol = 1e-9;

void check_increasing(std::span<const double> v, const char* what) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!(v[i] < v[i + 1])) {
      throw Error(ErrorCode::NonIncreasingInput, std::string(what) + " must be strictly increasing");
    }
  }
}

// u_k without validation; knots are already sorted.
double uk_raw(double x, std::span<const double> y, std::span<const double> q) {
  if (std::equal(y.begin(), y.end(), q.begin(), q.end())) return x;
  const std::size_t k = y.size();
  if (x <= y[0]) return x - y[0] + q[0];
  if (x >= y[k - 1]) return x - y[k - 1] + q[k - 1];
  const auto it = std::upper_bound(y.begin(), y.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - y.begin());  // y[i-1] <= x < y[i]
  return q[i - 1] + (q[i] - q[i - 1]) / (y[i] - y[i - 1]) * (x - y[i - 1]);
}

std::vector<double> sample_levels(double c, double s, std::size_t samples) {
  std::vector<double> out;
  const std::size_t n = std::max<std::size_t>(samples, 1);
  for (std::size_t j = 1; j <= n; ++j) out.push_back(c + (s - c) * static_cast<double>(j) / static_cast<double>(n));
  return out;
}

}  // namespace

double uk_eval(double x, std::span<const double> y, std::span<const double> q) {
  if (y.empty() || y.size() != q.size()) {
    throw Error(ErrorCode::NonIncreasingInput, "u_k needs k >= 1 knots and as many targets");
  }
  check_increasing(y, "knots y");
  check_increasing(q, "targets q");
  return uk_raw(x, y, q);
}

LevelMap rectify_finite(const std::vector<PLFunction>& funcs, double c, double s, std::size_t samples) {
  if (!(c < s)) throw Error(ErrorCode::BadInterval, "rectification needs c < s");
  if (funcs.empty()) return LevelMap();

  std::vector<std::size_t> order(funcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return funcs[i](s) < funcs[j](s); });
  std::vector<PLFunction> sorted;
  std::vector<double> q;
  for (std::size_t i : order) {
    sorted.push_back(funcs[i]);
    q.push_back(funcs[i](s));
  }
  for (double y : sample_levels(c, s, samples)) {
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      if (!(sorted[i](y) < sorted[i + 1](y))) {
        throw Error(ErrorCode::GraphsIntersect, "graphs meet or cross at level " + std::to_string(y));
      }
    }
  }

  auto knots = [sorted](double y) {
    std::vector<double> out;
    for (const PLFunction& f : sorted) out.push_back(f(y));
    return out;
  };
  auto forward = [knots, q, s](Point p) {
    if (p.y >= s) return p;
    const auto y = knots(p.y);
    return Point{uk_raw(p.x, y, q), p.y};
  };
  auto inverse = [knots, q, s](Point p) {
    if (p.y >= s) return p;
    const auto y = knots(p.y);
    return Point{uk_raw(p.x, q, y), p.y};
  };
  return LevelMap(forward, [](double y) { return y; }, inverse);
}

namespace {

struct StagePlan {
  std::vector<PLFunction> funcs;
  std::vector<double> depth;                 // d_j
  std::vector<double> levels;                // distinct, descending
  std::vector<std::vector<std::size_t>> knots;  // per stage: funcs with d_j >= level
  std::vector<std::vector<double>> q;        // per stage: targets, aligned with knots

  // Positions of all graphs at level y after the stages [0, upto) active at y.
  // When `trace` is set, records the sorted knot positions used by each active stage.
  std::vector<double> push(double y, std::size_t upto, double* x,
                           std::vector<std::pair<std::vector<double>, std::vector<double>>>* trace) const {
    std::vector<double> pos;
    for (const PLFunction& f : funcs) pos.push_back(f(y));
    for (std::size_t m = 0; m < upto; ++m) {
      if (!(y < levels[m])) continue;
      auto [ys, qs] = sorted_knots(m, pos);
      for (double& p : pos) p = uk_raw(p, ys, qs);
      if (x) *x = uk_raw(*x, ys, qs);
      if (trace) trace->emplace_back(std::move(ys), std::move(qs));
    }
    return pos;
  }

  std::pair<std::vector<double>, std::vector<double>> sorted_knots(std::size_t m, const std::vector<double>& pos) const {
    std::vector<std::size_t> idx(knots[m].size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pos[knots[m][a]] < pos[knots[m][b]]; });
    std::pair<std::vector<double>, std::vector<double>> out;
    for (std::size_t i : idx) {
      out.first.push_back(pos[knots[m][i]]);
      out.second.push_back(q[m][i]);
    }
    return out;
  }
};

}  // namespace

StageRectification rectify_stages(const std::vector<Stage>& stages, double c, std::size_t samples) {
  StageRectification out;
  if (stages.empty()) return out;

  auto plan = std::make_shared<StagePlan>();
  for (const Stage& st : stages) {
    if (!(st.level > c)) throw Error(ErrorCode::BadInterval, "stage level must lie above c");
    plan->funcs.push_back(st.func);
    plan->depth.push_back(st.level);
    plan->levels.push_back(st.level);
  }
  std::sort(plan->levels.begin(), plan->levels.end(), std::greater<>());
  plan->levels.erase(std::unique(plan->levels.begin(), plan->levels.end()), plan->levels.end());

  const std::size_t n = stages.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) {
      const double top = std::min(plan->depth[j], plan->depth[l]);
      int sign = 0;
      for (double y : sample_levels(c, top, samples)) {
        const double diff = plan->funcs[j](y) - plan->funcs[l](y);
        const int sg = diff > 0 ? 1 : diff < 0 ? -1 : 0;
        if (sg == 0 || (sign != 0 && sg != sign)) {
          throw Error(ErrorCode::GraphsIntersect,
                      "graphs " + std::to_string(j) + " and " + std::to_string(l) + " meet below level " +
                          std::to_string(top));
        }
        sign = sg;
      }
    }
  }

  out.columns.assign(n, 0.0);
  for (std::size_t m = 0; m < plan->levels.size(); ++m) {
    const double s = plan->levels[m];
    std::vector<std::size_t> knots;
    for (std::size_t j = 0; j < n; ++j) {
      if (plan->depth[j] >= s) knots.push_back(j);
    }
    const std::vector<double> pos = plan->push(s, m, nullptr, nullptr);
    std::vector<double> q;
    for (std::size_t j : knots) {
      q.push_back(pos[j]);
      if (plan->depth[j] == s) out.columns[j] = pos[j];
    }
    plan->knots.push_back(std::move(knots));
    plan->q.push_back(std::move(q));
  }
  out.levels = plan->levels;

  const std::size_t stage_count = plan->levels.size();
  auto forward = [plan, stage_count](Point p) {
    double x = p.x;
    plan->push(p.y, stage_count, &x, nullptr);
    return Point{x, p.y};
  };
  auto inverse = [plan, stage_count](Point p) {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> trace;
    plan->push(p.y, stage_count, nullptr, &trace);
    double x = p.x;
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) x = uk_raw(x, it->second, it->first);
    return Point{x, p.y};
  };
  out.map = LevelMap(forward, [](double y) { return y; }, inverse);
  return out;
}

LevelMap shrink_leaf(double a, double b, double eps) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorCode::BadInterval, "shrink_leaf needs finite a < b");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::BadEps, "shrink_leaf needs eps > 0");
  const double mid = 0.5 * (a + b);
  const double k = (b - a) / M_PI;
  auto forward = [=](Point p) {
    const double mu = std::min(std::abs(p.y) / eps, 1.0);
    if (mu >= 1.0) return p;
    return Point{mu * p.x + (1.0 - mu) * (mid + k * std::atan(p.x)), p.y};
  };
  return LevelMap(forward, [](double y) { return y; });
}

bool Trapezoid::contains_closed(Point p) const {
  if (contains(p)) return true;
  return base && p.y == c && base->first <= p.x && p.x <= base->second;
}

Trapezoid make_trapezoid(PLFunction alpha, PLFunction beta, double c, double d) {
  Trapezoid t{std::move(alpha), std::move(beta), c, d, std::nullopt};
  const double a = t.alpha(c);
  const double b = t.beta(c);
  if (std::isfinite(a) && std::isfinite(b) && a < b) t.base = std::make_pair(a, b);
  return t;
}

Trapezoid trapezoid_under_clearance(const PLFunction& clearance, double a, double b, std::size_t depth) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::BadInterval, "trapezoid base must be a finite interval a < b");
  }
  const double w = b - a;
  for (std::size_t D = std::max<std::size_t>(depth, 1); D <= 60; ++D) {
    std::vector<double> as, bs, r(D + 1, 0.0);
    for (std::size_t i = 0; i <= D; ++i) {
      const double off = w * std::ldexp(1.0, -static_cast<int>(i) - 2);
      as.push_back(a + off);
      bs.push_back(b - off);
    }
    for (std::size_t i = 1; i <= D; ++i) {
      const double m = clearance.min_on(as[i], bs[i]);
      if (!(m > 0.0)) {
        throw Error(ErrorCode::NonPositiveClearance,
                    "clearance is not positive on [" + std::to_string(as[i]) + ", " + std::to_string(bs[i]) + "]");
      }
      r[i] = i == 1 ? 0.5 * m : std::min(0.5 * m, 0.5 * r[i - 1]);
    }

    // Last segments run from (a_{D-1}, r_D) down to the base ends.
    const double xl = as[D - 1];
    const double xr = bs[D - 1];
    const double h = r[D];
    bool below = true;
    auto check = [&](double x, double height) {
      if (!(height < clearance(x))) below = false;
    };
    for (int j = 0; j <= 40 && below; ++j) {
      const double t = std::ldexp(1.0, -j);
      check(a + (xl - a) * t, h * t);
      check(b - (b - xr) * t, h * t);
    }
    for (double x : clearance.breakpoints()) {
      if (x > a && x < xl) check(x, h * (x - a) / (xl - a));
      if (x > xr && x < b) check(x, h * (b - x) / (b - xr));
    }
    if (!below) continue;

    std::vector<double> levels{0.0};
    std::vector<double> left{a};
    std::vector<double> right{b};
    for (std::size_t i = D; i >= 1; --i) {
      levels.push_back(r[i]);
      left.push_back(as[i - 1]);
      right.push_back(bs[i - 1]);
    }
    Trapezoid t{PLFunction(levels, left), PLFunction(levels, right), 0.0, r[1], std::make_pair(a, b)};
    return t;
  }
  throw Error(ErrorCode::NonPositiveClearance, "clearance decays too fast at the base ends");
}

LevelMap roof_homeo(const Trapezoid& source, const Trapezoid& target, const PLFunction& sigma) {
  if (!(sigma(source.c) < sigma(source.d)) || std::abs(sigma(source.c) - target.c) > kTol ||
      std::abs(sigma(source.d) - target.d) > kTol) {
    throw Error(ErrorCode::LevelRangeMismatch, "sigma must send (" + std::to_string(source.c) + ", " +
                                                   std::to_string(source.d) + "] onto (" + std::to_string(target.c) +
                                                   ", " + std::to_string(target.d) + "]");
  }
  auto forward = [source, target, sigma](Point p) {
    const double Y = sigma(p.y);
    const double al = source.alpha(p.y), be = source.beta(p.y);
    const double ga = target.alpha(Y), de = target.beta(Y);
    return Point{ga + (de - ga) / (be - al) * (p.x - al), Y};
  };
  auto inverse = [source, target, sigma](Point p) {
    const double y = sigma.strictly_increasing() ? sigma.solve_increasing(p.y)
                                                 : invert_increasing([&](double t) { return sigma(t); }, p.y, p.y);
    const double al = source.alpha(y), be = source.beta(y);
    const double ga = target.alpha(p.y), de = target.beta(p.y);
    return Point{al + (be - al) / (de - ga) * (p.x - ga), y};
  };
  return LevelMap(forward, [sigma](double y) { return sigma(y); }, inverse);
}

}  // namespace striptopo
