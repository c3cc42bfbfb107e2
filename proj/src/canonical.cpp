#include "striptopo/canonical.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include <omp.h>

#include "striptopo/decomposition.hpp"

namespace striptopo {

std::string CanonicalCode::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(tokens[i]);
  }
  return out;
}

namespace {

using Tokens = std::vector<std::uint32_t>;

struct Glue {
  bool glued = false;
  std::size_t strip = 0;
  Side side = Side::Lower;
  std::size_t index = 0;
  bool reversing = false;
};

// Dense copy of the surface: per strip, per side, per interval, what it is glued to.
struct Table {
  std::vector<std::array<std::vector<Glue>, 2>> glue;
  Tokens header;
};

Table make_table(const StripedSurface& s) {
  Table t;
  t.glue.resize(s.strip_count());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> profile;
  for (std::size_t i = 0; i < s.strip_count(); ++i) {
    for (Side side : {Side::Lower, Side::Upper}) {
      auto& out = t.glue[i][static_cast<int>(side)];
      for (const Interval& iv : s.strip(i).side(side)) {
        Glue g;
        if (const auto p = s.partner(IntervalRef{i, side, iv.index})) {
          g = Glue{true, p->strip, p->side, p->index,
                   s.gluings()[*s.gluing_of(iv.id)].orientation == Orientation::Reversing};
        }
        out.push_back(g);
      }
    }
    const auto a = static_cast<std::uint32_t>(s.strip(i).lower.size());
    const auto b = static_cast<std::uint32_t>(s.strip(i).upper.size());
    profile.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(profile.begin(), profile.end());
  t.header.push_back(static_cast<std::uint32_t>(s.strip_count()));
  t.header.push_back(static_cast<std::uint32_t>(s.gluings().size()));
  for (auto [a, b] : profile) {
    t.header.push_back(a);
    t.header.push_back(b);
  }
  return t;
}

struct Placement {
  std::size_t strip = 0;
  bool h = false;
  bool v = false;
};

class Search {
 public:
  explicit Search(const Table& t) : t_(t), n_(t.glue.size()), pos_(n_, kUnplaced) {}

  void place_root(Placement p) {
    cur_ = t_.header;
    descend(p, 0);
  }

  void run_all() {
    cur_ = t_.header;
    for (std::size_t s = 0; s < n_; ++s) {
      for (int f = 0; f < 4; ++f) descend(Placement{s, (f & 2) != 0, (f & 1) != 0}, 0);
    }
  }

  const std::optional<Tokens>& best() const { return best_; }
  void seed(const Tokens& bound) { best_ = bound; }

 private:
  static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

  // Interval `k` of oriented side `os` of a placed strip, as an index into the stored side.
  std::pair<Side, std::size_t> stored(const Placement& p, Side os, std::size_t k) const {
    const Side side = p.v ? opposite(os) : os;
    const std::size_t len = t_.glue[p.strip][static_cast<int>(side)].size();
    return {side, p.h ? len - 1 - k : k};
  }

  // Inverse of `stored`: where a stored interval appears once its strip is placed.
  std::pair<Side, std::size_t> oriented(const Placement& p, Side side, std::size_t idx) const {
    const Side os = p.v ? opposite(side) : side;
    const std::size_t len = t_.glue[p.strip][static_cast<int>(side)].size();
    return {os, p.h ? len - 1 - idx : idx};
  }

  void emit_block(const Placement& p, std::size_t position) {
    const auto& g = t_.glue[p.strip];
    const std::size_t lo = g[static_cast<int>(p.v ? Side::Upper : Side::Lower)].size();
    const std::size_t up = g[static_cast<int>(p.v ? Side::Lower : Side::Upper)].size();
    cur_.push_back(static_cast<std::uint32_t>(lo));
    cur_.push_back(static_cast<std::uint32_t>(up));
    for (Side os : {Side::Lower, Side::Upper}) {
      const std::size_t len = os == Side::Lower ? lo : up;
      for (std::size_t k = 0; k < len; ++k) {
        const auto [side, idx] = stored(p, os, k);
        const Glue& gl = g[static_cast<int>(side)][idx];
        if (!gl.glued) {
          cur_.push_back(0);
          continue;
        }
        const std::size_t q = gl.strip == p.strip ? position : pos_[gl.strip];
        if (q == kUnplaced) {
          cur_.push_back(2);
          continue;
        }
        const Placement& other = gl.strip == p.strip ? p : placed_[q];
        const auto [oside, oidx] = oriented(other, gl.side, gl.index);
        const bool flag = gl.reversing != (p.h != other.h);
        cur_.push_back(1);
        cur_.push_back(static_cast<std::uint32_t>(q));
        cur_.push_back(oside == Side::Lower ? 0u : 1u);
        cur_.push_back(static_cast<std::uint32_t>(oidx));
        cur_.push_back(flag ? 1u : 0u);
      }
    }
  }

  // -1: current prefix beats best, 0: ties its prefix, 1: worse.
  int compare_prefix() const {
    if (!best_) return -1;
    const Tokens& b = *best_;
    const std::size_t m = std::min(cur_.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (cur_[i] != b[i]) return cur_[i] < b[i] ? -1 : 1;
    }
    return cur_.size() > b.size() ? 1 : 0;
  }

  void descend(Placement p, std::size_t position) {
    if (pos_[p.strip] != kUnplaced) return;
    const std::size_t mark = cur_.size();
    pos_[p.strip] = position;
    placed_.push_back(p);
    emit_block(p, position);
    if (compare_prefix() <= 0) {
      if (position + 1 == n_) {
        if (!best_ || cur_ < *best_) best_ = cur_;
      } else {
        for (std::size_t s = 0; s < n_; ++s) {
          if (pos_[s] != kUnplaced) continue;
          for (int f = 0; f < 4; ++f) descend(Placement{s, (f & 2) != 0, (f & 1) != 0}, position + 1);
        }
      }
    }
    placed_.pop_back();
    pos_[p.strip] = kUnplaced;
    cur_.resize(mark);
  }

  const Table& t_;
  std::size_t n_;
  std::vector<std::size_t> pos_;
  std::vector<Placement> placed_;
  Tokens cur_;
  std::optional<Tokens> best_;
};

}  // namespace

CanonicalCode canonical_code(const StripedSurface& surface, Exec exec) {
  const Table table = make_table(surface);
  const std::size_t n = surface.strip_count();
  if (n == 0) return CanonicalCode{table.header};

  if (exec == Exec::Serial) {
    Search search(table);
    search.run_all();
    return CanonicalCode{*search.best()};
  }

  // Root 0 runs first so every other root starts with its code as a pruning bound.
  Search first(table);
  first.place_root(Placement{0, false, false});
  Tokens best = *first.best();
  const int roots = static_cast<int>(4 * n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 1; r < roots; ++r) {
    Search search(table);
#pragma omp critical(striptopo_canon_best)
    search.seed(best);
    search.place_root(Placement{static_cast<std::size_t>(r / 4), (r & 2) != 0, (r & 1) != 0});
#pragma omp critical(striptopo_canon_best)
    if (*search.best() < best) best = *search.best();
  }
  return CanonicalCode{best};
}

bool is_isomorphic(const StripedSurface& a, const StripedSurface& b, Exec exec) {
  const StripedSurface ca = canonicalize(a);
  const StripedSurface cb = canonicalize(b);
  if (ca.strip_count() != cb.strip_count() || ca.interval_count() != cb.interval_count()) return false;
  return canonical_code(ca, exec) == canonical_code(cb, exec);
}

}  // namespace striptopo
