#include "striptopo/strip.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "striptopo/error.hpp"

namespace striptopo {

std::string_view to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

std::string_view to_string(Orientation o) {
  return o == Orientation::Preserving ? "preserving" : "reversing";
}

ModelStripSpec ModelStripSpec::make(std::string id, const std::vector<std::string>& lower_ids,
                                    const std::vector<std::string>& upper_ids) {
  ModelStripSpec spec;
  spec.id = std::move(id);
  for (std::size_t k = 0; k < lower_ids.size(); ++k) spec.lower.push_back({lower_ids[k], Side::Lower, k, {}});
  for (std::size_t k = 0; k < upper_ids.size(); ++k) spec.upper.push_back({upper_ids[k], Side::Upper, k, {}});
  return spec;
}

std::optional<std::size_t> StripedSurface::find_strip(std::string_view id) const {
  auto it = strip_index_.find(std::string(id));
  if (it == strip_index_.end()) return std::nullopt;
  return it->second;
}

IntervalRef StripedSurface::locate(std::string_view interval_id) const {
  auto it = interval_index_.find(std::string(interval_id));
  if (it == interval_index_.end()) {
    throw Error(ErrorCode::UnknownIntervalRef, "unknown interval '" + std::string(interval_id) + "'",
                {std::string(interval_id)});
  }
  return it->second;
}

bool StripedSurface::has_interval(std::string_view interval_id) const {
  return interval_index_.contains(std::string(interval_id));
}

const Interval& StripedSurface::interval(const IntervalRef& ref) const {
  return strips_.at(ref.strip).side(ref.side).at(ref.index);
}

std::span<const Interval> StripedSurface::side(SideEnd end) const {
  return strips_.at(end.strip).side(end.side);
}

std::optional<std::size_t> StripedSurface::gluing_of(std::string_view interval_id) const {
  auto it = gluing_by_interval_.find(std::string(interval_id));
  if (it == gluing_by_interval_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> StripedSurface::gluing_at(const IntervalRef& ref) const {
  return gluing_of(interval(ref).id);
}

std::optional<IntervalRef> StripedSurface::partner(const IntervalRef& ref) const {
  const auto g = gluing_at(ref);
  if (!g) return std::nullopt;
  const GluingSpec& spec = gluings_[*g];
  const std::string& mine = interval(ref).id;
  return locate(spec.first == mine ? spec.second : spec.first);
}

std::pair<double, double> StripedSurface::resolved_endpoints(const IntervalRef& ref) const {
  const Interval& iv = interval(ref);
  if (iv.endpoints) return {iv.endpoints->first.to_double(), iv.endpoints->second.to_double()};
  const double k = static_cast<double>(ref.index);
  return {2.0 * k, 2.0 * k + 1.0};
}

namespace {

void check_side(const ModelStripSpec& strip, Side side) {
  const auto& intervals = strip.side(side);
  std::size_t with_endpoints = 0;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const Interval& iv = intervals[k];
    if (iv.side != side || iv.index != k) {
      throw Error(ErrorCode::BadIntervalIndex,
                  "interval '" + iv.id + "' is listed at " + std::string(to_string(side)) + "[" +
                      std::to_string(k) + "] but declares a different side or index",
                  {iv.id});
    }
    if (iv.endpoints) {
      ++with_endpoints;
      if (!(iv.endpoints->first < iv.endpoints->second)) {
        throw Error(ErrorCode::BadEndpoints, "interval '" + iv.id + "' needs x0 < x1", {iv.id});
      }
    }
  }
  if (with_endpoints != 0 && with_endpoints != intervals.size()) {
    throw Error(ErrorCode::BadEndpoints,
                "strip '" + strip.id + "' " + std::string(to_string(side)) +
                    " side mixes intervals with and without endpoints",
                {strip.id});
  }
  if (with_endpoints == 0) return;
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
    if (intervals[k + 1].endpoints->first < intervals[k].endpoints->second) {
      throw Error(ErrorCode::BadEndpoints,
                  "intervals '" + intervals[k].id + "' and '" + intervals[k + 1].id + "' overlap or are out of order",
                  {intervals[k].id, intervals[k + 1].id});
    }
  }
}

}  // namespace

StripedSurface build_surface(std::vector<ModelStripSpec> strips, std::vector<GluingSpec> gluings) {
  StripedSurface s;

  for (std::size_t i = 0; i < strips.size(); ++i) {
    if (!s.strip_index_.emplace(strips[i].id, i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate strip id '" + strips[i].id + "'", {strips[i].id});
    }
    for (Side side : {Side::Lower, Side::Upper}) {
      check_side(strips[i], side);
      for (const Interval& iv : strips[i].side(side)) {
        if (!s.interval_index_.emplace(iv.id, IntervalRef{i, side, iv.index}).second) {
          throw Error(ErrorCode::DuplicateId, "duplicate interval id '" + iv.id + "'", {iv.id});
        }
      }
    }
  }

  std::unordered_set<std::string> gluing_ids;
  for (std::size_t g = 0; g < gluings.size(); ++g) {
    GluingSpec& spec = gluings[g];
    if (spec.first == spec.second) {
      throw Error(ErrorCode::SelfGluing, "interval '" + spec.first + "' glued to itself", {spec.first});
    }
    for (const std::string* id : {&spec.first, &spec.second}) {
      if (!s.interval_index_.contains(*id)) {
        throw Error(ErrorCode::UnknownIntervalRef, "gluing references unknown interval '" + *id + "'", {*id});
      }
    }
    const IntervalRef a = s.interval_index_.at(spec.first);
    const IntervalRef b = s.interval_index_.at(spec.second);
    if (a.side_end() == b.side_end()) {
      throw Error(ErrorCode::SameSideGluing,
                  "intervals '" + spec.first + "' and '" + spec.second + "' lie on the same side of strip '" +
                      strips[a.strip].id + "'",
                  {spec.first, spec.second});
    }
    for (const std::string* id : {&spec.first, &spec.second}) {
      if (!s.gluing_by_interval_.emplace(*id, g).second) {
        throw Error(ErrorCode::DoubleGluing, "interval '" + *id + "' is glued twice", {*id});
      }
    }
    if (spec.id.empty()) spec.id = spec.first + "~" + spec.second;
    if (!gluing_ids.insert(spec.id).second || s.interval_index_.contains(spec.id)) {
      throw Error(ErrorCode::DuplicateId, "duplicate gluing id '" + spec.id + "'", {spec.id});
    }
  }

  s.strips_ = std::move(strips);
  s.gluings_ = std::move(gluings);
  return s;
}

std::vector<std::vector<std::size_t>> strip_components(const StripedSurface& surface) {
  const std::size_t n = surface.strip_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const GluingSpec& g : surface.gluings()) {
    std::size_t a = find(surface.locate(g.first).strip);
    std::size_t b = find(surface.locate(g.second).strip);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

bool is_connected(const StripedSurface& surface) { return strip_components(surface).size() <= 1; }

std::vector<StripedSurface> components(const StripedSurface& surface) {
  std::vector<StripedSurface> out;
  const auto groups = strip_components(surface);
  for (const auto& group : groups) {
    std::vector<ModelStripSpec> strips;
    for (std::size_t i : group) strips.push_back(surface.strip(i));
    std::vector<GluingSpec> gluings;
    for (const GluingSpec& g : surface.gluings()) {
      const std::size_t owner = surface.locate(g.first).strip;
      if (std::find(group.begin(), group.end(), owner) != group.end()) gluings.push_back(g);
    }
    out.push_back(build_surface(std::move(strips), std::move(gluings)));
  }
  return out;
}

ValidationReport validate_class_f(const StripedSurface& surface) {
  ValidationReport report;
  for (const GluingSpec& g : surface.gluings()) {
    const IntervalRef a = surface.locate(g.first);
    const IntervalRef b = surface.locate(g.second);
    GluedLeafReport leaf{g.id, a.side_end(), b.side_end(), a.side_end() != b.side_end()};
    report.ok = report.ok && leaf.distinct_collars;
    report.glued_leaves.push_back(std::move(leaf));
  }
  for (const auto& group : strip_components(surface)) {
    std::vector<std::string> ids;
    for (std::size_t i : group) ids.push_back(surface.strip(i).id);
    report.components.push_back(std::move(ids));
  }
  if (report.components.size() > 1) report.warnings.emplace_back("Disconnected");

  // Single-strip self-identification of full boundary lines: the standard C / M models.
  for (std::size_t i = 0; i < surface.strip_count(); ++i) {
    const ModelStripSpec& st = surface.strip(i);
    if (st.lower.size() != 1 || st.upper.size() != 1) continue;
    const auto g = surface.gluing_of(st.lower[0].id);
    if (!g) continue;
    const GluingSpec& spec = surface.gluings()[*g];
    const std::string& other = spec.first == st.lower[0].id ? spec.second : spec.first;
    if (other != st.upper[0].id) continue;
    report.notes.push_back(std::string(spec.orientation == Orientation::Preserving ? "CylinderCandidate"
                                                                                     : "MoebiusCandidate") +
                           ":" + st.id);
  }
  return report;
}

}  // namespace striptopo
