#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "striptopo/rational.hpp"

namespace striptopo {

enum class Side : std::uint8_t { Lower, Upper };

constexpr Side opposite(Side s) noexcept { return s == Side::Lower ? Side::Upper : Side::Lower; }
std::string_view to_string(Side s);

enum class Orientation : std::uint8_t { Preserving, Reversing };

constexpr Orientation toggled(Orientation o) noexcept {
  return o == Orientation::Preserving ? Orientation::Reversing : Orientation::Preserving;
}
std::string_view to_string(Orientation o);

using Endpoints = std::pair<ExtRational, ExtRational>;

/// One open interval of a strip's boundary line.
struct Interval {
  std::string id;
  Side side = Side::Lower;
  std::size_t index = 0;  // left-to-right position on its side
  std::optional<Endpoints> endpoints;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A model strip: R x (a,b) plus the listed open intervals on its two boundary lines.
struct ModelStripSpec {
  std::string id;
  std::vector<Interval> lower;
  std::vector<Interval> upper;

  const std::vector<Interval>& side(Side s) const { return s == Side::Lower ? lower : upper; }
  std::vector<Interval>& side(Side s) { return s == Side::Lower ? lower : upper; }

  /// Intervals without explicit endpoints; side and index follow list position.
  static ModelStripSpec make(std::string id, const std::vector<std::string>& lower_ids,
                             const std::vector<std::string>& upper_ids);

  friend bool operator==(const ModelStripSpec&, const ModelStripSpec&) = default;
};

/// Identification of two boundary intervals. An empty id is replaced by "first~second".
struct GluingSpec {
  std::string id;
  std::string first;
  std::string second;
  Orientation orientation = Orientation::Preserving;

  friend bool operator==(const GluingSpec&, const GluingSpec&) = default;
};

/// One end of a strip's leaf arc, i.e. one boundary side of one strip.
struct SideEnd {
  std::size_t strip = 0;
  Side side = Side::Lower;

  friend auto operator<=>(const SideEnd&, const SideEnd&) = default;
};

struct IntervalRef {
  std::size_t strip = 0;
  Side side = Side::Lower;
  std::size_t index = 0;

  SideEnd side_end() const noexcept { return {strip, side}; }
  friend auto operator<=>(const IntervalRef&, const IntervalRef&) = default;
};

/// A validated, immutable striped surface. Only build_surface creates one.
class StripedSurface {
 public:
  const std::vector<ModelStripSpec>& strips() const noexcept { return strips_; }
  const std::vector<GluingSpec>& gluings() const noexcept { return gluings_; }
  std::size_t strip_count() const noexcept { return strips_.size(); }
  const ModelStripSpec& strip(std::size_t i) const { return strips_.at(i); }

  std::optional<std::size_t> find_strip(std::string_view id) const;
  /// Throws Error(UnknownIntervalRef) for an id that is not an interval of this surface.
  IntervalRef locate(std::string_view interval_id) const;
  bool has_interval(std::string_view interval_id) const;
  const Interval& interval(const IntervalRef& ref) const;
  std::span<const Interval> side(SideEnd end) const;

  /// Index into gluings() of the gluing using this interval, if any.
  std::optional<std::size_t> gluing_of(std::string_view interval_id) const;
  std::optional<std::size_t> gluing_at(const IntervalRef& ref) const;
  /// The other interval of the gluing at `ref`.
  std::optional<IntervalRef> partner(const IntervalRef& ref) const;

  /// Numeric endpoints: the explicit ones, else (2k, 2k+1) for index k.
  std::pair<double, double> resolved_endpoints(const IntervalRef& ref) const;

  std::size_t interval_count() const noexcept { return interval_index_.size(); }

  friend bool operator==(const StripedSurface& a, const StripedSurface& b) {
    return a.strips_ == b.strips_ && a.gluings_ == b.gluings_;
  }

 private:
  friend StripedSurface build_surface(std::vector<ModelStripSpec>, std::vector<GluingSpec>);

  std::vector<ModelStripSpec> strips_;
  std::vector<GluingSpec> gluings_;
  std::unordered_map<std::string, std::size_t> strip_index_;
  std::unordered_map<std::string, IntervalRef> interval_index_;
  std::unordered_map<std::string, std::size_t> gluing_by_interval_;
};

/// Validates and freezes a surface. Errors: DuplicateId, UnknownIntervalRef, DoubleGluing,
/// SelfGluing, SameSideGluing, BadEndpoints, BadIntervalIndex.
StripedSurface build_surface(std::vector<ModelStripSpec> strips, std::vector<GluingSpec> gluings);

struct GluedLeafReport {
  std::string gluing;
  SideEnd first;
  SideEnd second;
  bool distinct_collars = true;
};

struct ValidationReport {
  bool ok = true;
  std::vector<GluedLeafReport> glued_leaves;
  std::vector<std::vector<std::string>> components;  // strip ids per connected component
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

ValidationReport validate_class_f(const StripedSurface& surface);

/// Strip indices grouped by connectivity in the strip-gluing graph, ordered by smallest index.
std::vector<std::vector<std::size_t>> strip_components(const StripedSurface& surface);
bool is_connected(const StripedSurface& surface);
/// Connected pieces as independent surfaces; strip, interval and gluing order are preserved.
std::vector<StripedSurface> components(const StripedSurface& surface);

}  // namespace striptopo
