#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "striptopo/leaf_space.hpp"
#include "striptopo/strip.hpp"

namespace striptopo {

enum class CutMode : std::uint8_t { Interior, WithBoundary };
std::string_view to_string(CutMode m);

enum class ComponentShape : std::uint8_t { Chain, Cycle };

/// A strip as it sits inside a component: `flipped` means its upper side faces the
/// component's lower end; `reversed` means its x axis runs against the component's.
struct ChainStrip {
  std::size_t strip = 0;
  bool flipped = false;
  bool reversed = false;

  friend bool operator==(const ChainStrip&, const ChainStrip&) = default;
};

/// One piece of the surface cut along the cut locus: strips merged across uncut gluings.
struct Component {
  ComponentShape shape = ComponentShape::Chain;
  std::vector<ChainStrip> strips;
  std::vector<std::size_t> interfaces;  // gluing indices, in walk order
  std::optional<SideEnd> outer_lower;   // Chain only
  std::optional<SideEnd> outer_upper;   // Chain only
};

struct Decomposition {
  CutMode mode = CutMode::Interior;
  std::vector<Component> components;
  std::set<std::size_t> cut;  // LeafPoint indices
};

/// Errors: DisconnectedSurface.
Decomposition decompose(const LeafSpace& ls, CutMode mode);

enum class ComponentType : std::uint8_t { OpenStrip, HalfClosedStrip, ClosedStrip, Cylinder, Moebius };
std::string_view to_string(ComponentType t);

/// +1 per upper-lower attachment, -1 for upper-upper or lower-lower.
int side_sign(const StripedSurface& surface, const GluingSpec& g);
/// +1 for Preserving, -1 for Reversing.
int orientation_sign(Orientation o);
/// Product of side_sign * orientation_sign over the gluings of a cycle.
int monodromy(const StripedSurface& surface, const Component& comp);

ComponentType classify_component(const LeafSpace& ls, const Component& comp, CutMode mode);

/// Whole-surface orientability from the same sign rule, via balance of the signed gluing graph.
bool is_orientable(const StripedSurface& surface);

struct TheoremCheck {
  bool pass = true;
  std::string message;
};

/// A cylinder or Moebius component must be the only component, with no special and no
/// boundary leaves anywhere. Failure means a library invariant is broken.
TheoremCheck check_theorem_part1(const LeafSpace& ls, const Decomposition& d);

struct ClosureStrip {
  Side side = Side::Lower;               // which extreme of the component it closes
  std::vector<std::size_t> base_points;  // LeafPoints on that extreme, by interval index
};

struct ComponentClosures {
  ClosureStrip lower;
  ClosureStrip upper;
  std::set<std::size_t> overlap;  // leaves bordering both extremes
};

/// Errors: NotAChain.
ComponentClosures component_closures(const LeafSpace& ls, const Component& comp);

/// Merges every chain into a single strip (outer sides kept, gluings re-targeted and
/// re-oriented). A cycle becomes the one-strip standard cylinder or Moebius band.
/// Idempotent. Errors: DisconnectedSurface.
StripedSurface canonicalize(const StripedSurface& surface);

}  // namespace striptopo
