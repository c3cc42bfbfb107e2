#include "striptopo/moves.hpp"

#include <algorithm>

#include "striptopo/error.hpp"

namespace striptopo {

namespace {

void reindex(std::vector<Interval>& side, Side as) {
  for (std::size_t k = 0; k < side.size(); ++k) {
    side[k].side = as;
    side[k].index = k;
  }
}

}  // namespace

StripedSurface permute_strips(const StripedSurface& s, const std::vector<std::size_t>& order) {
  std::vector<bool> used(s.strip_count(), false);
  if (order.size() != s.strip_count()) throw Error(ErrorCode::OutOfDomain, "permutation has the wrong length");
  std::vector<ModelStripSpec> strips;
  for (std::size_t i : order) {
    if (i >= used.size() || used[i]) throw Error(ErrorCode::OutOfDomain, "not a permutation");
    used[i] = true;
    strips.push_back(s.strip(i));
  }
  return build_surface(std::move(strips), s.gluings());
}

StripedSurface rename_ids(const StripedSurface& s, const std::function<std::string(const std::string&)>& rename) {
  std::vector<ModelStripSpec> strips = s.strips();
  for (ModelStripSpec& st : strips) {
    st.id = rename(st.id);
    for (Interval& iv : st.lower) iv.id = rename(iv.id);
    for (Interval& iv : st.upper) iv.id = rename(iv.id);
  }
  std::vector<GluingSpec> gluings = s.gluings();
  for (GluingSpec& g : gluings) {
    g.id = rename(g.id);
    g.first = rename(g.first);
    g.second = rename(g.second);
  }
  return build_surface(std::move(strips), std::move(gluings));
}

StripedSurface hflip(const StripedSurface& s, std::size_t strip) {
  std::vector<ModelStripSpec> strips = s.strips();
  ModelStripSpec& st = strips.at(strip);
  for (Side side : {Side::Lower, Side::Upper}) {
    auto& list = st.side(side);
    std::reverse(list.begin(), list.end());
    for (Interval& iv : list) {
      if (iv.endpoints) iv.endpoints = Endpoints{-iv.endpoints->second, -iv.endpoints->first};
    }
    reindex(list, side);
  }
  std::vector<GluingSpec> gluings = s.gluings();
  for (GluingSpec& g : gluings) {
    const bool a = s.locate(g.first).strip == strip;
    const bool b = s.locate(g.second).strip == strip;
    if (a != b) g.orientation = toggled(g.orientation);
  }
  return build_surface(std::move(strips), std::move(gluings));
}

StripedSurface vflip(const StripedSurface& s, std::size_t strip) {
  std::vector<ModelStripSpec> strips = s.strips();
  ModelStripSpec& st = strips.at(strip);
  std::swap(st.lower, st.upper);
  reindex(st.lower, Side::Lower);
  reindex(st.upper, Side::Upper);
  return build_surface(std::move(strips), s.gluings());
}

StripedSurface mirror(const StripedSurface& s) {
  StripedSurface out = s;
  for (std::size_t i = 0; i < s.strip_count(); ++i) out = hflip(out, i);
  return out;
}

}  // namespace striptopo
