#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "striptopo/strip.hpp"

namespace striptopo {

/// Admissible moves. Each one is realized by a foliated homeomorphism, so the
/// canonical code is invariant under all of them.

/// Reorders strips: the result's strip k is the input's strip order[k].
StripedSurface permute_strips(const StripedSurface& s, const std::vector<std::size_t>& order);

/// Renames every strip, interval and gluing id through `rename`.
StripedSurface rename_ids(const StripedSurface& s, const std::function<std::string(const std::string&)>& rename);

/// x -> -x on one strip: both sides reverse order, endpoints are negated, and gluings
/// joining this strip to another strip toggle their orientation.
StripedSurface hflip(const StripedSurface& s, std::size_t strip);

/// y -> -y on one strip: lower and upper swap. Orientation flags are unchanged.
StripedSurface vflip(const StripedSurface& s, std::size_t strip);

/// hflip of every strip.
StripedSurface mirror(const StripedSurface& s);

}  // namespace striptopo
