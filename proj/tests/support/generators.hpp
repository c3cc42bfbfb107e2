#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "striptopo/strip.hpp"

namespace striptopo::testkit {

std::filesystem::path fixture(const std::string& name);

struct RandomSurfaceOptions {
  std::size_t min_strips = 1;
  std::size_t max_strips = 6;
  std::size_t max_per_side = 4;
  double glue_probability = 0.7;
  bool connected = false;
  bool explicit_endpoints = false;
};

/// Valid surface with strips "S<i>", intervals "S<i>.l<k>" / "S<i>.u<k>".
StripedSurface random_surface(std::mt19937& rng, const RandomSurfaceOptions& opts);

/// Applies `steps` random admissible moves (permute, hflip, vflip, rename).
StripedSurface random_moves(std::mt19937& rng, const StripedSurface& s, std::size_t steps);

/// Calls `fn` on every valid surface with 1..max_strips strips, at most max_per_side
/// intervals on each side and at most max_total intervals, over all partial gluings and flags.
void enumerate_surfaces(std::size_t max_strips, std::size_t max_per_side, std::size_t max_total,
                        const std::function<void(const StripedSurface&)>& fn);

/// Helpers for hand-built surfaces.
StripedSurface single_strip(std::size_t lower, std::size_t upper,
                            std::vector<std::pair<std::string, std::string>> glue = {},
                            Orientation o = Orientation::Preserving);
StripedSurface standard_band(Orientation o);

}  // namespace striptopo::testkit
