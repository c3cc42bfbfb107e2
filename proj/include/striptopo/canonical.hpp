#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "striptopo/exec.hpp"
#include "striptopo/strip.hpp"

namespace striptopo {

/// Lexicographically least serialization of the gluing combinatorics over strip
/// order, horizontal flips and vertical flips. Ids and endpoints do not enter.
struct CanonicalCode {
  std::vector<std::uint32_t> tokens;

  /// Dotted decimal rendering of the tokens.
  std::string text() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Branch and bound over (strip, hflip, vflip) per position. Exec::Parallel splits the
/// first position across OpenMP threads; both paths return the same code.
CanonicalCode canonical_code(const StripedSurface& surface, Exec exec = Exec::Parallel);

/// canonical_code(canonicalize(a)) == canonical_code(canonicalize(b)).
/// Errors: DisconnectedSurface.
bool is_isomorphic(const StripedSurface& a, const StripedSurface& b, Exec exec = Exec::Parallel);

}  // namespace striptopo
