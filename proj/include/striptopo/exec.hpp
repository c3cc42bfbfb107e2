#pragma once

#include <cstdint>

namespace striptopo {

/// Serial is the reference path; Parallel uses OpenMP and must give identical results.
enum class Exec : std::uint8_t { Serial, Parallel };

}  // namespace striptopo
