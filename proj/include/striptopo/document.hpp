#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "striptopo/strip.hpp"

namespace striptopo {

/// Parses a surface document:
///   {"strips": [{"id", "lower": [{"id", "endpoints"?: [x0, x1]}], "upper": [...]}],
///    "gluings": [{"id"?, "a", "b", "orientation": "preserving" | "reversing"}]}
/// Endpoints are JSON numbers or strings "p", "p/q", "-2.5", "-inf", "+inf".
/// Errors: ParseError (syntax or schema, with line and column); every build_surface error,
/// its message prefixed with the position of the offending record.
StripedSurface parse_surface(std::string_view text);

/// Reads and parses a file. Errors: ParseError when the file cannot be read, then as parse_surface.
StripedSurface load_surface(const std::filesystem::path& path);

nlohmann::ordered_json surface_to_json(const StripedSurface& surface);
/// Fixed key order, two-space indent, trailing newline.
std::string serialize_surface(const StripedSurface& surface);

}  // namespace striptopo
