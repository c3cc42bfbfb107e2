#pragma once

#include "json.hpp"
#include "striptopo/canonical.hpp"
#include "striptopo/decomposition.hpp"
#include "striptopo/error.hpp"
#include "striptopo/leaf_space.hpp"
#include "striptopo/strip.hpp"

namespace striptopo {

using Json = nlohmann::ordered_json;

Json validation_json(const StripedSurface& surface, const ValidationReport& report);
/// {"code", "rule", "message", "ids"} for a library error.
Json error_json(const Error& e);
Json leaf_space_json(const LeafSpace& ls);
Json decomposition_json(const LeafSpace& ls, const Decomposition& d);
Json canonical_json(const StripedSurface& canonical, const CanonicalCode& code);

}  // namespace striptopo
