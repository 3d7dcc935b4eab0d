#pragma once

// Canonical JSON forms. Integers that fit in 64 bits are numbers, larger ones decimal strings;
// rationals are [num, den]; objects use sorted keys.

#include "torfan/fan.hpp"
#include "torfan/polyhedron.hpp"

#include "json.hpp"

#include <string>

namespace torfan {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(std::span<const Integer> v);
Json to_json(std::span<const Rational> v);
Json to_json(const std::vector<IntVector>& vs);
Json to_json(const Cone& c);
Json to_json(const Polyhedron& p);
/// {"ambient_dim", "lineality", "rays", "maximal_cones": [[ray index]], "support"}; rays are taken
/// modulo the fan lineality, so a cone with extra lineality lists both directions of it.
Json to_json(const Fan& f);
Json to_json(const FaceIndices& f);

/// Reads an Integer from a number or a decimal string; throws InstanceError(path, ...).
Integer integer_from_json(const Json& j, const std::string& path);
IntVector int_vector_from_json(const Json& j, const std::string& path);

/// Serialized with sorted keys and two-space indentation, newline-terminated.
std::string dump_canonical(const Json& j);

}  // namespace torfan
