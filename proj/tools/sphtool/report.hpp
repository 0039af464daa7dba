#pragma once

// Report builders shared by the sphtool commands. Each report is an ordered
// JSON object; the text renderer walks the same object.

#include <nlohmann/json.hpp>

#include "sph/datum.hpp"
#include "sph/equiv.hpp"
#include "sph/subspace.hpp"

namespace sphtool {

using Json = nlohmann::ordered_json;

Json vector_json(std::span<const sph::Integer> v);
Json vector_json(std::span<const sph::Rational> v);
/// "2 c0.a1 + c0.a2" when the character is in the rational root span,
/// otherwise the coordinate vector.
std::string describe_character(const sph::ReductiveGroup& g, const sph::Character& c);

Json violations_json(const std::vector<sph::Violation>& v);
Json roots_report(const sph::SphericalDatum& d);
Json info_report(const sph::SphericalDatum& d);
Json automorphism_report(const sph::SphericalDatum& d);
Json subspace_json(const sph::SphericalDatum& d, const sph::ColoredSubspace& cs);
Json family_report(const sph::SphericalDatum& d, const sph::ColoredSubspaceFamily& fam);
Json equivalence_report(const sph::SphericalDatum& a, const sph::SphericalDatum& b, const sph::EquivalenceResult& r);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace sphtool
