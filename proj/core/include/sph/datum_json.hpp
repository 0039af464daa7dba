#pragma once

// JSON file formats (format 1).
//
// Datum:
//   {"format": 1,
//    "group": {"components": [{"type": "B", "rank": 3}], "torus_rank": 0},
//    "levi": ["c0.a1", ...],                      (optional, localized data)
//    "lattice_basis": [[...], ...],
//    "spherical_roots": [[...], ...],
//    "colors": [{"label": "D1", "moved_by": ["c0.a1"], "phi": ["1/2", ...]}]}
// Sublattice:          {"format": 1, "lattice_basis": [[...], ...]}
// Colored subspace:    {"subspace": [[...], ...], "colors": ["D1", ...]}
// Central subspace:    {"subspace": [[...], ...]}
//
// Vectors are in fundamental-weight coordinates followed by the torus. Color
// values and subspace functionals are values on the lattice_basis rows of
// the datum file, in order. Rationals are "p/q" strings (plain integers are
// also accepted).

#include <string>

#include "sph/datum.hpp"
#include "sph/subspace.hpp"

namespace sph {

struct LoadedDatum {
  SphericalDatum datum;
  /// Row i: coordinates of the i-th stored (Hermite) basis vector in terms
  /// of the file's lattice_basis. Turns file-basis values into stored values.
  RationalMatrix basis_change;
};

/// Throws ParseError (field path or line number) on malformed input and
/// Error subclasses on structural inconsistencies.
LoadedDatum parse_datum(const std::string& text);
LoadedDatum load_datum(const std::string& path);

/// Writes the stored basis, so values are on the Hermite basis.
std::string datum_to_json(const SphericalDatum& d, int indent = 2);

IntegerLattice parse_sublattice(const std::string& text, std::size_t ambient_rank);
ColoredSubspace parse_colored_subspace(const std::string& text, const LoadedDatum& datum);
RationalMatrix parse_central_subspace(const std::string& text, const LoadedDatum& datum);

std::string read_file(const std::string& path);

/// "p/q", or "p" for integers.
std::string rational_text(const Rational& q);

}  // namespace sph
