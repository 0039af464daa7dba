#pragma once

// Canonical forms of spherical data and the decision procedure for equality
// of invariants (same lattice, same valuation cone, colors matched by a
// bijection preserving moved roots and functionals).

#include <string>
#include <vector>

#include "sph/datum.hpp"

namespace sph {

struct CanonicalForm {
  std::string encoding;  // deterministic text, color labels erased
  std::string sha256;    // lowercase hex digest of `encoding`

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const SphericalDatum& d);

struct EquivalenceResult {
  bool equivalent = false;
  /// For equivalent data: witness[i] is the color of the second datum matched
  /// with color i of the first.
  std::vector<std::size_t> witness;
  /// For inequivalent data: "weight lattice", "valuation cone" or "colors".
  std::string counterreason;
};

/// Throws IncomparableError when the data live over different groups.
EquivalenceResult equivalent(const SphericalDatum& a, const SphericalDatum& b);

}  // namespace sph
