#pragma once

// Colored subspaces (a1, D1): a subspace of the dual of the Cartan space and
// a set of colors, such that a1 is the cone spanned by V ∩ a1 and the phi_D
// with D in D1. Functionals are written by their values on the datum's
// lattice basis.

#include <optional>
#include <set>
#include <vector>

#include "sph/datum.hpp"

namespace sph {

struct ColoredSubspace {
  RationalMatrix subspace;  // reduced echelon basis, rank(datum) columns
  std::set<std::size_t> colors;  // indices into the datum's colors

  /// Canonical form of the span of `spanning` together with `colors`.
  static ColoredSubspace make(std::size_t ambient, const std::vector<QVector>& spanning,
                              std::set<std::size_t> colors);

  std::size_t dim() const noexcept { return subspace.rows(); }
  bool subspace_contains(std::span<const Rational> v) const;
  /// (a1, D1) ⪯ (a2, D2): a1 ⊆ a2 and D1 ⊆ D2.
  bool precedes(const ColoredSubspace& other) const;

  friend bool operator==(const ColoredSubspace&, const ColoredSubspace&) = default;
};

/// Throws DomainError on a dimension mismatch or an unknown color index.
bool is_colored_subspace(const SphericalDatum& d, const ColoredSubspace& cs);

/// The datum of the overgroup attached to cs. Throws DomainError unless cs is
/// a colored subspace; NotCosimplicialError and InvalidDatumError propagate.
SphericalDatum quotient_by(const SphericalDatum& d, const ColoredSubspace& cs);

/// Simple roots of the parabolic Q when a1 is everything, nullopt otherwise.
std::optional<RootSet> parabolic_of(const SphericalDatum& d, const ColoredSubspace& cs);

/// a1 ⊆ V ∩ -V.
bool is_central(const SphericalDatum& d, const RationalMatrix& subspace);

struct ColoredSubspaceFamily {
  std::vector<ColoredSubspace> entries;
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (i, j) with entries[i] ⪯ entries[j], i != j
  std::vector<std::vector<std::size_t>> orbits;  // under the color swaps of the automorphism group
};

/// All (Span{phi_D : D in D1} + central, D1) that are colored subspaces.
/// `central` must lie in V ∩ -V (DomainError otherwise).
ColoredSubspaceFamily enumerate_color_spanned(const SphericalDatum& d,
                                              const std::optional<RationalMatrix>& central = std::nullopt);

}  // namespace sph
