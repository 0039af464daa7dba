#pragma once

// Combinatorial invariants of a spherical homogeneous space: the weight
// lattice, the spherical roots (which cut out the valuation cone) and the
// colors, together with everything derived from them.

#include <map>
#include <string>
#include <vector>

#include "sph/cone.hpp"
#include "sph/lattice.hpp"
#include "sph/rootsys.hpp"

namespace sph {

struct Color {
  std::string label;
  /// Simple roots alpha with this color in D(alpha).
  RootSet moved_by;
  /// Values of the functional on the stored basis of the weight lattice.
  QVector phi;

  friend bool operator==(const Color&, const Color&) = default;
};

class SphericalDatum {
 public:
  SphericalDatum() = default;

  /// `colors[i].phi` holds values on `lattice.basis()`. Only structural
  /// consistency (lengths, root indices) is checked here; see validate().
  SphericalDatum(ReductiveGroup group, IntegerLattice lattice, std::vector<Character> spherical_roots,
                 std::vector<Color> colors);

  /// Same, but the lattice is given by independent rows `basis` and the color
  /// values refer to those rows. The values are rewritten for the Hermite basis.
  static SphericalDatum from_basis(ReductiveGroup group, const std::vector<ZVector>& basis,
                                   std::vector<Character> spherical_roots, std::vector<Color> colors);

  const ReductiveGroup& group() const noexcept { return group_; }
  const IntegerLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Character>& spherical_roots() const noexcept { return roots_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  std::size_t rank() const noexcept { return lattice_.rank(); }

  /// Indices of the colors in D(alpha).
  std::vector<std::size_t> colors_moved_by(RootIndex alpha) const;

  /// <lambda, phi_D>; lambda must lie in the rational span of the lattice.
  Rational pair(const Color& color, std::span<const Integer> lambda) const;
  /// Restriction of a functional on X(T) (x) Q to the lattice basis.
  QVector restrict_functional(std::span<const Rational> f) const;
  /// alpha^vee restricted to the lattice.
  QVector coroot_on_lattice(RootIndex alpha) const;

  /// {v : <sigma, v> <= 0 for sigma in Psi} in coordinates dual to the
  /// lattice basis. Requires Psi inside the rational span of the lattice.
  Cone valuation_cone() const;

  friend bool operator==(const SphericalDatum&, const SphericalDatum&) = default;

 private:
  ReductiveGroup group_;
  IntegerLattice lattice_;
  std::vector<Character> roots_;
  std::vector<Color> colors_;
};

// ---------------------------------------------------------------------------
// Validation.

struct ValidationOptions {
  /// Also require phi_D != 0 for every color (tag "QA").
  bool quasiaffine = false;
};

/// Checks V1..V5 in order and returns every violation; empty means valid.
std::vector<Violation> validate(const SphericalDatum& d, ValidationOptions options = {});

/// Throws InvalidDatumError carrying `context` when validate() fails.
void require_valid(const SphericalDatum& d, const std::string& context, ValidationOptions options = {});

// ---------------------------------------------------------------------------
// Classification.

enum class RootType { a, b, c, d };

std::string to_string(RootType t);

struct RootTypeEntry {
  RootIndex root = 0;
  RootType type = RootType::a;
  std::vector<std::size_t> colors;  // D(alpha) as color indices

  friend bool operator==(const RootTypeEntry&, const RootTypeEntry&) = default;
};

/// One entry per simple root of the group, ascending.
std::vector<RootTypeEntry> classify_simple_roots(const SphericalDatum& d);
RootType root_type(const SphericalDatum& d, RootIndex alpha);

struct DistinguishedReport {
  std::vector<Character> psi1, psi2, psi3;
  std::map<Character, RootIndex> tilde;

  std::vector<Character> all() const;
  friend bool operator==(const DistinguishedReport&, const DistinguishedReport&) = default;
};

DistinguishedReport distinguished_roots(const SphericalDatum& d);

struct DoubledRoots {
  std::vector<Character> psi_bar;
  IntegerLattice lambda_bar;  // inside X(T)
};

DoubledRoots doubled_root_lattice(const SphericalDatum& d);

struct AutomorphismStructure {
  std::size_t torus_rank = 0;
  std::vector<Integer> finite_factors;  // invariant factors > 1

  friend bool operator==(const AutomorphismStructure&, const AutomorphismStructure&) = default;
};

/// Throws DomainError("lineality mismatch") when rank X - rank Lambda-bar
/// differs from the dimension of the lineality space of the valuation cone.
AutomorphismStructure automorphism_structure(const SphericalDatum& d);

bool is_wonderful(const SphericalDatum& d);

/// Throws DomainError when lambda is not in the weight lattice.
bool weight_monoid_contains(const SphericalDatum& d, std::span<const Integer> lambda);

std::size_t dimension(const SphericalDatum& d);

// ---------------------------------------------------------------------------
// Operations producing new data. Each result is revalidated; failures raise
// InvalidDatumError.

SphericalDatum localize(const SphericalDatum& d, const RootSet& s);

/// Quotient by the finite subgroup of automorphisms annihilating `sub`.
/// Requires Lambda-bar ⊆ sub ⊆ X with finite index.
SphericalDatum quotient_finite(const SphericalDatum& d, const IntegerLattice& sub);

SphericalDatum wonderfulization(const SphericalDatum& d);

// ---------------------------------------------------------------------------
// Shared plumbing for the quotient constructions.

/// Coordinates of the rows of `sub` (a sublattice of the rational span of
/// d's lattice) in d's lattice basis.
RationalMatrix coordinates_in_lattice(const SphericalDatum& d, const IntegerLattice& sub);

/// Spherical roots of the image of d's valuation cone in the dual of
/// `sub` (x) Q, as characters in X(T). `coords` is coordinates_in_lattice(d, sub).
std::vector<Character> projected_roots(const SphericalDatum& d, const IntegerLattice& sub,
                                       const RationalMatrix& coords);

}  // namespace sph
