#pragma once

// Rational polyhedral cones given both by generators and by inequalities.
//
// Inequalities use the "<= 0" side: a normal f describes {x : f.x <= 0}.
// Every list is canonical (primitive integer rows, reduced modulo the
// relevant linear part, sorted), so cones compare by value.

#include <vector>

#include "sph/exactla.hpp"
#include "sph/lattice.hpp"

namespace sph {

class Cone {
 public:
  Cone() = default;

  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<QVector>& normals);
  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<ZVector>& normals);
  static Cone from_generators(std::size_t ambient_dim, const std::vector<QVector>& generators);
  static Cone from_generators(std::size_t ambient_dim, const std::vector<ZVector>& generators);
  static Cone whole_space(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return dim_; }
  /// Extreme rays modulo the lineality space.
  const std::vector<ZVector>& rays() const noexcept { return rays_; }
  /// Basis of c ∩ -c, in reduced echelon form.
  const std::vector<ZVector>& lineality() const noexcept { return lineality_; }
  /// Irredundant facet normals modulo the equations.
  const std::vector<ZVector>& facets() const noexcept { return facets_; }
  /// Basis of the linear forms vanishing on the cone.
  const std::vector<ZVector>& equations() const noexcept { return equations_; }

  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  std::size_t dim() const noexcept { return dim_ - equations_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }

  /// Rays followed by the lineality basis and its negatives.
  std::vector<ZVector> generators() const;

  bool contains(std::span<const Rational> x) const;
  bool contains(std::span<const Integer> x) const;
  bool contains(const Cone& other) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> facets_;
  std::vector<ZVector> equations_;
};

/// The cone of vectors of c lying in the subspace spanned by the rows of
/// `basis` (assumed independent), in coordinates with respect to that basis.
Cone intersect_with_subspace(const Cone& c, const RationalMatrix& basis);

/// The image of c under x -> x * q.
Cone project(const Cone& c, const RationalMatrix& q);

/// For a cone in the dual of lattice ⊗ Q (the lattice must have full rank in
/// its ambient space): one primitive lattice vector per facet, nonpositive on
/// the cone. Throws NotCosimplicialError unless the cone has no equations and
/// exactly codim(lineality) facets.
std::vector<ZVector> spherical_roots_of(const Cone& c, const IntegerLattice& lattice);

}  // namespace sph
