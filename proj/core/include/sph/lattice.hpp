#pragma once

#include <optional>

#include "sph/exactla.hpp"

namespace sph {

/// A subgroup of Z^n, stored by its canonical row Hermite basis. Two lattices
/// are equal iff their stored bases are identical.
class IntegerLattice {
 public:
  IntegerLattice() = default;

  /// Lattice spanned by the rows of `generators` inside Z^ambient_rank.
  IntegerLattice(std::size_t ambient_rank, const IntMatrix& generators);

  static IntegerLattice full(std::size_t ambient_rank);
  static IntegerLattice zero(std::size_t ambient_rank);
  static IntegerLattice spanned_by(std::size_t ambient_rank, const std::vector<ZVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  ZVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Throws DimensionError when v has the wrong length.
  bool contains(std::span<const Integer> v) const;
  bool contains(const IntegerLattice& other) const;

  /// Integer coordinates of v in the stored basis, or nullopt if v is not in
  /// the lattice.
  std::optional<ZVector> coordinates(std::span<const Integer> v) const;

  /// Rational coordinates of v in the stored basis, or nullopt if v is not in
  /// the rational span.
  std::optional<QVector> rational_coordinates(std::span<const Integer> v) const;

  /// Coordinates of each basis vector of `sub` in this lattice's basis
  /// (rows). Throws DomainError if sub is not contained in this lattice.
  IntMatrix coordinates_of(const IntegerLattice& sub) const;

  ZVector from_coordinates(std::span<const Integer> c) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  void check_length(std::size_t n) const;

  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

/// A group order or index that may be infinite (nullopt).
using OptionalOrder = std::optional<Integer>;

IntegerLattice saturation(const IntegerLattice& lattice);
IntegerLattice intersection(const IntegerLattice& a, const IntegerLattice& b);

/// [sup : sub]; nullopt when the index is infinite. Throws DomainError unless
/// sub is contained in sup.
OptionalOrder index(const IntegerLattice& sub, const IntegerLattice& sup);

/// v is a nonzero element of L that is not a proper multiple of another
/// element of L. Throws DimensionError on a length mismatch.
bool is_primitive(std::span<const Integer> v, const IntegerLattice& lattice);

/// Order of v + sub in sup/sub (nullopt = infinite). Requires v in sup and
/// sub contained in sup; violations raise DomainError.
OptionalOrder element_order_in_quotient(std::span<const Integer> v, const IntegerLattice& sub,
                                        const IntegerLattice& sup);

/// Invariant factors > 1 of the torsion part of sup/sub and the free rank.
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

QuotientStructure quotient_structure(const IntegerLattice& sub, const IntegerLattice& sup);

}  // namespace sph
