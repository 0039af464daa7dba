#include "sph/lattice.hpp"

#include <string>

namespace sph {

IntegerLattice::IntegerLattice(std::size_t ambient_rank, const IntMatrix& generators)
    : ambient_rank_(ambient_rank) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank) {
    throw DimensionError("lattice generators have length " + std::to_string(generators.cols()) +
                         ", ambient rank is " + std::to_string(ambient_rank));
  }
  if (generators.rows() == 0) {
    basis_ = IntMatrix(0, ambient_rank);
  } else {
    basis_ = hnf(generators);
  }
}

IntegerLattice IntegerLattice::full(std::size_t ambient_rank) {
  return IntegerLattice(ambient_rank, IntMatrix::identity(ambient_rank));
}

IntegerLattice IntegerLattice::zero(std::size_t ambient_rank) {
  return IntegerLattice(ambient_rank, IntMatrix(0, ambient_rank));
}

IntegerLattice IntegerLattice::spanned_by(std::size_t ambient_rank, const std::vector<ZVector>& generators) {
  return IntegerLattice(ambient_rank, IntMatrix::from_rows(generators, ambient_rank));
}

void IntegerLattice::check_length(std::size_t n) const {
  if (n != ambient_rank_) {
    throw DimensionError("vector of length " + std::to_string(n) + " in a lattice of ambient rank " +
                         std::to_string(ambient_rank_));
  }
}

std::optional<ZVector> IntegerLattice::coordinates(std::span<const Integer> v) const {
  check_length(v.size());
  ZVector rest(v.begin(), v.end());
  ZVector coords(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    // Locate the pivot of row i; everything left of it must already vanish.
    std::size_t p = col;
    while (basis_(i, p) == 0) ++p;
    for (std::size_t j = col; j < p; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return std::nullopt;
    Integer q = rest[p] / basis_(i, p);
    coords[i] = q;
    if (q != 0)
      for (std::size_t j = p; j < ambient_rank_; ++j) rest[j] -= q * basis_(i, j);
    col = p + 1;
  }
  for (std::size_t j = col; j < ambient_rank_; ++j)
    if (rest[j] != 0) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool IntegerLattice::contains(const IntegerLattice& other) const {
  check_length(other.ambient_rank());
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

std::optional<QVector> IntegerLattice::rational_coordinates(std::span<const Integer> v) const {
  check_length(v.size());
  QVector qv(v.begin(), v.end());
  return solve_row_combination(to_rational(basis_), qv);
}

IntMatrix IntegerLattice::coordinates_of(const IntegerLattice& sub) const {
  check_length(sub.ambient_rank());
  IntMatrix out(0, rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = coordinates(sub.basis().row(i));
    if (!c) throw DomainError("sublattice is not contained in the lattice");
    out.append_row(*c);
  }
  return out;
}

ZVector IntegerLattice::from_coordinates(std::span<const Integer> c) const {
  if (c.size() != rank()) throw DimensionError("coordinate vector has the wrong length");
  if (rank() == 0) return ZVector(ambient_rank_);
  return row_times(c, basis_);
}

IntegerLattice saturation(const IntegerLattice& lattice) {
  const std::size_t k = lattice.rank();
  if (k == 0) return lattice;
  // basis = L^{-1} D R^{-1}; the first k rows of R^{-1} span the rational
  // span and extend to a basis of Z^n, so their Z-span is saturated.
  SmithResult s = snf(lattice.basis());
  RationalMatrix r = to_rational(s.right);
  const std::size_t n = lattice.ambient_rank();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = r(i, j);
      aug(i, n + j) = (i == j) ? 1 : 0;
    }
  EchelonResult e = rref(aug);
  IntMatrix gens(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) gens(i, j) = e.form(i, n + j).get_num();
  return IntegerLattice(n, gens);
}

IntegerLattice intersection(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("intersection: ambient ranks differ");
  const std::size_t n = a.ambient_rank();
  const std::size_t ka = a.rank(), kb = b.rank();
  if (ka == 0 || kb == 0) return IntegerLattice::zero(n);
  // Integer left kernel of [A; -B]: x A = y B.
  IntMatrix stacked(ka + kb, n);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(ka + i, j) = -b.basis()(i, j);
  HermiteResult h = hermite_with_transform(stacked);
  IntMatrix gens(0, n);
  for (std::size_t r = h.rank; r < ka + kb; ++r) {
    ZVector x(h.transform.row(r).begin(), h.transform.row(r).begin() + static_cast<std::ptrdiff_t>(ka));
    gens.append_row(row_times(x, a.basis()));
  }
  return IntegerLattice(n, gens);
}

OptionalOrder index(const IntegerLattice& sub, const IntegerLattice& sup) {
  IntMatrix coords = sup.coordinates_of(sub);
  if (sub.rank() != sup.rank()) return std::nullopt;
  Integer idx = 1;
  for (const auto& d : snf(coords).factors) idx *= d;
  return idx;
}

bool is_primitive(std::span<const Integer> v, const IntegerLattice& lattice) {
  auto c = lattice.coordinates(v);
  if (!c) return false;
  return gcd_of(*c) == 1;
}

OptionalOrder element_order_in_quotient(std::span<const Integer> v, const IntegerLattice& sub,
                                        const IntegerLattice& sup) {
  if (!sup.contains(v)) throw DomainError("element is not in the ambient lattice of the quotient");
  if (!sup.contains(sub)) throw DomainError("sublattice is not contained in the lattice");
  auto c = sub.rational_coordinates(v);
  if (!c) return std::nullopt;
  Integer order = 1;
  for (const auto& x : *c) mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), x.get_den_mpz_t());
  return order;
}

QuotientStructure quotient_structure(const IntegerLattice& sub, const IntegerLattice& sup) {
  IntMatrix coords = sup.coordinates_of(sub);
  QuotientStructure q;
  std::vector<Integer> factors = coords.rows() ? snf(coords).factors : std::vector<Integer>{};
  q.free_rank = sup.rank() - factors.size();
  for (auto& d : factors)
    if (d > 1) q.torsion.push_back(d);
  return q;
}

}  // namespace sph
