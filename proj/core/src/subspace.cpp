#include "sph/subspace.hpp"

#include <algorithm>
#include <map>

namespace sph {
namespace {

RationalMatrix stack(const RationalMatrix& a, std::span<const Rational> v) {
  RationalMatrix m = a;
  if (m.rows() == 0) m = RationalMatrix(0, v.size());
  m.append_row(v);
  return m;
}

bool span_contains(const RationalMatrix& basis, std::span<const Rational> v) {
  if (is_zero(v)) return true;
  if (basis.rows() == 0) return false;
  return rank(stack(basis, v)) == basis.rows();
}

void check_shape(const SphericalDatum& d, const ColoredSubspace& cs) {
  if (cs.subspace.rows() != 0 && cs.subspace.cols() != d.rank())
    throw DomainError("subspace has dimension " + std::to_string(cs.subspace.cols()) + ", the lattice has rank " +
                      std::to_string(d.rank()));
  for (std::size_t c : cs.colors)
    if (c >= d.colors().size()) throw DomainError("unknown color index " + std::to_string(c));
}

bool operator<(const ColoredSubspace& a, const ColoredSubspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.colors.size() != b.colors.size()) return a.colors.size() < b.colors.size();
  if (a.colors != b.colors) return a.colors < b.colors;
  return a.subspace.row_vectors() < b.subspace.row_vectors();
}

}  // namespace

ColoredSubspace ColoredSubspace::make(std::size_t ambient, const std::vector<QVector>& spanning,
                                      std::set<std::size_t> colors) {
  RationalMatrix m(0, ambient);
  for (const auto& v : spanning) {
    if (v.size() != ambient) throw DomainError("subspace vector has the wrong length");
    m.append_row(v);
  }
  return {rref(m).form, std::move(colors)};
}

bool ColoredSubspace::subspace_contains(std::span<const Rational> v) const { return span_contains(subspace, v); }

bool ColoredSubspace::precedes(const ColoredSubspace& other) const {
  if (!std::includes(other.colors.begin(), other.colors.end(), colors.begin(), colors.end())) return false;
  for (std::size_t i = 0; i < subspace.rows(); ++i)
    if (!other.subspace_contains(subspace.row(i))) return false;
  return true;
}

bool is_colored_subspace(const SphericalDatum& d, const ColoredSubspace& cs) {
  check_shape(d, cs);
  const std::size_t m = cs.dim();
  for (std::size_t c : cs.colors)
    if (!cs.subspace_contains(d.colors()[c].phi)) return false;
  if (m == 0) return true;

  Cone inside = intersect_with_subspace(d.valuation_cone(), cs.subspace);
  std::vector<QVector> gens;
  for (const auto& g : inside.generators()) gens.push_back(to_rational(g));
  for (std::size_t c : cs.colors) gens.push_back(*solve_row_combination(cs.subspace, d.colors()[c].phi));
  return Cone::from_generators(m, gens).lineality_dim() == m;
}

SphericalDatum quotient_by(const SphericalDatum& d, const ColoredSubspace& cs) {
  if (!is_colored_subspace(d, cs)) throw DomainError("not a colored subspace");
  const std::size_t k = d.rank();
  const std::size_t r = d.group().character_rank();

  // Lattice points (in coordinates) annihilated by the subspace.
  IntMatrix kernel(0, k);
  if (cs.dim() == 0) {
    kernel = IntMatrix::identity(k);
  } else {
    RationalMatrix ns = nullspace(cs.subspace);
    for (std::size_t i = 0; i < ns.rows(); ++i) kernel.append_row(primitive_integer(ns.row(i)));
  }
  IntegerLattice coords = saturation(IntegerLattice(k, kernel));
  IntMatrix gens(0, r);
  for (std::size_t i = 0; i < coords.rank(); ++i) gens.append_row(d.lattice().from_coordinates(coords.basis().row(i)));
  IntegerLattice sub(r, gens);

  RationalMatrix to_sub = coordinates_in_lattice(d, sub);
  std::vector<Character> roots = projected_roots(d, sub, to_sub);
  std::vector<Color> colors;
  for (std::size_t i = 0; i < d.colors().size(); ++i) {
    if (cs.colors.count(i)) continue;
    const Color& c = d.colors()[i];
    colors.push_back({c.label, c.moved_by, times_column(to_sub, c.phi)});
  }
  SphericalDatum out(d.group(), std::move(sub), std::move(roots), std::move(colors));
  require_valid(out, "colored-subspace quotient produced invalid datum");
  return out;
}

std::optional<RootSet> parabolic_of(const SphericalDatum& d, const ColoredSubspace& cs) {
  check_shape(d, cs);
  if (cs.dim() != d.rank()) return std::nullopt;
  RootSet q;
  for (RootIndex a : d.group().simple_roots()) {
    auto ds = d.colors_moved_by(a);
    if (std::all_of(ds.begin(), ds.end(), [&](std::size_t c) { return cs.colors.count(c) != 0; })) q.insert(a);
  }
  return q;
}

bool is_central(const SphericalDatum& d, const RationalMatrix& subspace) {
  if (subspace.rows() != 0 && subspace.cols() != d.rank()) throw DomainError("subspace has the wrong dimension");
  Cone v = d.valuation_cone();
  RationalMatrix lin(0, d.rank());
  for (const auto& l : v.lineality()) lin.append_row(to_rational(l));
  for (std::size_t i = 0; i < subspace.rows(); ++i)
    if (!span_contains(lin, subspace.row(i))) return false;
  return true;
}

ColoredSubspaceFamily enumerate_color_spanned(const SphericalDatum& d, const std::optional<RationalMatrix>& central) {
  const std::size_t k = d.rank();
  const std::size_t n = d.colors().size();
  if (n >= 24) throw DomainError("too many colors to enumerate subsets");
  std::vector<QVector> base;
  if (central) {
    if (!is_central(d, *central)) throw DomainError("central subspace is not inside the lineality space");
    for (std::size_t i = 0; i < central->rows(); ++i) base.push_back(central->row_vector(i));
  }

  ColoredSubspaceFamily fam;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<QVector> span = base;
    std::set<std::size_t> colors;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      colors.insert(c);
      span.push_back(d.colors()[c].phi);
    }
    ColoredSubspace cs = ColoredSubspace::make(k, span, std::move(colors));
    if (!is_colored_subspace(d, cs)) continue;
    if (std::find(fam.entries.begin(), fam.entries.end(), cs) == fam.entries.end()) fam.entries.push_back(cs);
  }
  std::sort(fam.entries.begin(), fam.entries.end(),
            [](const ColoredSubspace& a, const ColoredSubspace& b) { return a < b; });

  for (std::size_t i = 0; i < fam.entries.size(); ++i)
    for (std::size_t j = 0; j < fam.entries.size(); ++j)
      if (i != j && fam.entries[i].precedes(fam.entries[j])) fam.order.emplace_back(i, j);

  // Color swaps: the two colors of each type-1 distinguished simple root can
  // be exchanged independently of one another.
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  DistinguishedReport dist = distinguished_roots(d);
  for (const auto& s : dist.psi1) {
    auto ds = d.colors_moved_by(dist.tilde.at(s));
    if (ds.size() == 2) swaps.emplace_back(ds[0], ds[1]);
  }
  std::vector<std::size_t> orbit_of(fam.entries.size(), SIZE_MAX);
  for (std::size_t i = 0; i < fam.entries.size(); ++i) {
    if (orbit_of[i] != SIZE_MAX) continue;
    orbit_of[i] = fam.orbits.size();
    fam.orbits.push_back({i});
    for (std::size_t pattern = 1; pattern < (std::size_t{1} << swaps.size()); ++pattern) {
      ColoredSubspace img = fam.entries[i];
      std::set<std::size_t> moved;
      for (std::size_t c : img.colors) {
        std::size_t t = c;
        for (std::size_t s = 0; s < swaps.size(); ++s) {
          if (!(pattern >> s & 1)) continue;
          if (t == swaps[s].first) t = swaps[s].second;
          else if (t == swaps[s].second) t = swaps[s].first;
        }
        moved.insert(t);
      }
      img.colors = std::move(moved);
      for (std::size_t j = i + 1; j < fam.entries.size(); ++j) {
        if (orbit_of[j] == SIZE_MAX && fam.entries[j] == img) {
          orbit_of[j] = orbit_of[i];
          fam.orbits.back().push_back(j);
        }
      }
    }
    std::sort(fam.orbits.back().begin(), fam.orbits.back().end());
  }
  return fam;
}

}  // namespace sph
