#include <algorithm>
#include <numeric>

#include "sph/datum.hpp"

namespace sph {
namespace {

bool positive_multiple(const Character& a, const Character& b) {
  // a = c * b for some rational c > 0
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 || b[i] != 0) return sgn(a[i]) == sgn(b[i]) && a[i] != 0;
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// The two colors of each type-b simple root, as color index pairs.
std::vector<std::pair<RootIndex, std::pair<std::size_t, std::size_t>>> type_b_pairs(const SphericalDatum& d) {
  std::vector<std::pair<RootIndex, std::pair<std::size_t, std::size_t>>> out;
  for (RootIndex a : d.group().simple_roots()) {
    if (root_type(d, a) != RootType::b) continue;
    auto ds = d.colors_moved_by(a);
    if (ds.size() == 2) out.push_back({a, {ds[0], ds[1]}});
  }
  return out;
}

// Restricts d to `sub` (a sublattice of the rational span of d's lattice).
// Type-b pairs flagged in `merge` are identified. With `check_ambiguity`,
// two resulting colors with identical invariants that do not come from one
// type-b pair are rejected.
SphericalDatum restrict_to(const SphericalDatum& d, const IntegerLattice& sub, const std::vector<bool>& merge,
                           bool check_ambiguity, const std::string& context) {
  RationalMatrix coords = coordinates_in_lattice(d, sub);
  std::vector<Character> roots = projected_roots(d, sub, coords);

  const auto& old = d.colors();
  std::vector<QVector> phi;
  for (const auto& c : old) phi.push_back(times_column(coords, c.phi));

  auto pairs = type_b_pairs(d);
  UnionFind uf(old.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (i < merge.size() && merge[i]) uf.unite(pairs[i].second.first, pairs[i].second.second);

  std::vector<Color> colors;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (uf.find(i) != i) continue;
    Color c{old[i].label, old[i].moved_by, phi[i]};
    std::vector<std::size_t> m{i};
    for (std::size_t j = i + 1; j < old.size(); ++j) {
      if (uf.find(j) != i) continue;
      if (old[j].moved_by != c.moved_by || phi[j] != c.phi)
        throw DomainError("colors " + c.label + " and " + old[j].label +
                          " are identified by the quotient but carry different invariants");
      c.label += "|" + old[j].label;
      m.push_back(j);
    }
    colors.push_back(std::move(c));
    members.push_back(std::move(m));
  }

  if (check_ambiguity) {
    auto is_pair = [&](std::size_t a, std::size_t b) {
      if (members[a].size() != 1 || members[b].size() != 1) return false;
      std::pair<std::size_t, std::size_t> p{members[a][0], members[b][0]};
      return std::any_of(pairs.begin(), pairs.end(), [&](const auto& q) { return q.second == p; });
    };
    for (std::size_t a = 0; a < colors.size(); ++a)
      for (std::size_t b = a + 1; b < colors.size(); ++b)
        if (colors[a].moved_by == colors[b].moved_by && colors[a].phi == colors[b].phi && !is_pair(a, b))
          throw AmbiguousColorActionError("colors " + colors[a].label + " and " + colors[b].label +
                                          " carry identical invariants");
  }

  SphericalDatum out(d.group(), sub, std::move(roots), std::move(colors));
  require_valid(out, context);
  return out;
}

}  // namespace

RationalMatrix coordinates_in_lattice(const SphericalDatum& d, const IntegerLattice& sub) {
  if (sub.ambient_rank() != d.group().character_rank()) throw DimensionError("sublattice has the wrong ambient rank");
  RationalMatrix out(0, d.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = d.lattice().rational_coordinates(sub.basis().row(i));
    if (!c) throw DomainError("sublattice is not inside the span of the weight lattice");
    out.append_row(*c);
  }
  return out;
}

std::vector<Character> projected_roots(const SphericalDatum& d, const IntegerLattice& sub,
                                       const RationalMatrix& coords) {
  // A functional v (values on d's basis) restricts to coords * v on sub.
  RationalMatrix q = coords.rows() ? coords.transposed() : RationalMatrix(d.rank(), 0);
  Cone image = project(d.valuation_cone(), q);
  std::vector<Character> found;
  for (const auto& c : spherical_roots_of(image, IntegerLattice::full(sub.rank())))
    found.push_back(sub.from_coordinates(c));

  // Keep the order of the original roots where a new root is a rescaling.
  std::vector<Character> ordered;
  std::vector<bool> used(found.size(), false);
  for (const auto& s : d.spherical_roots()) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (!used[i] && positive_multiple(found[i], s)) {
        ordered.push_back(found[i]);
        used[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    if (!used[i]) ordered.push_back(found[i]);
  return ordered;
}

SphericalDatum localize(const SphericalDatum& d, const RootSet& s) {
  for (RootIndex a : s)
    if (!d.group().is_simple_root(a)) throw DomainError("localization set contains a root outside the group");
  ReductiveGroup m = d.group().levi(s);
  std::vector<Character> roots;
  for (const auto& sigma : d.spherical_roots())
    if (d.group().in_rational_span(sigma, s)) roots.push_back(sigma);
  std::vector<Color> colors;
  for (const auto& c : d.colors()) {
    RootSet moved;
    std::set_intersection(c.moved_by.begin(), c.moved_by.end(), s.begin(), s.end(),
                          std::inserter(moved, moved.end()));
    if (!moved.empty()) colors.push_back({c.label, std::move(moved), c.phi});
  }
  SphericalDatum out(std::move(m), d.lattice(), std::move(roots), std::move(colors));
  require_valid(out, "localization produced invalid datum");
  return out;
}

SphericalDatum quotient_finite(const SphericalDatum& d, const IntegerLattice& sub) {
  const IntegerLattice& x = d.lattice();
  if (sub.ambient_rank() != x.ambient_rank()) throw DimensionError("sublattice has the wrong ambient rank");
  if (!x.contains(sub)) throw DomainError("sublattice is not contained in the weight lattice");
  if (!index(sub, x)) throw DomainError("sublattice has infinite index in the weight lattice");
  if (!sub.contains(doubled_root_lattice(d).lambda_bar))
    throw DomainError("sublattice does not contain the doubled root lattice");

  std::vector<bool> merge;
  for (const auto& [alpha, colors] : type_b_pairs(d)) {
    OptionalOrder order = element_order_in_quotient(d.group().simple_root(alpha), sub, x);
    merge.push_back(order && mpz_even_p(order->get_mpz_t()));
  }
  return restrict_to(d, sub, merge, !(sub == x), "quotient produced invalid datum");
}

SphericalDatum wonderfulization(const SphericalDatum& d) {
  IntegerLattice span = IntegerLattice::spanned_by(d.group().character_rank(), d.spherical_roots());
  if (span == d.lattice()) return d;
  if (span.rank() == d.rank()) return quotient_finite(d, span);
  bool torsion = !quotient_structure(span, d.lattice()).torsion.empty();
  return restrict_to(d, span, {}, torsion, "wonderfulization produced invalid datum");
}

}  // namespace sph
