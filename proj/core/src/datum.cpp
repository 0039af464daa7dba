#include "sph/datum.hpp"

#include <algorithm>

namespace sph {
namespace {

// c with sigma == c * alpha, if sigma is a rational multiple of alpha.
std::optional<Rational> multiple_of(std::span<const Integer> sigma, std::span<const Integer> alpha) {
  std::size_t j = 0;
  while (j < alpha.size() && alpha[j] == 0) ++j;
  if (j == alpha.size()) return std::nullopt;
  Rational c(sigma[j], alpha[j]);
  c.canonicalize();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (Rational(sigma[i]) != c * alpha[i]) return std::nullopt;
  return c;
}

QVector scaled(const QVector& v, const Rational& c) {
  QVector out = v;
  for (auto& x : out) x *= c;
  return out;
}

std::string root_text(const Character& c) { return to_string(std::span<const Integer>(c)); }

struct Multiple {
  std::size_t index;
  Rational factor;
};

std::vector<Multiple> multiples_in_psi(const SphericalDatum& d, RootIndex alpha) {
  Character a = d.group().simple_root(alpha);
  std::vector<Multiple> out;
  const auto& psi = d.spherical_roots();
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (auto c = multiple_of(psi[i], a)) out.push_back({i, *c});
  return out;
}

std::optional<RootIndex> simple_root_equal_to(const SphericalDatum& d, const Character& sigma) {
  for (RootIndex a : d.group().simple_roots())
    if (d.group().simple_root(a) == sigma) return a;
  return std::nullopt;
}

}  // namespace

SphericalDatum::SphericalDatum(ReductiveGroup group, IntegerLattice lattice, std::vector<Character> spherical_roots,
                               std::vector<Color> colors)
    : group_(std::move(group)), lattice_(std::move(lattice)), roots_(std::move(spherical_roots)),
      colors_(std::move(colors)) {
  const std::size_t r = group_.character_rank();
  if (lattice_.ambient_rank() != r)
    throw DimensionError("weight lattice lives in rank " + std::to_string(lattice_.ambient_rank()) +
                         ", the group has character rank " + std::to_string(r));
  for (const auto& s : roots_)
    if (s.size() != r) throw DimensionError("spherical root " + root_text(s) + " has the wrong length");
  for (const auto& c : colors_) {
    if (c.phi.size() != lattice_.rank())
      throw DimensionError("color " + c.label + " has " + std::to_string(c.phi.size()) +
                           " values, the lattice has rank " + std::to_string(lattice_.rank()));
    for (RootIndex a : c.moved_by)
      if (!group_.is_simple_root(a)) throw DomainError("color " + c.label + " is moved by a root outside the group");
  }
}

SphericalDatum SphericalDatum::from_basis(ReductiveGroup group, const std::vector<ZVector>& basis,
                                          std::vector<Character> spherical_roots, std::vector<Color> colors) {
  const std::size_t r = group.character_rank();
  IntMatrix input = IntMatrix::from_rows(basis, r);
  if (sph::rank(input) != basis.size()) throw DomainError("lattice basis vectors are linearly dependent");
  IntegerLattice lattice(r, input);
  RationalMatrix in_q = to_rational(input);
  for (auto& c : colors) {
    if (c.phi.size() != basis.size())
      throw DimensionError("color " + c.label + " has " + std::to_string(c.phi.size()) + " values for " +
                           std::to_string(basis.size()) + " basis vectors");
    QVector values(lattice.rank());
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
      QVector row = to_rational(lattice.basis_vector(i));
      auto t = solve_row_combination(in_q, row);
      values[i] = dot(std::span<const Rational>(*t), std::span<const Rational>(c.phi));
    }
    c.phi = std::move(values);
  }
  return SphericalDatum(std::move(group), std::move(lattice), std::move(spherical_roots), std::move(colors));
}

std::vector<std::size_t> SphericalDatum::colors_moved_by(RootIndex alpha) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].moved_by.count(alpha)) out.push_back(i);
  return out;
}

Rational SphericalDatum::pair(const Color& color, std::span<const Integer> lambda) const {
  auto c = lattice_.rational_coordinates(lambda);
  if (!c) throw DomainError("character is outside the span of the weight lattice");
  return dot(std::span<const Rational>(*c), std::span<const Rational>(color.phi));
}

QVector SphericalDatum::restrict_functional(std::span<const Rational> f) const {
  QVector out(lattice_.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dot(lattice_.basis().row(i), f);
  return out;
}

QVector SphericalDatum::coroot_on_lattice(RootIndex alpha) const {
  Functional f = group_.coroot(alpha);
  return restrict_functional(f);
}

Cone SphericalDatum::valuation_cone() const {
  std::vector<QVector> normals;
  for (const auto& s : roots_) {
    auto c = lattice_.rational_coordinates(s);
    if (!c) throw DomainError("spherical root " + root_text(s) + " is outside the span of the weight lattice");
    normals.push_back(std::move(*c));
  }
  return Cone::from_inequalities(lattice_.rank(), normals);
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const SphericalDatum& d, ValidationOptions options) {
  std::vector<Violation> out;
  const auto& g = d.group();
  const auto& lattice = d.lattice();
  const auto& psi = d.spherical_roots();
  const auto& colors = d.colors();

  // V1
  for (const auto& s : psi) {
    if (!lattice.contains(s)) {
      out.push_back({"V1", "spherical root " + root_text(s) + " is not in the weight lattice"});
    } else if (!is_primitive(s, lattice)) {
      out.push_back({"V1", "spherical root " + root_text(s) + " is not primitive in the weight lattice"});
    }
  }
  if (!psi.empty()) {
    IntMatrix m = IntMatrix::from_rows(psi, g.character_rank());
    if (rank(m) != psi.size()) out.push_back({"V1", "spherical roots are linearly dependent"});
  }

  // V2
  std::vector<RootIndex> colorless;
  for (RootIndex a : g.simple_roots()) {
    auto dset = d.colors_moved_by(a);
    auto mult = multiples_in_psi(d, a);
    const std::string name = g.label(a);
    if (dset.empty()) {
      colorless.push_back(a);
      if (!mult.empty()) out.push_back({"V2", name + " moves no color but a multiple of it is a spherical root"});
      continue;
    }
    if (mult.size() > 1) {
      out.push_back({"V2", "several multiples of " + name + " are spherical roots"});
      continue;
    }
    QVector coroot = d.coroot_on_lattice(a);
    if (mult.empty()) {
      if (dset.size() != 1)
        out.push_back({"V2", name + " (type d) must move exactly one color, found " + std::to_string(dset.size())});
      else if (colors[dset[0]].phi != coroot)
        out.push_back({"V2", "color " + colors[dset[0]].label + " must equal the coroot of " + name +
                                 " on the lattice (type d)"});
      continue;
    }
    const Rational& c = mult.front().factor;
    if (c == 1) {
      if (dset.size() != 2) {
        out.push_back({"V2", name + " (type b) must move exactly two colors, found " + std::to_string(dset.size())});
        continue;
      }
      QVector sum = colors[dset[0]].phi;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += colors[dset[1]].phi[i];
      if (sum != coroot)
        out.push_back({"V2", "colors " + colors[dset[0]].label + ", " + colors[dset[1]].label +
                                 " must sum to the coroot of " + name + " on the lattice (type b)"});
    } else if (c == 2) {
      if (dset.size() != 1)
        out.push_back({"V2", name + " (type c) must move exactly one color, found " + std::to_string(dset.size())});
      else if (colors[dset[0]].phi != scaled(coroot, Rational(1, 2)))
        out.push_back({"V2", "color " + colors[dset[0]].label + " must equal half the coroot of " + name +
                                 " on the lattice (type c)"});
    } else {
      out.push_back({"V2", c.get_str() + " * " + name + " is a spherical root; only 1 and 2 are allowed"});
    }
  }

  // V3
  for (RootIndex a : colorless)
    if (!is_zero(std::span<const Rational>(d.coroot_on_lattice(a))))
      out.push_back({"V3", g.label(a) + " moves no color but its coroot is nonzero on the lattice"});

  // V4
  std::vector<RootIndex> simple_in_psi;
  for (RootIndex b : g.simple_roots())
    if (std::find(psi.begin(), psi.end(), g.simple_root(b)) != psi.end()) simple_in_psi.push_back(b);
  for (const auto& s : psi) {
    if (!lattice.contains(s)) continue;
    auto as_simple = simple_root_equal_to(d, s);
    for (RootIndex b : simple_in_psi) {
      for (std::size_t ci : d.colors_moved_by(b)) {
        const Color& col = colors[ci];
        Rational v = d.pair(col, s);
        bool must_be_one = as_simple && col.moved_by.count(*as_simple);
        if (v > 1) {
          out.push_back({"V4", "<phi_" + col.label + ", " + root_text(s) + "> = " + v.get_str() + " exceeds 1"});
        } else if (v == 1 && !must_be_one) {
          out.push_back({"V4", "<phi_" + col.label + ", " + root_text(s) +
                                   "> = 1 although the root is not simple or does not move the color"});
        } else if (v != 1 && must_be_one) {
          out.push_back({"V4", "<phi_" + col.label + ", " + root_text(s) + "> = " + v.get_str() + ", expected 1"});
        }
      }
    }
  }

  // V5
  for (const auto& c : colors)
    if (c.moved_by.empty()) out.push_back({"V5", "color " + c.label + " is not moved by any simple root"});

  if (options.quasiaffine) {
    for (const auto& c : colors)
      if (is_zero(std::span<const Rational>(c.phi))) out.push_back({"QA", "color " + c.label + " has phi = 0"});
  }
  return out;
}

void require_valid(const SphericalDatum& d, const std::string& context, ValidationOptions options) {
  auto v = validate(d, options);
  if (!v.empty()) throw InvalidDatumError(context, std::move(v));
}

// ---------------------------------------------------------------------------

std::string to_string(RootType t) {
  switch (t) {
    case RootType::a: return "a";
    case RootType::b: return "b";
    case RootType::c: return "c";
    case RootType::d: return "d";
  }
  return "?";
}

RootType root_type(const SphericalDatum& d, RootIndex alpha) {
  if (d.colors_moved_by(alpha).empty()) return RootType::a;
  auto mult = multiples_in_psi(d, alpha);
  if (mult.empty()) return RootType::d;
  return mult.front().factor == 1 ? RootType::b : RootType::c;
}

std::vector<RootTypeEntry> classify_simple_roots(const SphericalDatum& d) {
  std::vector<RootTypeEntry> out;
  for (RootIndex a : d.group().simple_roots()) out.push_back({a, root_type(d, a), d.colors_moved_by(a)});
  return out;
}

std::vector<Character> DistinguishedReport::all() const {
  std::vector<Character> out = psi1;
  out.insert(out.end(), psi2.begin(), psi2.end());
  out.insert(out.end(), psi3.begin(), psi3.end());
  return out;
}

DistinguishedReport distinguished_roots(const SphericalDatum& d) {
  const auto& g = d.group();
  const std::size_t r = g.character_rank();
  auto sum_of = [&](const std::vector<RootIndex>& sigma, const std::vector<int>& coeffs) {
    Character out(r);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      Character a = g.simple_root(sigma[i]);
      for (std::size_t j = 0; j < r; ++j) out[j] += coeffs[i] * a[j];
    }
    return out;
  };

  // Candidate type-2 and type-3 roots with their tilde root.
  std::map<Character, RootIndex> type2, type3;
  for (std::size_t k = 2; k <= g.semisimple_rank(); ++k) {
    for (const auto& sigma : g.find_subdiagrams({DynkinType::B, k})) {
      bool tail_colorless = true;
      for (std::size_t i = 1; i < sigma.size(); ++i)
        if (!d.colors_moved_by(sigma[i]).empty()) tail_colorless = false;
      if (tail_colorless) type2.emplace(sum_of(sigma, std::vector<int>(k, 1)), sigma[0]);
    }
  }
  if (g.semisimple_rank() >= 2)
    for (const auto& sigma : g.find_subdiagrams({DynkinType::G, 2})) type3.emplace(sum_of(sigma, {1, 2}), sigma[1]);

  DistinguishedReport rep;
  for (const auto& s : d.spherical_roots()) {
    if (auto a = simple_root_equal_to(d, s)) {
      QVector half = scaled(d.coroot_on_lattice(*a), Rational(1, 2));
      bool ok = true;
      for (std::size_t ci : d.colors_moved_by(*a)) ok = ok && d.colors()[ci].phi == half;
      if (ok) {
        rep.psi1.push_back(s);
        rep.tilde[s] = *a;
      }
      continue;
    }
    if (auto it = type2.find(s); it != type2.end()) {
      rep.psi2.push_back(s);
      rep.tilde[s] = it->second;
    } else if (auto it3 = type3.find(s); it3 != type3.end()) {
      rep.psi3.push_back(s);
      rep.tilde[s] = it3->second;
    }
  }
  return rep;
}

DoubledRoots doubled_root_lattice(const SphericalDatum& d) {
  DistinguishedReport dist = distinguished_roots(d);
  DoubledRoots out;
  for (const auto& s : d.spherical_roots()) {
    bool doubled = dist.tilde.count(s) || !d.group().in_root_lattice(s);
    Character c = s;
    if (doubled)
      for (auto& x : c) x *= 2;
    out.psi_bar.push_back(std::move(c));
  }
  out.lambda_bar = IntegerLattice::spanned_by(d.group().character_rank(), out.psi_bar);
  return out;
}

AutomorphismStructure automorphism_structure(const SphericalDatum& d) {
  IntegerLattice lb = doubled_root_lattice(d).lambda_bar;
  QuotientStructure q = quotient_structure(lb, d.lattice());
  AutomorphismStructure out{q.free_rank, q.torsion};
  if (out.torus_rank != d.rank() - lb.rank() || out.torus_rank != d.valuation_cone().lineality_dim())
    throw DomainError("lineality mismatch");
  return out;
}

bool is_wonderful(const SphericalDatum& d) {
  return IntegerLattice::spanned_by(d.group().character_rank(), d.spherical_roots()) == d.lattice();
}

bool weight_monoid_contains(const SphericalDatum& d, std::span<const Integer> lambda) {
  if (!d.lattice().contains(lambda)) throw DomainError("character is not in the weight lattice");
  for (const auto& c : d.colors())
    if (d.pair(c, lambda) < 0) return false;
  return true;
}

std::size_t dimension(const SphericalDatum& d) {
  RootSet colorless;
  for (RootIndex a : d.group().simple_roots())
    if (d.colors_moved_by(a).empty()) colorless.insert(a);
  return d.rank() + d.group().dim() - d.group().dim_parabolic(colorless);
}

}  // namespace sph
