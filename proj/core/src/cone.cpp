#include "sph/cone.hpp"

#include <algorithm>

namespace sph {
namespace {

void make_primitive(ZVector& v) { v = primitive_integer(std::span<const Integer>(v)); }

std::vector<ZVector> to_integer_rows(const std::vector<QVector>& rows, std::size_t dim) {
  std::vector<ZVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != dim) throw DimensionError("cone vector has the wrong length");
    out.push_back(primitive_integer(std::span<const Rational>(r)));
  }
  return out;
}

struct Description {
  std::vector<ZVector> rays;
  std::vector<ZVector> lineality;
};

// Rank of the constraints in `tight`, used as the combinatorial adjacency test.
std::size_t tight_rank(const std::vector<ZVector>& constraints, const std::vector<std::size_t>& tight,
                       std::size_t dim) {
  if (tight.empty()) return 0;
  IntMatrix m(0, dim);
  for (std::size_t i : tight) m.append_row(constraints[i]);
  return rank(to_rational(m));
}

// Double description: generators of {x : a.x <= 0 for all constraints a}.
Description double_description(const std::vector<ZVector>& constraints, std::size_t dim) {
  Description d;
  for (std::size_t i = 0; i < dim; ++i) {
    ZVector e(dim);
    e[i] = 1;
    d.lineality.push_back(std::move(e));
  }
  std::vector<ZVector> processed;

  for (const auto& a : constraints) {
    if (is_zero(std::span<const Integer>(a))) continue;
    auto hit = std::find_if(d.lineality.begin(), d.lineality.end(),
                            [&](const ZVector& l) { return dot(a, l) != 0; });
    if (hit != d.lineality.end()) {
      ZVector l = std::move(*hit);
      d.lineality.erase(hit);
      Integer s = dot(a, l);
      if (s > 0) {
        for (auto& x : l) x = -x;
        s = -s;
      }
      auto tighten = [&](ZVector& v) {
        Integer av = dot(a, v);
        if (av == 0) return;
        for (std::size_t j = 0; j < dim; ++j) v[j] = -s * v[j] + av * l[j];
        make_primitive(v);
      };
      for (auto& v : d.lineality) tighten(v);
      for (auto& r : d.rays) tighten(r);
      make_primitive(l);
      d.rays.push_back(std::move(l));
      processed.push_back(a);
      continue;
    }

    std::vector<ZVector> plus, keep;
    std::vector<Integer> plus_val, minus_val;
    std::vector<ZVector> minus;
    for (auto& r : d.rays) {
      Integer v = dot(a, r);
      if (v > 0) {
        plus.push_back(r);
        plus_val.push_back(v);
      } else {
        if (v < 0) {
          minus.push_back(r);
          minus_val.push_back(v);
        }
        keep.push_back(r);
      }
    }
    if (!plus.empty() && !minus.empty()) {
      const std::size_t target = dim - d.lineality.size() - 2;
      std::vector<std::vector<bool>> zp(plus.size()), zm(minus.size());
      for (std::size_t i = 0; i < plus.size(); ++i)
        for (const auto& c : processed) zp[i].push_back(dot(c, plus[i]) == 0);
      for (std::size_t i = 0; i < minus.size(); ++i)
        for (const auto& c : processed) zm[i].push_back(dot(c, minus[i]) == 0);
      for (std::size_t i = 0; i < plus.size(); ++i) {
        for (std::size_t j = 0; j < minus.size(); ++j) {
          std::vector<std::size_t> tight;
          for (std::size_t c = 0; c < processed.size(); ++c)
            if (zp[i][c] && zm[j][c]) tight.push_back(c);
          if (tight.size() < target) continue;
          if (tight_rank(processed, tight, dim) != target) continue;
          ZVector r(dim);
          for (std::size_t k = 0; k < dim; ++k) r[k] = plus_val[i] * minus[j][k] - minus_val[j] * plus[i][k];
          make_primitive(r);
          keep.push_back(std::move(r));
        }
      }
    }
    d.rays = std::move(keep);
    processed.push_back(a);
  }
  return d;
}

// Echelon basis of the row span, each row scaled to a primitive integer vector.
std::vector<ZVector> canonical_basis(const std::vector<ZVector>& rows, std::size_t dim, EchelonResult* echelon) {
  RationalMatrix m(0, dim);
  for (const auto& r : rows) m.append_row(to_rational(r));
  EchelonResult e = rref(m);
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < e.form.rows(); ++i) out.push_back(primitive_integer(e.form.row(i)));
  if (echelon) *echelon = std::move(e);
  return out;
}

std::vector<ZVector> canonical_rays(const std::vector<ZVector>& rays, const EchelonResult& linear) {
  std::vector<ZVector> out;
  for (const auto& r : rays) {
    QVector q = reduce_modulo(to_rational(r), linear);
    if (is_zero(std::span<const Rational>(q))) continue;
    out.push_back(primitive_integer(std::span<const Rational>(q)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ZVector> with_negatives(std::vector<ZVector> rows, const std::vector<ZVector>& pm) {
  for (const auto& v : pm) {
    rows.push_back(v);
    ZVector n = v;
    for (auto& x : n) x = -x;
    rows.push_back(std::move(n));
  }
  return rows;
}

}  // namespace

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<ZVector>& normals) {
  for (const auto& n : normals)
    if (n.size() != ambient_dim) throw DimensionError("cone normal has the wrong length");
  Cone c;
  c.dim_ = ambient_dim;
  Description primal = double_description(normals, ambient_dim);
  EchelonResult lin;
  c.lineality_ = canonical_basis(primal.lineality, ambient_dim, &lin);
  c.rays_ = canonical_rays(primal.rays, lin);
  Description dual = double_description(with_negatives(primal.rays, primal.lineality), ambient_dim);
  EchelonResult eq;
  c.equations_ = canonical_basis(dual.lineality, ambient_dim, &eq);
  c.facets_ = canonical_rays(dual.rays, eq);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<QVector>& normals) {
  return from_inequalities(ambient_dim, to_integer_rows(normals, ambient_dim));
}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<ZVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw DimensionError("cone generator has the wrong length");
  Cone c;
  c.dim_ = ambient_dim;
  Description dual = double_description(generators, ambient_dim);
  EchelonResult eq;
  c.equations_ = canonical_basis(dual.lineality, ambient_dim, &eq);
  c.facets_ = canonical_rays(dual.rays, eq);
  Description primal = double_description(with_negatives(dual.rays, dual.lineality), ambient_dim);
  EchelonResult lin;
  c.lineality_ = canonical_basis(primal.lineality, ambient_dim, &lin);
  c.rays_ = canonical_rays(primal.rays, lin);
  return c;
}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<QVector>& generators) {
  return from_generators(ambient_dim, to_integer_rows(generators, ambient_dim));
}

Cone Cone::whole_space(std::size_t ambient_dim) { return from_inequalities(ambient_dim, std::vector<ZVector>{}); }

std::vector<ZVector> Cone::generators() const { return with_negatives(rays_, lineality_); }

bool Cone::contains(std::span<const Rational> x) const {
  if (x.size() != dim_) throw DimensionError("point has the wrong length");
  for (const auto& f : facets_)
    if (dot(f, x) > 0) return false;
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  return true;
}

bool Cone::contains(std::span<const Integer> x) const {
  QVector q(x.begin(), x.end());
  return contains(std::span<const Rational>(q));
}

bool Cone::contains(const Cone& other) const {
  for (const auto& g : other.generators())
    if (!contains(std::span<const Integer>(g))) return false;
  return true;
}

Cone intersect_with_subspace(const Cone& c, const RationalMatrix& basis) {
  if (basis.cols() != c.ambient_dim() && basis.rows() != 0)
    throw DimensionError("subspace basis has the wrong length");
  const std::size_t m = basis.rows();
  auto pull_back = [&](const ZVector& f) {
    QVector out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = dot(f, basis.row(i));
    return out;
  };
  std::vector<QVector> normals;
  for (const auto& f : c.facets()) normals.push_back(pull_back(f));
  for (const auto& e : c.equations()) {
    QVector q = pull_back(e);
    normals.push_back(q);
    for (auto& x : q) x = -x;
    normals.push_back(std::move(q));
  }
  return Cone::from_inequalities(m, normals);
}

Cone project(const Cone& c, const RationalMatrix& q) {
  if (q.rows() != c.ambient_dim()) throw DimensionError("projection matrix has the wrong number of rows");
  std::vector<QVector> images;
  for (const auto& g : c.generators()) images.push_back(row_times(to_rational(g), q));
  return Cone::from_generators(q.cols(), images);
}

std::vector<ZVector> spherical_roots_of(const Cone& c, const IntegerLattice& lattice) {
  if (lattice.ambient_rank() != c.ambient_dim()) throw DimensionError("lattice and cone live in different spaces");
  if (lattice.rank() != lattice.ambient_rank()) throw DomainError("lattice does not have full rank");
  if (!c.equations().empty() || c.facets().size() != c.ambient_dim() - c.lineality_dim())
    throw NotCosimplicialError();
  std::vector<ZVector> out;
  for (const auto& f : c.facets()) {
    auto coords = lattice.rational_coordinates(f);
    ZVector p = primitive_integer(std::span<const Rational>(*coords));
    out.push_back(lattice.from_coordinates(p));
  }
  return out;
}

}  // namespace sph
