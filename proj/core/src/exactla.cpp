#include "sph/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace sph {

InvalidDatumError::InvalidDatumError(std::string context, std::vector<Violation> violations)
    : Error([&] {
        std::string msg = context;
        for (const auto& v : violations) msg += "\n  [" + v.tag + "] " + v.message;
        return msg;
      }()),
      context_(std::move(context)),
      violations_(std::move(violations)) {}

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Replaces rows (p, i) by (s*p + t*i, x*i - y*p). The 2x2 block
// [[s, t], [-y, x]] has determinant 1 whenever s*x + t*y == 1.
void combine_rows(IntMatrix& m, std::size_t p, std::size_t i, const Integer& s, const Integer& t,
                  const Integer& y, const Integer& x) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Integer np = s * m(p, k) + t * m(i, k);
    Integer ni = x * m(i, k) - y * m(p, k);
    m(p, k) = std::move(np);
    m(i, k) = std::move(ni);
  }
}

void combine_cols(IntMatrix& m, std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                  const Integer& y, const Integer& x) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Integer np = s * m(k, p) + t * m(k, j);
    Integer nj = x * m(k, j) - y * m(k, p);
    m(k, p) = std::move(np);
    m(k, j) = std::move(nj);
  }
}

struct Bezout {
  Integer g, s, t, a_over_g, b_over_g;
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(r.a_over_g.get_mpz_t(), a.get_mpz_t(), r.g.get_mpz_t());
  mpz_divexact(r.b_over_g.get_mpz_t(), b.get_mpz_t(), r.g.get_mpz_t());
  return r;
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& v : m.row(i)) v = -v;
}

void add_multiple_of_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) += factor * m(src, k);
}

void add_multiple_of_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, dst) += factor * m(k, src);
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return multiply(a, b); }

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

QVector to_rational(const ZVector& v) { return {v.begin(), v.end()}; }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

ZVector row_times(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("row_times: length mismatch");
  ZVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

QVector row_times(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("row_times: length mismatch");
  QVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

QVector times_column(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DimensionError("times_column: length mismatch");
  QVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZVector primitive_integer(std::span<const Integer> v) {
  ZVector out(v.begin(), v.end());
  Integer g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

ZVector primitive_integer(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational t = v[i] * l;
    scaled[i] = t.get_num();
  }
  return primitive_integer(std::span<const Integer>(scaled));
}

// ---------------------------------------------------------------------------

HermiteResult hermite_with_transform(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t j = 0; j < a.cols() && p < a.rows(); ++j) {
    for (std::size_t i = p + 1; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      if (a(p, j) == 0) {
        a.swap_rows(p, i);
        u.swap_rows(p, i);
        continue;
      }
      Bezout b = bezout(a(p, j), a(i, j));
      combine_rows(a, p, i, b.s, b.t, b.b_over_g, b.a_over_g);
      combine_rows(u, p, i, b.s, b.t, b.b_over_g, b.a_over_g);
    }
    if (a(p, j) == 0) continue;
    if (a(p, j) < 0) {
      negate_row(a, p);
      negate_row(u, p);
    }
    for (std::size_t r = 0; r < p; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, j).get_mpz_t(), a(p, j).get_mpz_t());
      if (q == 0) continue;
      add_multiple_of_row(a, r, p, -q);
      add_multiple_of_row(u, r, p, -q);
    }
    pivots.push_back(j);
    ++p;
  }
  return {std::move(a), std::move(u), p, std::move(pivots)};
}

IntMatrix hnf(const IntMatrix& m) {
  HermiteResult h = hermite_with_transform(m);
  return h.form.top(h.rank);
}

SmithResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> factors;

  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(bi, bj))) {
            bi = i;
            bj = j;
            found = true;
          }
        }
      if (!found) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, bi);
      left.swap_rows(t, bi);
      a.swap_cols(t, bj);
      right.swap_cols(t, bj);

      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        // Exact multiples are cleared by subtraction; Bezout only when the
        // pivot strictly shrinks, otherwise the loop can cycle.
        if (mpz_divisible_p(a(i, t).get_mpz_t(), a(t, t).get_mpz_t())) {
          Integer q = a(i, t) / a(t, t);
          add_multiple_of_row(a, i, t, -q);
          add_multiple_of_row(left, i, t, -q);
          continue;
        }
        Bezout b = bezout(a(t, t), a(i, t));
        combine_rows(a, t, i, b.s, b.t, b.b_over_g, b.a_over_g);
        combine_rows(left, t, i, b.s, b.t, b.b_over_g, b.a_over_g);
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        if (mpz_divisible_p(a(t, j).get_mpz_t(), a(t, t).get_mpz_t())) {
          Integer q = a(t, j) / a(t, t);
          add_multiple_of_col(a, j, t, -q);
          add_multiple_of_col(right, j, t, -q);
          continue;
        }
        Bezout b = bezout(a(t, t), a(t, j));
        combine_cols(a, t, j, b.s, b.t, b.b_over_g, b.a_over_g);
        combine_cols(right, t, j, b.s, b.t, b.b_over_g, b.a_over_g);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows() && clean; ++i) clean = a(i, t) == 0;
      for (std::size_t j = t + 1; j < a.cols() && clean; ++j) clean = a(t, j) == 0;
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      std::size_t bad_row = 0;
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            divisible = false;
            bad_row = i;
            break;
          }
      if (!divisible) {
        add_multiple_of_row(a, t, bad_row, 1);
        add_multiple_of_row(left, t, bad_row, 1);
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
    factors.push_back(a(t, t));
  }
  return {std::move(a), std::move(left), std::move(right), std::move(factors)};
}

// ---------------------------------------------------------------------------

EchelonResult rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t i = r;
    while (i < a.rows() && a(i, j) == 0) ++i;
    if (i == a.rows()) continue;
    a.swap_rows(r, i);
    Rational inv = 1 / a(r, j);
    for (auto& v : a.row(r)) v *= inv;
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (k == r || a(k, j) == 0) continue;
      Rational f = a(k, j);
      for (std::size_t c = j; c < a.cols(); ++c) a(k, c) -= f * a(r, c);
    }
    pivots.push_back(j);
    ++r;
  }
  return {a.top(r), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }
std::size_t rank(const IntMatrix& m) { return hermite_with_transform(m).rank; }

RationalMatrix nullspace(const RationalMatrix& m) {
  EchelonResult e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.form(k, f);
    basis.append_row(x);
  }
  return basis;
}

std::optional<QVector> solve_row_combination(const RationalMatrix& rows, std::span<const Rational> v) {
  if (v.size() != rows.cols()) throw DimensionError("solve_row_combination: length mismatch");
  const std::size_t k = rows.rows();
  RationalMatrix aug(rows.cols(), k + 1);
  for (std::size_t j = 0; j < rows.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = rows(i, j);
    aug(j, k) = v[j];
  }
  EchelonResult e = rref(aug);
  QVector c(k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    c[e.pivots[r]] = e.form(r, k);
  }
  return c;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::size_t i = j;
    while (i < a.rows() && a(i, j) == 0) ++i;
    if (i == a.rows()) return 0;
    if (i != j) {
      a.swap_rows(i, j);
      det = -det;
    }
    det *= a(j, j);
    for (std::size_t k = j + 1; k < a.rows(); ++k) {
      if (a(k, j) == 0) continue;
      Rational f = a(k, j) / a(j, j);
      for (std::size_t c = j; c < a.cols(); ++c) a(k, c) -= f * a(j, c);
    }
  }
  return det;
}

QVector reduce_modulo(std::span<const Rational> v, const EchelonResult& echelon) {
  QVector out(v.begin(), v.end());
  for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
    Rational f = out[echelon.pivots[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * echelon.form(k, j);
  }
  return out;
}

namespace {
template <class T>
std::string join_vector(std::span<const T> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ']';
  return os.str();
}
}  // namespace

std::string to_string(std::span<const Integer> v) { return join_vector(v); }
std::string to_string(std::span<const Rational> v) { return join_vector(v); }

}  // namespace sph
