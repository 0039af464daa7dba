#pragma once

// Exact integer and rational linear algebra on small dense matrices.
//
// Everything here is arbitrary precision (GMP); there are no tolerances.
// Matrices are row-major and vectors are rows: a lattice or a subspace is
// always described by the rows of a matrix.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sph/errors.hpp"

namespace sph {

using Integer = mpz_class;
using Rational = mpq_class;
using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix from explicit rows; `cols` is needed when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw DimensionError("row " + std::to_string(i) + " has length " +
                             std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(rows.size(), cols);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != cols) throw DimensionError("ragged matrix literal");
      std::size_t j = 0;
      for (long v : r) m(i, j++) = T(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<std::vector<T>> row_vectors() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionError("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// First `n` rows.
  Matrix top(std::size_t n) const {
    Matrix m(n, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_), m.data_.begin());
    return m;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix to_rational(const IntMatrix& m);
QVector to_rational(const ZVector& v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

/// v * M for a row vector v.
ZVector row_times(std::span<const Integer> v, const IntMatrix& m);
QVector row_times(std::span<const Rational> v, const RationalMatrix& m);
/// M * v for a column vector v.
QVector times_column(const RationalMatrix& m, std::span<const Rational> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

/// Positive rescaling of a nonzero rational vector to a primitive integer
/// vector (gcd of entries 1, same direction). The zero vector maps to zero.
ZVector primitive_integer(std::span<const Rational> v);
ZVector primitive_integer(std::span<const Integer> v);

Integer gcd_of(std::span<const Integer> v);

// ---------------------------------------------------------------------------
// Hermite and Smith normal forms.

struct HermiteResult {
  IntMatrix form;       // full m x n matrix: nonzero rows first, then zero rows
  IntMatrix transform;  // unimodular m x m with transform * input == form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Row-style Hermite normal form with transform. Pivots are positive and the
/// entries above each pivot lie in [0, pivot).
HermiteResult hermite_with_transform(const IntMatrix& m);

/// The canonical row HNF basis of the row lattice of `m` (zero rows dropped).
IntMatrix hnf(const IntMatrix& m);

struct SmithResult {
  IntMatrix diagonal;  // left * input * right
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix right;     // unimodular, cols x cols
  std::vector<Integer> factors;  // nonzero invariant factors d1 | d2 | ...
};

SmithResult snf(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Rational linear algebra.

struct EchelonResult {
  RationalMatrix form;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

EchelonResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis (as rows) of the right kernel { x : m x = 0 }.
RationalMatrix nullspace(const RationalMatrix& m);

/// Coefficients c with sum_i c_i * rows(i) == v, if any. Unique whenever the
/// rows are independent.
std::optional<QVector> solve_row_combination(const RationalMatrix& rows, std::span<const Rational> v);

Rational determinant(const RationalMatrix& m);

/// Reduces v modulo the row space of an RREF matrix so that v vanishes on the
/// pivot columns. The result is a canonical representative of v + rowspace.
QVector reduce_modulo(std::span<const Rational> v, const EchelonResult& echelon);

std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

}  // namespace sph
