#pragma once
/// @file linalg.hpp
/// @brief Small exact linear algebra over the rationals.
///
/// Vectors are ambient coordinate tuples, matrices act on them by the
/// usual column convention.  Dimensions in this library never exceed 16
/// (two copies of an E8 lattice), so plain Gaussian elimination with
/// exact arithmetic is both simple and fast.

#include <cstddef>
#include <string>
#include <vector>

#include "minorb/errors.hpp"
#include "minorb/rational.hpp"

namespace minorb {

using Vec = std::vector<Rational>;

[[nodiscard]] inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

[[nodiscard]] inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

[[nodiscard]] inline Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

[[nodiscard]] inline Vec operator*(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

[[nodiscard]] inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

[[nodiscard]] inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

[[nodiscard]] inline std::string to_string(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].str();
  }
  return s + ")";
}

/// Dense square or rectangular matrix of rationals, stored by rows.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Vec> entry;  // entry[r][c]

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entry(r, Vec(c)) {}

  [[nodiscard]] static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entry[i][i] = 1;
    return m;
  }

  [[nodiscard]] Vec apply(const Vec& v) const {
    if (v.size() != cols) throw InternalError("matrix/vector size mismatch");
    Vec r(rows);
    for (std::size_t i = 0; i < rows; ++i) r[i] = dot(entry[i], v);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
};

/// Matrix product a*b (composition of the corresponding maps).
[[nodiscard]] inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InternalError("matrix size mismatch");
  Matrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.entry[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.entry[i][j] += a.entry[i][k] * b.entry[k][j];
    }
  return r;
}

/// Solves the square nonsingular system a*x = b by Gaussian elimination.
/// Throws InternalError on a singular matrix: every solve performed by
/// the library is against a Gram matrix of linearly independent roots.
[[nodiscard]] inline Vec solve(Matrix a, Vec b) {
  if (a.rows != a.cols || b.size() != a.rows) throw InternalError("solve: size mismatch");
  const std::size_t n = a.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.entry[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InternalError("solve: singular matrix");
    std::swap(a.entry[pivot], a.entry[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a.entry[col][col];
    for (std::size_t j = col; j < n; ++j) a.entry[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a.entry[row][col].is_zero()) continue;
      const Rational f = a.entry[row][col];
      for (std::size_t j = col; j < n; ++j) a.entry[row][j] -= f * a.entry[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace minorb
