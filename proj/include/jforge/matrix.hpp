#pragma once

#include <initializer_list>

#include "jforge/scalar.hpp"

namespace jforge {

/// Dense row-major matrix of exact rationals.
struct Matrix {
  int rows = 0;
  int cols = 0;
  Vec a;  // rows*cols entries, row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Matrix(int r, int c, std::initializer_list<Scalar> entries);

  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols_);
  static Matrix from_rows(const std::vector<Vec>& rows_);

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  bool is_zero() const;
  bool is_square() const { return rows == cols; }

  Matrix transpose() const;
  Scalar trace() const;
  Matrix pow(int k) const;  // k >= 0, square only

  Vec apply(const Vec& x) const;  // matrix * column vector

  friend Matrix operator+(const Matrix& A, const Matrix& B);
  friend Matrix operator-(const Matrix& A, const Matrix& B);
  friend Matrix operator*(const Matrix& A, const Matrix& B);
  friend Matrix operator*(const Scalar& s, const Matrix& A);
  friend Matrix operator-(const Matrix& A);
  friend bool operator==(const Matrix& A, const Matrix& B);

  /// As one long vector (for treating operators as elements of K^{n*m}).
  const Vec& flat() const { return a; }
};

Matrix commutator(const Matrix& A, const Matrix& B);

}  // namespace jforge
