#include "jforge/matrix.hpp"

namespace jforge {

Matrix::Matrix(int r, int c, std::initializer_list<Scalar> entries) : Matrix(r, c) {
  if (static_cast<size_t>(r) * c != entries.size())
    throw Error("DimensionMismatch", "initializer size does not match shape");
  size_t i = 0;
  for (const auto& e : entries) a[i++] = e;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols_) {
  if (cols_.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(cols_[0].size()), static_cast<int>(cols_.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols_[j].size()) != m.rows)
      throw Error("DimensionMismatch", "ragged columns");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols_[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows_) {
  if (rows_.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows_.size()), static_cast<int>(rows_[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows_[i].size()) != m.cols)
      throw Error("DimensionMismatch", "ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::is_zero() const { return is_zero_vec(a); }

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error("DimensionMismatch", "trace of non-square matrix");
  Scalar t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::pow(int k) const {
  if (!is_square()) throw Error("DimensionMismatch", "pow of non-square matrix");
  Matrix r = identity(rows);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw Error("DimensionMismatch", "matrix-vector size mismatch");
  Vec y(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    Scalar s;
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix operator+(const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw Error("DimensionMismatch", "matrix addition");
  Matrix C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
  return C;
}

Matrix operator-(const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw Error("DimensionMismatch", "matrix subtraction");
  Matrix C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
  return C;
}

Matrix operator*(const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw Error("DimensionMismatch", "matrix product");
  Matrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Scalar& aik = A.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Scalar& bkj = B.at(k, j);
        if (!bkj.is_zero()) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

Matrix operator*(const Scalar& s, const Matrix& A) {
  Matrix C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = s * A.a[i];
  return C;
}

Matrix operator-(const Matrix& A) { return Scalar(-1) * A; }

bool operator==(const Matrix& A, const Matrix& B) {
  return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

Matrix commutator(const Matrix& A, const Matrix& B) { return A * B - B * A; }

}  // namespace jforge
