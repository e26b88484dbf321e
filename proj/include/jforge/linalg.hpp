#pragma once

#include <optional>
#include <variant>

#include "jforge/matrix.hpp"

namespace jforge {

/// Reduced row-echelon form (Gauss-Jordan, leading entries 1, zero rows
/// dropped when `drop_zero_rows`).
Matrix rref(Matrix m, bool drop_zero_rows = true);

/// Linear subspace of K^ambient in canonical form: the basis rows are the
/// nonzero rows of an RREF matrix, so two spans of the same space compare
/// bit-identically.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;  // canonical RREF rows

  static Subspace zero(int ambient) { return Subspace{ambient, {}}; }
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int dim() const { return static_cast<int>(basis.size()); }
  bool is_zero() const { return basis.empty(); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

enum class SubspaceOp { sum, intersect, equals, contains };
/// Subspace arithmetic behind one switch; `equals` and `contains` return a
/// boolean, the others a subspace.
std::variant<Subspace, bool> subspace_algebra(const Subspace& u, const Subspace& v,
                                              SubspaceOp op);

struct SolveResult {
  std::optional<Vec> solution;  // one particular solution of A x = b
  Subspace kernel;              // canonical basis of ker A
};

/// Exact solution set of A x = b. Pass b == nullptr for kernel only.
SolveResult solve_and_kernel(const Matrix& A, const Vec* b);

/// Coordinates of v in the given (independent) spanning set, if v lies in
/// its span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& span_vectors, const Vec& v);

Scalar determinant(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);
int rank(const Matrix& A);

/// Extends `start` (independent vectors) to a basis of K^n by standard
/// vectors, greedily in index order. Deterministic.
std::vector<Vec> extend_to_basis(int n, std::vector<Vec> start);

/// Complement of a subspace spanned by standard vectors avoiding the pivots
/// of S (the "echelon complement"). Deterministic.
std::vector<Vec> echelon_complement(const Subspace& s);

/// Polynomial with exact rational coefficients, lowest degree first.
struct Poly {
  Vec c;

  int degree() const;
  Scalar eval(const Scalar& x) const;
  static Poly from_coeffs(Vec c);
  std::string str() const;  // human-readable, variable "x"
};

/// det(x*I - A), monic.
Poly char_poly(const Matrix& A);

/// All rational roots with multiplicity, via integer root bounds + the
/// rational root theorem, then deflation. Returns roots and the remaining
/// (rational-root-free) cofactor.
struct RootSplit {
  std::vector<std::pair<Scalar, int>> roots;  // (root, multiplicity)
  Poly remainder;                             // no rational roots; degree 0 iff split
};
RootSplit rational_roots(const Poly& p);

struct Eigenpair {
  Scalar lambda;
  Subspace space;  // generalized eigenspace ker (A - lambda I)^n
};

/// Typed outcome for a characteristic polynomial that does not split over
/// the rationals: the rational-root-free factors left after deflation.
struct SplitFailure {
  std::vector<Poly> nonlinear_factors;
};

using SpectralResult = std::variant<std::vector<Eigenpair>, SplitFailure>;

/// Rational spectral decomposition: eigenvalues with generalized
/// eigenspaces whose dimensions sum to the ambient dimension, or
/// SplitFailure. Never approximates.
SpectralResult rational_spectral(const Matrix& A);

}  // namespace jforge
