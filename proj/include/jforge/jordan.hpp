#pragma once

#include <optional>
#include <string>

#include "jforge/linalg.hpp"

namespace jforge {

/// Commutative structure-constant tensor: e_i * e_j = sum_k c[i][j][k] e_k.
struct MulTable {
  int dim = 0;
  Vec c;  // dim^3 entries

  MulTable() = default;
  explicit MulTable(int n) : dim(n), c(static_cast<size_t>(n) * n * n) {}

  Scalar& at(int i, int j, int k) {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Scalar& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  /// Sets e_i*e_j = e_j*e_i = v.
  void set_product(int i, int j, const Vec& v);
  Vec basis_product(int i, int j) const;
};

struct Violation {
  std::vector<int> index;
  std::string lhs;
  std::string rhs;
  std::string what;  // which identity
};

struct IdentityReport {
  bool commutative = false;
  bool jordan = false;
  std::optional<Violation> first_violation;
  bool ok() const { return commutative && jordan; }
};

/// Commutativity plus the full linearization of the Jordan identity
/// x(yx^2)=(xy)x^2, checked as
///   [R_{wz},R_x] + [R_{zx},R_w] + [R_{xw},R_z] = 0
/// on all basis triples. The trilinear form is symmetric, so unordered
/// triples suffice; over a field of characteristic zero this is equivalent
/// to the Jordan identity for all elements. (Checking the quartic identity
/// on basis vectors alone would not be sufficient.)
IdentityReport check_jordan(const MulTable& t);

class JordanAlgebra {
 public:
  JordanAlgebra() = default;

  /// Verifies commutativity + Jordan before constructing; throws
  /// Error("NotJordan") otherwise.
  static JordanAlgebra create(std::vector<std::string> names, MulTable mul);
  /// For tables already known Jordan (catalog, verified constructions).
  static JordanAlgebra create_unchecked(std::vector<std::string> names, MulTable mul);

  int dim() const { return mul_.dim; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const MulTable& mul() const { return mul_; }

  Vec product(const Vec& x, const Vec& y) const;
  Vec basis_product(int i, int j) const { return mul_.basis_product(i, j); }

  /// R_x, the multiplication operator y -> xy = yx.
  Matrix mult_operator(const Vec& x) const;
  Matrix basis_mult_operator(int i) const;

  friend bool operator==(const JordanAlgebra& a, const JordanAlgebra& b) {
    return a.names_ == b.names_ && a.mul_.dim == b.mul_.dim && a.mul_.c == b.mul_.c;
  }

 private:
  std::vector<std::string> names_;
  MulTable mul_;
};

std::vector<std::string> default_names(int n);

Vec associator(const JordanAlgebra& a, const Vec& x, const Vec& y, const Vec& z);
Subspace associator_space(const JordanAlgebra& a);

struct CoreSubspaces {
  Subspace ann;     // {x : xJ = 0}
  Subspace center;  // {x : (x,y,z)=(y,x,z)=(y,z,x)=0}
  Subspace square;  // span JJ
};
CoreSubspaces annulator_and_center(const JordanAlgebra& a);

/// Span of all products u*v, u in U, v in V.
Subspace subspace_product(const JordanAlgebra& a, const Subspace& u, const Subspace& v);

bool is_ideal(const JordanAlgebra& a, const Subspace& s);

struct IdealClosureResult {
  Subspace ideal;
  bool seed_is_ideal = false;
  std::optional<int> nilpotency_class;  // of the whole algebra; none if not nilpotent
};

/// Smallest ideal containing the seed (spinning), plus the nilpotency class
/// of the algebra computed from the chain J^k = sum_{i+j=k} J^i J^j.
IdealClosureResult ideal_closure(const JordanAlgebra& a, const Subspace& seed);

bool is_nilpotent(const JordanAlgebra& a);
std::optional<int> nilpotency_class(const JordanAlgebra& a);

struct QuotientResult {
  JordanAlgebra algebra;        // on the echelon complement of the ideal
  Matrix projection;            // dim(A) -> dim(A/I) coordinates
  std::vector<Vec> section;     // representative vectors in A for the quotient basis
};
QuotientResult quotient(const JordanAlgebra& a, const Subspace& ideal);

/// True iff phi is invertible and phi(xy) = phi(x)phi(y) on all basis pairs.
bool check_isomorphism(const JordanAlgebra& a, const JordanAlgebra& b, const Matrix& phi);

/// Sums of up to `max_terms` distinct basis vectors of K^n; evaluating a
/// degree-`max_terms` identity on this set is equivalent, in characteristic
/// zero, to checking its full polarization on all basis tuples.
std::vector<Vec> polarization_points(int n, int max_terms);

/// True iff D(xy) = D(x)y + xD(y) on all basis pairs.
bool is_derivation(const JordanAlgebra& a, const Matrix& d);

}  // namespace jforge
