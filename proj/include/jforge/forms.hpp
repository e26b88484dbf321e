#pragma once

#include "jforge/jordan.hpp"

namespace jforge {

struct BilinearForm {
  Matrix gram;

  BilinearForm() = default;
  explicit BilinearForm(Matrix g) : gram(std::move(g)) {}
  static BilinearForm zero(int n) { return BilinearForm(Matrix(n, n)); }

  int dim() const { return gram.rows; }
  Scalar eval(const Vec& x, const Vec& y) const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_nondegenerate() const;
};

struct PepReport {
  bool symmetric = false;
  bool nondegenerate = false;
  bool associative = false;
  std::optional<Violation> first_violation;
  bool ok() const { return symmetric && nondegenerate && associative; }
};

/// The pseudo-euclidean predicates: symmetry, nondegeneracy and
/// B(xy,z) = B(x,yz) over all basis triples.
PepReport check_pep(const JordanAlgebra& a, const BilinearForm& b);

/// True iff B(f(x),y) == B(x,f(y)) (resp. == -B(x,f(y))) on all basis pairs.
bool is_b_symmetric(const BilinearForm& b, const Matrix& f);
bool is_b_antisymmetric(const BilinearForm& b, const Matrix& f);

class PseudoEuclideanAlgebra {
 public:
  PseudoEuclideanAlgebra() = default;

  /// Verifies check_pep; throws Error("NotPseudoEuclidean") on failure.
  static PseudoEuclideanAlgebra create(JordanAlgebra a, BilinearForm b);
  static PseudoEuclideanAlgebra create_unchecked(JordanAlgebra a, BilinearForm b);

  const JordanAlgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  int dim() const { return algebra_.dim(); }

 private:
  JordanAlgebra algebra_;
  BilinearForm form_;
};

/// {x : B(x,S) = 0}.
Subspace orthogonal_complement(const PseudoEuclideanAlgebra& p, const Subspace& s);

struct SplitOk {
  PseudoEuclideanAlgebra first;   // P restricted to I
  PseudoEuclideanAlgebra second;  // P restricted to I^perp
  std::vector<Vec> first_basis;   // bases inside P
  std::vector<Vec> second_basis;
};
struct Degenerate {};

/// Splits P = I \perp I^perp when B restricted to the ideal I is
/// nondegenerate; Degenerate (typed, not an error) otherwise.
std::variant<SplitOk, Degenerate> split_by_ideal(const PseudoEuclideanAlgebra& p,
                                                 const Subspace& ideal);

/// Vectors e'_j with B(e_i, e'_j) = delta_ij.
std::vector<Vec> dual_basis(const PseudoEuclideanAlgebra& p);

/// Block-diagonal orthogonal direct sum.
PseudoEuclideanAlgebra orthogonal_direct_sum(const PseudoEuclideanAlgebra& p1,
                                             const PseudoEuclideanAlgebra& p2);

/// Restriction of product and form to a multiplication-closed subspace given
/// by explicit basis vectors. Throws if the basis is not closed.
PseudoEuclideanAlgebra restrict_to_subalgebra(const PseudoEuclideanAlgebra& p,
                                              const std::vector<Vec>& basis,
                                              const std::string& name_prefix);

}  // namespace jforge
