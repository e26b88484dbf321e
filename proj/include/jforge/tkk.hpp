#pragma once

#include "jforge/forms.hpp"

namespace jforge {

/// Lie algebra with exact antisymmetric bracket tensor, grading labels and
/// an optional invariant form. Jacobi is verified at construction.
class LieAlgebra {
 public:
  static LieAlgebra create(std::vector<std::string> names, std::vector<int> grades,
                           Vec bracket_tensor,
                           std::optional<BilinearForm> invariant_form);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& grades() const { return grades_; }
  const std::optional<BilinearForm>& invariant_form() const { return form_; }

  const Scalar& c(int i, int j, int k) const {
    return br_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  Vec basis_bracket(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;
  Matrix killing_form() const;  // gram of tr(ad x ad y)

 private:
  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<int> grades_;
  Vec br_;
  std::optional<BilinearForm> form_;
};

/// H(J) = L(J^2) + [L(J),L(J)] with the Gamma form. The basis keeps pure
/// representatives: multiplication operators R_{u_a} (u_a in J^2) followed
/// by commutators [R_{e_i},R_{e_j}].
struct StructureSpace {
  std::vector<Vec> lsq_elems;                  // u_a in J^2
  std::vector<Matrix> lsq_ops;                 // R_{u_a}
  std::vector<std::pair<int, int>> br_pairs;   // generating (i,j), i<j
  std::vector<Matrix> br_ops;                  // [R_{e_i},R_{e_j}]
  Subspace lsq_span;                           // in operator coordinates
  Subspace br_span;
  Matrix gamma;                                // Gamma on the H basis

  int h_dim() const { return static_cast<int>(lsq_ops.size() + br_ops.size()); }
  std::vector<Matrix> h_basis() const;
  /// Coordinates of an operator in the H basis, if it lies in H.
  std::optional<Vec> decompose(const Matrix& op) const;
};

/// Typed outcome: L(J^2) and [L,L] intersect nontrivially, so the asserted
/// direct sum fails; any occurrence is a counterexample candidate.
struct NotDirect {
  Vec witness_op;  // flattened nonzero operator in the intersection
};

std::variant<StructureSpace, NotDirect> build_structure_space(
    const PseudoEuclideanAlgebra& p);

struct TkkResult {
  LieAlgebra lie;
  StructureSpace space;
  int n = 0;  // dim of J; layout is [J | H | Jbar]
};

/// The 3-graded quadratic Lie algebra J + H(J) + Jbar with
///   [T1,T2] = operator commutator, [T,a] = T(a), [T,bbar] = -(theta(T)b)bar,
///   [a,bbar] = 2 R_{ab} + 2 [R_a,R_b],   [a,a'] = [bbar,bbar'] = 0,
/// where theta fixes L(J^2) and negates [L,L], and the invariant form
///   B_L(a1+T1+b1bar, a2+T2+b2bar) = Gamma(T1,T2) + 2B(a1,b2) + 2B(a2,b1).
/// Jacobi, invariance and nondegeneracy are verified exactly; the
/// construction fails rather than return an unverified algebra.
TkkResult tkk_build(const PseudoEuclideanAlgebra& p);

/// Lift of a derivation D of J to Lie(J): D on J and Jbar, [D,-] on H.
/// Verified to be a Lie-algebra derivation; B_L-antisymmetric when D is
/// B-antisymmetric.
Matrix lift_derivation(const PseudoEuclideanAlgebra& p, const TkkResult& tkk,
                       const Matrix& d);

/// Subspace equality D_L([L,L]) == [L,L].
bool check_condition_d1(const PseudoEuclideanAlgebra& p, const Matrix& d);

/// Antisymmetry, nondegeneracy and the cyclic cocycle identity
/// omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0 on basis triples.
bool lie_symplectic_check(const LieAlgebra& g, const BilinearForm& omega);

}  // namespace jforge
