#pragma once

#include "jforge/represent.hpp"

namespace jforge {

/// Albert form A(x,y) = tr(R_{xy}); symmetric and associative, verified.
BilinearForm albert_form(const JordanAlgebra& a);

/// B_pi(x,y) = tr(pi(xy)).
BilinearForm trace_form_of_rep(const Representation& pi);

struct RadicalResult {
  Subspace radical;       // ker(Albert form), verified a nilpotent ideal
  bool semisimple = false;
};
RadicalResult radical_and_semisimplicity(const JordanAlgebra& a);

enum class CasimirClass { invertible, nilpotent, mixed };

struct CasimirData {
  Vec c;          // sum e_i e'_i over a B-dual pair of bases
  Matrix rc;      // R_c
  CasimirClass classification = CasimirClass::mixed;
};

/// The Casimir-type operator: B(R_c x, y) = A(x,y), [R_c,R_x] = 0 and
/// dual-basis independence are verified at construction.
CasimirData casimir(const PseudoEuclideanAlgebra& p);

struct FittingResult {
  Subspace s;       // image of R_c^dim: the largest semisimple ideal
  Subspace s_perp;  // kernel of R_c^dim
};
FittingResult fitting(const PseudoEuclideanAlgebra& p);

struct IndexData {
  std::vector<BilinearForm> basis_of_forms;  // canonical basis of F(J)
  int index = 0;
};

/// dim of the space of associative symmetric bilinear forms, by brute-force
/// linear solve over the upper-triangular gram unknowns.
IndexData index(const JordanAlgebra& a);

struct ReductiveReport {
  bool reductive = false;        // radical == Ann
  int dim_ann = 0;
  int index = 0;
  int component_count = 0;
  bool semisimple = false;
  bool square_is_whole = false;  // J^2 == J
  bool criterion_index_eq_r = false;      // ind(J) == r
  bool criterion_reductive_smallann = false;  // reductive && dim Ann <= 1
  bool corollary1_consistent = false;  // (ind==r) <=> (reductive && dim Ann <= 1)
  bool corollary2_consistent = false;  // semisimple <=> (J^2==J && ind==r)
};

/// Evaluates the two index corollaries on a decomposition into nondegenerate
/// mutually orthogonal B-irreducible ideals (the checkable parts of that
/// contract are enforced; mixed Casimir classification on a component
/// disproves B-irreducibility and is rejected).
ReductiveReport reductive_report(const PseudoEuclideanAlgebra& p,
                                 const std::vector<Subspace>& components);

/// Candidate ideals for splitting / peeling: the radical, the Fitting
/// components, and ideal closures of annulator lines. Suggestions only -
/// proper nonzero ideals, deduplicated, no completeness claim (general
/// minimal-ideal search is out of scope).
std::vector<Subspace> decomposition_candidates(const PseudoEuclideanAlgebra& p);

/// From an intertwiner phi between the adjoint and coadjoint representations
/// (phi o R_x = rho(x) o phi), builds a nondegenerate associative symmetric
/// form via the T_s/T_a surgery. phi columns are dual coordinates of
/// phi(e_i).
BilinearForm form_from_intertwiner(const JordanAlgebra& a, const Matrix& phi);

}  // namespace jforge
