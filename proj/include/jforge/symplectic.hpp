#pragma once

#include "jforge/double_ext.hpp"

namespace jforge {

struct SymplecticReport {
  bool antisymmetric = false;
  bool nondegenerate = false;
  bool cyclic = false;  // omega(xy,z) + omega(yz,x) + omega(zx,y) = 0
  std::optional<Violation> first_violation;
  bool ok() const { return antisymmetric && nondegenerate && cyclic; }
};

SymplecticReport check_symplectic(const JordanAlgebra& a, const BilinearForm& omega);

/// omega(x,y) = B(D x, y) ties symplectic forms to invertible
/// B-antisymmetric derivations; the report carries the three properties.
struct BridgeReport {
  Matrix d;
  BilinearForm omega;
  bool derivation = false;
  bool b_antisymmetric = false;
  bool invertible = false;
  bool symplectic() const { return derivation && b_antisymmetric && invertible; }
};

BridgeReport bridge_from_omega(const PseudoEuclideanAlgebra& p, const BilinearForm& omega);
BridgeReport bridge_from_derivation(const PseudoEuclideanAlgebra& p, const Matrix& d);

/// Antisymmetric element of J (x) J: r = sum r_ij e_i (x) e_j.
struct RMatrix {
  Matrix t;
  static RMatrix from_matrix(Matrix m);  // throws NotAntisymmetric
};

/// r built from a symplectic form as the inverse of its gram matrix.
RMatrix r_from_symplectic_form(const BilinearForm& omega);
/// r whose associated operator R.phi equals the given B-antisymmetric U.
RMatrix r_from_u(const PseudoEuclideanAlgebra& p, const Matrix& u);

struct YbeResult {
  Matrix u;          // U = R o phi, phi(x) = B(x,.)
  bool cjr_zero = false;
  std::optional<JordanAlgebra> star;  // x*y = U(x)y + xU(y), when it is Jordan
  bool star_morphism = false;         // U(x*y) = U(x)U(y)
};

/// Evaluates C_J(r) = r12 r13 - r12 r23 + r13 r23 both as an exact tensor
/// and through the trilinear functional identity; the two evaluators must
/// agree componentwise (mutual oracles). When C_J(r) = 0 the star product
/// is built and verified.
YbeResult ybe_check(const PseudoEuclideanAlgebra& p, const RMatrix& r);

struct ImageSymplectic {
  std::vector<Vec> image_basis;   // echelon basis of Im(U) inside J
  JordanAlgebra image_algebra;    // induced product (closure verified)
  BilinearForm omega;             // omega(Ux,Uy) = B(Ux,y) on the image basis
};

/// Im(U) with its symplectic form; requires cjr_zero.
ImageSymplectic image_u_symplectic(const PseudoEuclideanAlgebra& p, const RMatrix& r);

/// Delta(e_i) = sum_jk delta[i][j][k] e_j (x) e_k.
struct Comultiplication {
  int dim = 0;
  Vec delta;

  static Comultiplication zero(int n);
  Scalar& at(int i, int j, int k) {
    return delta[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Scalar& at(int i, int j, int k) const {
    return delta[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  bool cocommutative() const;
};

Comultiplication delta_r(const JordanAlgebra& v, const RMatrix& r);

struct DoubleResult {
  Comultiplication delta;
  JordanAlgebra dual;                // product on V* (dual of the coalgebra)
  MulTable double_table;             // on V + V*
  std::vector<std::string> double_names;
  bool is_bialgebra = false;         // check_jordan(D(V))
  std::optional<JordanAlgebra> double_algebra;  // present when is_bialgebra
};

DoubleResult delta_r_and_double(const JordanAlgebra& v, const RMatrix& r);
DoubleResult delta_and_double(const JordanAlgebra& v, const Comultiplication& delta);

/// Symplectic pseudo-euclidean algebra: (J,B) with omega and its derivation.
struct SymplecticAlgebra {
  PseudoEuclideanAlgebra p;
  BilinearForm omega;
  Matrix d;  // the invertible B-antisymmetric derivation of omega
};

SymplecticAlgebra make_symplectic(const PseudoEuclideanAlgebra& p,
                                  const BilinearForm& omega);

/// Symplectic pseudo-euclidean double extension of (P1,B1,omega1) by means
/// of (D,x0,a0,lambda,k). Checks the compatibility equations
///   D(a0) = lambda x0 + 1/2 delta(x0),
///   R_{a0} = delta D - D delta + lambda D,
///   k lambda = B1(a0, x0)
/// and returns the GDE with its verified symplectic structure
///   Delta(b) = lambda b, Delta(x) = delta(x) - B1(a0,x) b,
///   Delta(a) = a0 - lambda a.
SymplecticAlgebra symplectic_double_extension(const SymplecticAlgebra& s1,
                                              const AdmissiblePair& pair, const Vec& a0,
                                              const Scalar& lambda, const Scalar& k);

struct SymplecticPeel {
  SymplecticAlgebra w;  // (W, T, Omega)
  AdmissiblePair pair;
  Vec a0;
  Scalar lambda;
  Scalar k;
  Vec b;
  Vec a;
  std::vector<Vec> w_basis;
  Matrix isometry;
};

/// Inverse construction: picks an eigenvector of Delta inside Ann(P)
/// (rational eigenvalue required - SplitFailure otherwise), peels, extracts
/// (delta, a0, lambda, k) and verifies everything including the round trip.
SymplecticPeel peel_symplectic_double_extension(const PseudoEuclideanAlgebra& p,
                                                const BilinearForm& omega);

/// Peel at a given Delta-eigenvector b in Ann (and optionally a given
/// hyperbolic partner a).
SymplecticPeel peel_symplectic_at(const PseudoEuclideanAlgebra& p,
                                  const BilinearForm& omega, const Vec& b,
                                  const Vec* a_hint);

}  // namespace jforge
