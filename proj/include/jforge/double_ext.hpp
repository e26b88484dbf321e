#pragma once

#include "jforge/represent.hpp"

namespace jforge {

/// Data of a double extension: pseudo-euclidean base (J1,B1), a Jordan
/// algebra J2 acting by an admissible representation through B1-symmetric
/// operators, and an associative symmetric (possibly zero) form on J2.
struct DoubleExtensionSpec {
  PseudoEuclideanAlgebra base;  // (J1, B1)
  JordanAlgebra top;            // J2
  std::vector<Matrix> pi;       // pi(e_i) on J1
  BilinearForm gamma;           // on J2

  int out_dim() const { return 2 * top.dim() + base.dim(); }
};

/// J2 + J1 + J2* with product
///   (x+y+f)(x'+y'+f') = xx' + yy' + pi(x)y' + pi(x')y + f'.R_x + f.R_{x'}
///                       + phi(y,y'),   phi(y,y')(x) = B1(pi(x)y, y'),
/// and form B(x+y+f, x'+y'+f') = gamma(x,x') + B1(y,y') + f(x') + f'(x).
PseudoEuclideanAlgebra double_extension(const DoubleExtensionSpec& spec);

struct GdeSpec {
  PseudoEuclideanAlgebra base;  // (J1, B1)
  AdmissiblePair pair;          // D must be B1-symmetric
  Scalar k;

  int out_dim() const { return base.dim() + 2; }
};

/// Ka + J1 + Kb with
///   x*y = xy + B1(D x, y) b,  a*x = D(x) + B1(x0,x) b,  a*a = x0 + k b,
///   b in Ann; B extends B1 hyperbolically: B(a,b)=1, B(a,a)=B(b,b)=0.
/// Basis order: a, J1, b.
PseudoEuclideanAlgebra generalized_double_extension(const GdeSpec& spec);

struct GdePeel {
  PseudoEuclideanAlgebra w;     // the peeled base (W, B|W)
  std::vector<Vec> w_basis;     // W inside P
  AdmissiblePair pair;
  Scalar k;
  Vec a;                        // B(a,b)=1, B(a,a)=0
  Vec b;
  Matrix isometry;              // re-extension basis -> P coordinates, verified
};

/// Inverse of the generalized double extension at a direction b in the
/// annulator with B(b,b)=0. Verifies the reconstruction: re-extending the
/// peeled data reproduces P through `isometry` exactly.
GdePeel peel_gde(const PseudoEuclideanAlgebra& p, const Vec& b);

/// Same, with a caller-chosen hyperbolic partner a (B(a,b)=1, B(a,a)=0).
GdePeel peel_gde_at(const PseudoEuclideanAlgebra& p, const Vec& b, const Vec& a);

struct DePeel {
  PseudoEuclideanAlgebra w;     // I/I^perp realized on a concrete complement
  std::vector<Vec> w_basis;     // representatives inside P
  JordanAlgebra v;              // complement subalgebra
  std::vector<Vec> v_basis;
  std::vector<Matrix> pi;       // action of V on W
  BilinearForm gamma;           // B restricted to V
  Matrix isometry;              // double-extension basis -> P coordinates, verified
};

/// Inverse of the double extension along a degenerate maximal ideal I with
/// complementary subalgebra (the echelon complement must be closed).
DePeel peel_de(const PseudoEuclideanAlgebra& p, const Subspace& ideal);

/// Checks that `map` carries (A,BA) to (B,BB) multiplicatively and
/// isometrically (columns of `map` are images of A's basis).
bool is_isometric_isomorphism(const PseudoEuclideanAlgebra& a,
                              const PseudoEuclideanAlgebra& b, const Matrix& map);

}  // namespace jforge
