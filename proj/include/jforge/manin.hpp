#pragma once

#include "jforge/symplectic.hpp"

namespace jforge {

/// Pseudo-euclidean algebra split into two totally isotropic subalgebras,
/// optionally carrying a symplectic form vanishing on each side.
struct ManinTriple {
  PseudoEuclideanAlgebra p;
  Subspace u;
  Subspace v;
  std::optional<BilinearForm> omega;
};

struct ManinReport {
  bool u_subalgebra = false;
  bool v_subalgebra = false;
  bool u_isotropic = false;
  bool v_isotropic = false;
  bool direct_sum = false;
  bool omega_ok = true;  // isotropy of both sides + symplectic, when present
  std::optional<Violation> first_violation;
  bool ok() const {
    return u_subalgebra && v_subalgebra && u_isotropic && v_isotropic && direct_sum &&
           omega_ok;
  }
};

ManinReport check_manin(const PseudoEuclideanAlgebra& p, const Subspace& u,
                        const Subspace& v, const BilinearForm* omega);
ManinReport check_manin(const ManinTriple& m);

/// GDE with k = 0 under D(V) <= V and x0 in V: U' = U + Kb, V' = V + Ka.
ManinTriple manin_double_extension(const ManinTriple& m, const AdmissiblePair& pair);

struct ManinPeel {
  ManinTriple triple;      // the peeled (W = U' + V', T)
  AdmissiblePair pair;
  Scalar k;                // always 0 for Manin extensions; reported
  Vec b;
  Vec a;
  std::vector<Vec> w_basis;
  bool swapped = false;    // true when the annulator direction came from V
  Matrix isometry;
};

/// Peels at b in U cap Ann (preferred) or V cap Ann; when only the V side
/// works the roles of U and V are swapped in the result.
ManinPeel peel_manin(const ManinTriple& m);

/// Splits a symplectic pseudo-euclidean algebra along the generalized
/// eigenspaces of the derivation of omega: positive rational eigenvalues go
/// to U, negative to V. Verifies J(l)J(m) <= J(l+m) and all isotropies.
ManinTriple spectral_split(const PseudoEuclideanAlgebra& p, const BilinearForm& omega);

/// Symplectic-Manin double extension: the syor and thman conditions
/// together, a0 in V, k = 0; Delta stabilizes both new sides (verified).
ManinTriple symplectic_manin_double_extension(const ManinTriple& m,
                                              const AdmissiblePair& pair, const Vec& a0,
                                              const Scalar& lambda);

struct SymplecticManinPeel {
  ManinTriple triple;  // with Omega
  AdmissiblePair pair;
  Vec a0;
  Scalar lambda;
  Vec b;
  Vec a;
  bool swapped = false;
  Matrix isometry;
};

/// Peel of a symplectic Jordan-Manin algebra at a Delta-eigenvector in
/// (Ann cap U) + (Ann cap V), U side preferred.
SymplecticManinPeel peel_symplectic_manin(const ManinTriple& m);

}  // namespace jforge
