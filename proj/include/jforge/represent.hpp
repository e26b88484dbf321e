#pragma once

#include "jforge/forms.hpp"

namespace jforge {

/// Evaluation points certifying polynomial identities: c * (e_{i1}+...+e_{ik})
/// for k <= degree and c in {1..degree}. A polynomial map whose homogeneous
/// components have degree between 1 and `degree` vanishes identically iff it
/// vanishes on this set (char 0: Vandermonde in c separates components,
/// sums of distinct basis vectors determine each symmetric component).
std::vector<Vec> identity_eval_points(int n, int degree);

struct Representation {
  JordanAlgebra algebra;       // the acting algebra
  int space_dim = 0;
  std::vector<Matrix> action;  // action[i] = pi(e_i), space_dim x space_dim

  Matrix act(const Vec& x) const;
};

struct CheckResult {
  bool ok = true;
  std::string condition;  // first failed condition when !ok
  std::optional<Violation> violation;
};

/// Linearized representation conditions (two chains of operator
/// identities, equivalent to the quadratic ones in characteristic zero),
/// checked on all basis triples.
CheckResult check_representation(const JordanAlgebra& j, int space_dim,
                                 const std::vector<Matrix>& action);

/// pi((x,y,z)) == [pi(y),[pi(x),pi(z)]] on all basis triples.
bool rep_associator_identity(const Representation& pi);

/// Conditions (1),(2),(3) making a representation onto a Jordan algebra
/// admissible for the semi-direct product. `target` carries the Jordan
/// product on the representation space.
CheckResult check_admissible_representation(const Representation& pi,
                                            const JordanAlgebra& target);

/// Semi-direct product of J2 by J1: (x+y)(x'+y') = xx' + pi(x)y' + pi(x')y + yy'.
JordanAlgebra semidirect_product(const JordanAlgebra& j1, const JordanAlgebra& j2,
                                 const std::vector<Matrix>& pi);

/// Symmetric bilinear table with vector values: central cocycles (values in
/// an abstract space) and T*-cocycles (values in J^*, dual coordinates).
struct Cocycle {
  enum class Kind { central, tstar };
  Kind kind = Kind::central;
  int base_dim = 0;
  int value_dim = 0;
  std::vector<Vec> table;  // base_dim*base_dim entries, each value_dim long

  static Cocycle zero(Kind kind, int base_dim, int value_dim);
  const Vec& at(int i, int j) const { return table[static_cast<size_t>(i) * base_dim + j]; }
  void set(int i, int j, const Vec& v);
  Vec eval(const Vec& x, const Vec& y) const;
  bool is_symmetric() const;
};

/// Checks the central cocycle identity phi(xy,x^2) = phi(x,yx^2) (polarized).
CheckResult check_central_cocycle(const JordanAlgebra& j1, const Cocycle& phi);

/// Product (x+v)(y+w) = xy + phi(x,y) on J1 + V; V lands in the annulator.
JordanAlgebra central_extension(const JordanAlgebra& j1, int v_dim, const Cocycle& phi);

/// Checks (id1) and the cyclicity (id2) theta(x,y)(z) = theta(z,x)(y).
CheckResult check_tstar_cocycle(const JordanAlgebra& j, const Cocycle& theta);

/// T*-extension: product (x+f)(y+h) = xy + h.R_x + f.R_y + theta(x,y) on
/// J + J*, hyperbolic form B(x+f,y+h) = f(y) + h(x).
PseudoEuclideanAlgebra tstar_extension(const JordanAlgebra& j, const Cocycle& theta);

struct AdmissiblePair {
  Matrix d;
  Vec x0;
};

struct PairReport {
  bool admissible = false;
  std::string first_failed;  // "C1".."C7" when !admissible
  bool b_symmetric = false;  // meaningful when a form was supplied
  std::optional<Violation> violation;
};

/// Conditions (C1)..(C7) for the generalized semi-direct product; the
/// B-symmetry of D is reported separately (admissibility itself is
/// form-free).
PairReport check_admissible_pair(const JordanAlgebra& j, const Matrix& d, const Vec& x0);
PairReport check_admissible_pair(const PseudoEuclideanAlgebra& p, const Matrix& d,
                                 const Vec& x0);

/// Generalized semi-direct product Ka + J: x*a = D(x), a*a = x0. Basis
/// order: a first, then J.
JordanAlgebra generalized_semidirect(const JordanAlgebra& j, const AdmissiblePair& pair);

}  // namespace jforge
