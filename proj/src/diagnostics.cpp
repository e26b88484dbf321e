#include "jforge/diagnostics.hpp"

#include "jforge/forms.hpp"

namespace jforge {

BilinearForm albert_form(const JordanAlgebra& a) {
  int n = a.dim();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar t = a.mult_operator(a.basis_product(i, j)).trace();
      g.at(i, j) = t;
      g.at(j, i) = t;
    }
  BilinearForm b(g);
  PepReport rep = check_pep(a, b);
  if (!rep.symmetric || !rep.associative)
    throw Error("Internal", "Albert form failed symmetry/associativity");
  return b;
}

BilinearForm trace_form_of_rep(const Representation& pi) {
  int n = pi.algebra.dim();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar t = pi.act(pi.algebra.basis_product(i, j)).trace();
      g.at(i, j) = t;
      g.at(j, i) = t;
    }
  BilinearForm b(g);
  PepReport rep = check_pep(pi.algebra, b);
  if (!rep.symmetric || !rep.associative)
    throw Error("Internal", "trace form failed symmetry/associativity");
  return b;
}

static JordanAlgebra restrict_algebra(const JordanAlgebra& a, const std::vector<Vec>& basis,
                                      const char* what) {
  int m = static_cast<int>(basis.size());
  MulTable t(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      auto c = coordinates_in(basis, a.product(basis[i], basis[j]));
      if (!c) throw Error("Internal", std::string(what) + " is not closed");
      t.set_product(i, j, *c);
    }
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("r" + std::to_string(i));
  return JordanAlgebra::create_unchecked(std::move(names), std::move(t));
}

RadicalResult radical_and_semisimplicity(const JordanAlgebra& a) {
  BilinearForm alb = albert_form(a);
  RadicalResult out;
  out.radical = solve_and_kernel(alb.gram, nullptr).kernel;
  out.semisimple = out.radical.is_zero();
  if (!is_ideal(a, out.radical))
    throw Error("Internal", "ker(Albert) is not an ideal (contradicts char-0 theory)");
  if (!out.radical.is_zero()) {
    JordanAlgebra rad = restrict_algebra(a, out.radical.basis, "radical");
    if (!is_nilpotent(rad))
      throw Error("Internal", "ker(Albert) is not nilpotent (contradicts char-0 theory)");
  }
  return out;
}

CasimirData casimir(const PseudoEuclideanAlgebra& p) {
  int n = p.dim();
  std::vector<Vec> dual = dual_basis(p);
  CasimirData out;
  out.c = zero_vec(n);
  for (int i = 0; i < n; ++i)
    out.c = out.c + p.algebra().product(unit_vec(n, i), dual[i]);
  out.rc = p.algebra().mult_operator(out.c);

  BilinearForm alb = albert_form(p.algebra());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.form().eval(out.rc.col(i), unit_vec(n, j)) != alb.gram.at(i, j))
        throw Error("Internal", "B(R_c x, y) != Albert(x,y)");
  for (int i = 0; i < n; ++i)
    if (!commutator(out.rc, p.algebra().basis_mult_operator(i)).is_zero())
      throw Error("Internal", "R_c does not commute with R_x");

  // Dual-basis independence: a second pair (f_i, f'_i) with B(f_i,f'_j)=d_ij.
  Matrix f = Matrix::identity(n);
  for (int i = 1; i < n; ++i) f.at(i, i - 1) = Scalar(i);  // deterministic shear
  auto fg = inverse(f.transpose() * p.form().gram);
  if (!fg) throw Error("Internal", "shear lost invertibility");
  Vec c2 = zero_vec(n);
  for (int i = 0; i < n; ++i) c2 = c2 + p.algebra().product(f.col(i), fg->col(i));
  if (!(p.algebra().mult_operator(c2) == out.rc))
    throw Error("Internal", "Casimir operator depends on the dual basis choice");

  bool invertible = inverse(out.rc).has_value();
  bool nilpotent = out.rc.pow(n).is_zero();
  out.classification = invertible  ? CasimirClass::invertible
                       : nilpotent ? CasimirClass::nilpotent
                                   : CasimirClass::mixed;
  return out;
}

FittingResult fitting(const PseudoEuclideanAlgebra& p) {
  int n = p.dim();
  CasimirData cas = casimir(p);
  Matrix power = cas.rc.pow(n);
  FittingResult out;
  std::vector<Vec> cols;
  for (int j = 0; j < n; ++j) cols.push_back(power.col(j));
  out.s = Subspace::span(n, cols);
  out.s_perp = solve_and_kernel(power, nullptr).kernel;

  for (const auto& x : out.s.basis)
    for (const auto& y : out.s_perp.basis)
      if (!p.form().eval(x, y).is_zero())
        throw Error("Internal", "Fitting components are not B-orthogonal");
  if (!is_ideal(p.algebra(), out.s) || !is_ideal(p.algebra(), out.s_perp))
    throw Error("Internal", "Fitting components are not ideals");
  if (!out.s.is_zero()) {
    // S is semisimple: Albert form of the restricted algebra nondegenerate.
    JordanAlgebra s_alg = restrict_algebra(p.algebra(), out.s.basis, "Fitting image");
    if (!albert_form(s_alg).is_nondegenerate())
      throw Error("Internal", "Fitting image is not semisimple");
  }
  if (!out.s_perp.is_zero()) {
    PseudoEuclideanAlgebra rest = restrict_to_subalgebra(p, out.s_perp.basis, "f");
    if (casimir(rest).classification != CasimirClass::nilpotent)
      throw Error("Internal", "Fitting kernel has non-nilpotent Casimir operator");
  }
  return out;
}

IndexData index(const JordanAlgebra& a) {
  int n = a.dim();
  int unknowns = n * (n + 1) / 2;
  auto idx = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  // T(e_i e_j, e_k) - T(e_i, e_j e_k) = 0 for all ordered triples.
  Matrix sys(n * n * n, unknowns);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++row) {
        Vec eij = a.basis_product(i, j);
        for (int u = 0; u < n; ++u)
          if (!eij[u].is_zero()) sys.at(row, idx(u, k)) += eij[u];
        Vec ejk = a.basis_product(j, k);
        for (int u = 0; u < n; ++u)
          if (!ejk[u].is_zero()) sys.at(row, idx(i, u)) -= ejk[u];
      }
  Subspace sol = solve_and_kernel(sys, nullptr).kernel;
  IndexData out;
  out.index = sol.dim();
  for (const auto& coeffs : sol.basis) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = coeffs[idx(i, j)];
    BilinearForm form(g);
    PepReport rep = check_pep(a, form);
    if (!rep.symmetric || !rep.associative)
      throw Error("Internal", "index solver produced a non-associative form");
    out.basis_of_forms.push_back(std::move(form));
  }
  return out;
}

ReductiveReport reductive_report(const PseudoEuclideanAlgebra& p,
                                 const std::vector<Subspace>& components) {
  int n = p.dim();
  Subspace total = Subspace::zero(n);
  for (const auto& comp : components) {
    if (!is_ideal(p.algebra(), comp)) throw Error("BadComponents", "component is not an ideal");
    int d = comp.dim();
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g.at(i, j) = p.form().eval(comp.basis[i], comp.basis[j]);
    if (d > 0 && determinant(g).is_zero())
      throw Error("BadComponents", "component is degenerate");
    total = subspace_sum(total, comp);
  }
  if (total != Subspace::full(n))
    throw Error("BadComponents", "components do not span the algebra");
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j)
      for (const auto& x : components[i].basis)
        for (const auto& y : components[j].basis)
          if (!p.form().eval(x, y).is_zero())
            throw Error("BadComponents", "components are not mutually orthogonal");
  for (const auto& comp : components) {
    if (comp.is_zero()) throw Error("BadComponents", "zero component");
    PseudoEuclideanAlgebra rest = restrict_to_subalgebra(p, comp.basis, "c");
    if (casimir(rest).classification == CasimirClass::mixed)
      throw Error("BadComponents",
                  "mixed Casimir operator disproves B-irreducibility of a component");
  }

  ReductiveReport out;
  out.component_count = static_cast<int>(components.size());
  RadicalResult rad = radical_and_semisimplicity(p.algebra());
  CoreSubspaces core = annulator_and_center(p.algebra());
  out.semisimple = rad.semisimple;
  out.dim_ann = core.ann.dim();
  out.reductive = rad.radical == core.ann;
  if (out.reductive) {
    FittingResult fit = fitting(p);
    if (!(subspace_sum(fit.s, core.ann) == Subspace::full(n)) ||
        !subspace_intersect(fit.s, core.ann).is_zero())
      throw Error("Internal", "reductive algebra is not S + Ann with S the Fitting image");
  }
  out.index = index(p.algebra()).index;
  out.square_is_whole = core.square == Subspace::full(n);
  out.criterion_index_eq_r = out.index == out.component_count;
  out.criterion_reductive_smallann = out.reductive && out.dim_ann <= 1;
  out.corollary1_consistent = out.criterion_index_eq_r == out.criterion_reductive_smallann;
  out.corollary2_consistent =
      out.semisimple == (out.square_is_whole && out.criterion_index_eq_r);
  return out;
}

std::vector<Subspace> decomposition_candidates(const PseudoEuclideanAlgebra& p) {
  int n = p.dim();
  std::vector<Subspace> out;
  auto push = [&](const Subspace& s) {
    if (s.is_zero() || s.dim() == n) return;
    if (!is_ideal(p.algebra(), s)) return;
    for (const auto& seen : out)
      if (seen == s) return;
    out.push_back(s);
  };
  RadicalResult rad = radical_and_semisimplicity(p.algebra());
  push(rad.radical);
  FittingResult fit = fitting(p);
  push(fit.s);
  push(fit.s_perp);
  CoreSubspaces core = annulator_and_center(p.algebra());
  for (const auto& line : core.ann.basis)
    push(ideal_closure(p.algebra(), Subspace::span(n, {line})).ideal);
  push(core.square);
  return out;
}

BilinearForm form_from_intertwiner(const JordanAlgebra& a, const Matrix& phi) {
  int n = a.dim();
  if (phi.rows != n || phi.cols != n) throw Error("DimensionMismatch", "phi");
  if (!inverse(phi)) throw Error("NotAnIntertwiner", "phi is not invertible");
  // T(x,y) = phi(x)(y); columns of phi are dual coordinates, so T = phi^T.
  Matrix t = phi.transpose();
  BilinearForm tf(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (tf.eval(a.basis_product(y, x), unit_vec(n, z)) !=
            tf.eval(unit_vec(n, y), a.basis_product(z, x)))
          throw Error("NotAnIntertwiner", "phi o R_x != rho(x) o phi");

  Matrix ts = Scalar(1, 2) * (t + t.transpose());
  Matrix ta = Scalar(1, 2) * (t - t.transpose());
  Subspace js = solve_and_kernel(ts, nullptr).kernel;
  Subspace ja = solve_and_kernel(ta, nullptr).kernel;

  // The proof's facts, re-verified on this instance.
  CoreSubspaces core = annulator_and_center(a);
  if (!ja.contains(core.square))
    throw Error("Internal", "J^2 escaped the antisymmetric radical");
  if (!subspace_intersect(js, ja).is_zero())
    throw Error("Internal", "J_s meets J_a (T degenerate?)");
  if (!subspace_product(a, js, js).is_zero())
    throw Error("Internal", "J_s^2 != 0");

  // W containing J_a with J = W + J_s.
  std::vector<Vec> current = ja.basis;
  current.insert(current.end(), js.basis.begin(), js.basis.end());
  std::vector<Vec> w_basis = ja.basis;
  for (int i = 0; i < n && static_cast<int>(current.size()) < n; ++i) {
    Vec e = unit_vec(n, i);
    if (!Subspace::span(n, current).contains(e)) {
      current.push_back(e);
      w_basis.push_back(e);
    }
  }
  // L = T_s on W, identity on J_s, zero across.
  std::vector<Vec> full = w_basis;
  full.insert(full.end(), js.basis.begin(), js.basis.end());
  Matrix cob = Matrix::from_columns(full);
  auto cinv = inverse(cob);
  if (!cinv) throw Error("Internal", "basis assembly failed");
  int w = static_cast<int>(w_basis.size());
  Matrix block(n, n);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) block.at(i, j) = tf.eval(w_basis[i], w_basis[j]) +
                                                 tf.eval(w_basis[j], w_basis[i]);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) block.at(i, j) = Scalar(1, 2) * block.at(i, j);
  for (int i = w; i < n; ++i) block.at(i, i) = Scalar(1);
  Matrix l = cinv->transpose() * block * *cinv;
  BilinearForm out(l);
  PepReport rep = check_pep(a, out);
  if (!rep.ok())
    throw Error("Internal", "constructed form failed the pseudo-euclidean checks");
  return out;
}

}  // namespace jforge
