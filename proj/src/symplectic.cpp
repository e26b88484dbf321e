#include "jforge/symplectic.hpp"

#include <algorithm>

namespace jforge {

SymplecticReport check_symplectic(const JordanAlgebra& a, const BilinearForm& omega) {
  if (omega.dim() != a.dim()) throw Error("DimensionMismatch", "omega gram");
  SymplecticReport rep;
  rep.antisymmetric = omega.is_antisymmetric();
  if (!rep.antisymmetric)
    rep.first_violation = Violation{{}, "gram", "-gram^T", "antisymmetry"};
  rep.nondegenerate = omega.is_nondegenerate();
  rep.cyclic = true;
  int n = a.dim();
  for (int i = 0; i < n && rep.cyclic; ++i)
    for (int j = i; j < n && rep.cyclic; ++j)
      for (int k = j; k < n; ++k) {
        Scalar s = omega.eval(a.basis_product(i, j), unit_vec(n, k)) +
                   omega.eval(a.basis_product(j, k), unit_vec(n, i)) +
                   omega.eval(a.basis_product(k, i), unit_vec(n, j));
        if (!s.is_zero()) {
          rep.cyclic = false;
          if (!rep.first_violation)
            rep.first_violation = Violation{{i, j, k}, s.str(), "0", "cyclic identity"};
          break;
        }
      }
  return rep;
}

BridgeReport bridge_from_omega(const PseudoEuclideanAlgebra& p, const BilinearForm& omega) {
  if (omega.dim() != p.dim()) throw Error("DimensionMismatch", "omega gram");
  // omega = D^T G  =>  D = (G^{-1})^T omega^T = G^{-1} omega^T (G symmetric).
  auto ginv = inverse(p.form().gram);
  if (!ginv) throw Error("Internal", "pseudo-euclidean gram not invertible");
  BridgeReport rep;
  rep.d = *ginv * omega.gram.transpose();
  rep.omega = omega;
  rep.derivation = is_derivation(p.algebra(), rep.d);
  rep.b_antisymmetric = is_b_antisymmetric(p.form(), rep.d);
  rep.invertible = inverse(rep.d).has_value();
  return rep;
}

BridgeReport bridge_from_derivation(const PseudoEuclideanAlgebra& p, const Matrix& d) {
  if (d.rows != p.dim() || d.cols != p.dim())
    throw Error("DimensionMismatch", "derivation matrix");
  BridgeReport rep;
  rep.d = d;
  rep.omega = BilinearForm(d.transpose() * p.form().gram);
  rep.derivation = is_derivation(p.algebra(), d);
  rep.b_antisymmetric = is_b_antisymmetric(p.form(), d);
  rep.invertible = inverse(d).has_value();
  return rep;
}

RMatrix RMatrix::from_matrix(Matrix m) {
  if (!m.is_square() || !(m == -m.transpose()))
    throw Error("NotAntisymmetric", "r-matrix must be antisymmetric");
  return RMatrix{std::move(m)};
}

RMatrix r_from_symplectic_form(const BilinearForm& omega) {
  auto inv = inverse(omega.gram);
  if (!inv) throw Error("Internal", "symplectic gram not invertible");
  return RMatrix::from_matrix(*inv);
}

RMatrix r_from_u(const PseudoEuclideanAlgebra& p, const Matrix& u) {
  if (!is_b_antisymmetric(p.form(), u))
    throw Error("NotAntisymmetric", "U must be B-antisymmetric");
  auto ginv = inverse(p.form().gram);
  // mat(U) = r^T G  =>  r = (U G^{-1})^T.
  return RMatrix::from_matrix((u * *ginv).transpose());
}

YbeResult ybe_check(const PseudoEuclideanAlgebra& p, const RMatrix& r) {
  const JordanAlgebra& j = p.algebra();
  int n = j.dim();
  if (r.t.rows != n) throw Error("DimensionMismatch", "r-matrix dimension");
  RMatrix::from_matrix(r.t);  // re-assert antisymmetry

  YbeResult out;
  out.u = r.t.transpose() * p.form().gram;
  if (!is_b_antisymmetric(p.form(), out.u))
    throw Error("Internal", "U = R o phi lost B-antisymmetry");

  // C(r) as an exact 3-tensor.
  auto c3 = [&](int pdx, int q, int t) {
    Scalar v;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        const Scalar& cij = j.mul().at(i, jj, pdx);
        if (!cij.is_zero()) v += r.t.at(i, q) * r.t.at(jj, t) * cij;  // r12 r13
      }
    for (int q2 = 0; q2 < n; ++q2)
      for (int jj = 0; jj < n; ++jj) {
        const Scalar& cqj = j.mul().at(q2, jj, q);
        if (!cqj.is_zero()) v -= r.t.at(pdx, q2) * r.t.at(jj, t) * cqj;  // -r12 r23
      }
    for (int s = 0; s < n; ++s)
      for (int t2 = 0; t2 < n; ++t2) {
        const Scalar& cst = j.mul().at(s, t2, t);
        if (!cst.is_zero()) v += r.t.at(pdx, s) * r.t.at(q, t2) * cst;  // r13 r23
      }
    return v;
  };
  // Functional evaluator: R(e_q*) = row q of r.
  auto rfun = [&](int q) { return r.t.row(q); };
  bool zero = true;
  for (int pdx = 0; pdx < n; ++pdx)
    for (int q = 0; q < n; ++q)
      for (int t = 0; t < n; ++t) {
        Scalar tensor = c3(pdx, q, t);
        Scalar func = j.product(rfun(q), rfun(t))[pdx] +
                      j.product(rfun(t), rfun(pdx))[q] +
                      j.product(rfun(pdx), rfun(q))[t];
        if (tensor != func)
          throw Error("Internal", "C_J(r) evaluators disagree (index convention bug)");
        if (!tensor.is_zero()) zero = false;
      }
  out.cjr_zero = zero;

  if (zero) {
    MulTable star(n);
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k)
        star.set_product(i, k, j.product(out.u.col(i), unit_vec(n, k)) +
                                   j.product(unit_vec(n, i), out.u.col(k)));
    IdentityReport rep = check_jordan(star);
    if (rep.ok())
      out.star = JordanAlgebra::create_unchecked(j.basis_names(), std::move(star));
    out.star_morphism = true;
    for (int i = 0; i < n && out.star_morphism; ++i)
      for (int k = 0; k < n; ++k) {
        Vec su = j.product(out.u.col(i), unit_vec(n, k)) +
                 j.product(unit_vec(n, i), out.u.col(k));
        if (out.u.apply(su) != j.product(out.u.col(i), out.u.col(k))) {
          out.star_morphism = false;
          break;
        }
      }
  }
  return out;
}

ImageSymplectic image_u_symplectic(const PseudoEuclideanAlgebra& p, const RMatrix& r) {
  YbeResult ybe = ybe_check(p, r);
  if (!ybe.cjr_zero) throw Error("YbeFails", "C_J(r) != 0");
  const JordanAlgebra& j = p.algebra();
  int n = j.dim();

  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) cols.push_back(ybe.u.col(i));
  Subspace image = Subspace::span(n, cols);
  ImageSymplectic out;
  out.image_basis = image.basis;
  int m = image.dim();

  MulTable t(m);
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k) {
      Vec prod = j.product(image.basis[i], image.basis[k]);
      auto c = coordinates_in(image.basis, prod);
      if (!c) throw Error("Internal", "Im(U) is not multiplication-closed");
      t.set_product(i, k, *c);
    }
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  out.image_algebra = JordanAlgebra::create(names, std::move(t));

  // omega(Ux, Uy) = B(Ux, y): well-defined on the image (ker U is
  // B-orthogonal to Im U); entry (a,b) is B(v_a, x_b) with U x_b = v_b.
  std::vector<Vec> preimages;
  for (int b = 0; b < m; ++b) {
    auto xb = solve_and_kernel(ybe.u, &image.basis[b]).solution;
    if (!xb) throw Error("Internal", "image vector without preimage");
    preimages.push_back(*xb);
  }
  Matrix g(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.at(a, b) = p.form().eval(image.basis[a], preimages[b]);
  out.omega = BilinearForm(g);
  SymplecticReport rep = check_symplectic(out.image_algebra, out.omega);
  if (!rep.ok()) throw Error("Internal", "omega on Im(U) failed symplectic checks");
  return out;
}

Comultiplication Comultiplication::zero(int n) {
  Comultiplication d;
  d.dim = n;
  d.delta.assign(static_cast<size_t>(n) * n * n, Scalar(0));
  return d;
}

bool Comultiplication::cocommutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        if (at(i, j, k) != at(i, k, j)) return false;
  return true;
}

Comultiplication delta_r(const JordanAlgebra& v, const RMatrix& r) {
  int n = v.dim();
  if (r.t.rows != n) throw Error("DimensionMismatch", "r-matrix dimension");
  Comultiplication d = Comultiplication::zero(n);
  // Delta_r(e_i) = sum_pq r_pq ( (e_p e_i) (x) e_q  -  e_p (x) (e_i e_q) ).
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Scalar& rpq = r.t.at(p, q);
        if (rpq.is_zero()) continue;
        Vec epi = v.basis_product(p, i);
        for (int u = 0; u < n; ++u)
          if (!epi[u].is_zero()) d.at(i, u, q) += rpq * epi[u];
        Vec eiq = v.basis_product(i, q);
        for (int u = 0; u < n; ++u)
          if (!eiq[u].is_zero()) d.at(i, p, u) -= rpq * eiq[u];
      }
  return d;
}

DoubleResult delta_and_double(const JordanAlgebra& v, const Comultiplication& delta) {
  int n = v.dim();
  if (delta.dim != n) throw Error("DimensionMismatch", "comultiplication dimension");
  DoubleResult out;
  out.delta = delta;

  // Dual algebra: e_j* e_k* = sum_i delta[i][j][k] e_i*.
  MulTable dual(n);
  bool dual_commutative = delta.cocommutative();
  for (int jj = 0; jj < n; ++jj)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        dual.at(jj, k, i) = delta.at(i, jj, k);
      }
  out.dual = JordanAlgebra::create_unchecked(
      [&] {
        std::vector<std::string> names;
        for (const auto& s : v.basis_names()) names.push_back(s + "*");
        return names;
      }(),
      dual);

  // Double on V + V*.
  int N = 2 * n;
  MulTable t(N);
  // v_i v_j = product in V.
  for (int i = 0; i < n; ++i)
    for (int jj = i; jj < n; ++jj) {
      Vec p = v.basis_product(i, jj);
      p.resize(static_cast<size_t>(N));
      for (int k = 0; k < N; ++k) t.at(i, jj, k) = k < n ? p[k] : Scalar(0);
      for (int k = 0; k < N; ++k) t.at(jj, i, k) = t.at(i, jj, k);
    }
  // f_j f_k = dual product.
  for (int jj = 0; jj < n; ++jj)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) t.at(n + jj, n + k, n + i) = delta.at(i, jj, k);
  // v_i f_k = (v.g action) + (v * g action):
  //   e_i . e_k* = sum_q delta[i][k][q] e_q   (v.f = sum <f,v1> v2)
  //   e_i * e_k* = e_k* o R_{e_i}.
  for (int i = 0; i < n; ++i) {
    Matrix rit = v.basis_mult_operator(i).transpose();
    for (int k = 0; k < n; ++k) {
      for (int q = 0; q < n; ++q) t.at(i, n + k, q) = delta.at(i, k, q);
      for (int u = 0; u < n; ++u) t.at(i, n + k, n + u) = rit.at(u, k);
      // f_k v_i: f.w = sum w1 <f,w2>.
      for (int q = 0; q < n; ++q) t.at(n + k, i, q) = delta.at(i, q, k);
      for (int u = 0; u < n; ++u) t.at(n + k, i, n + u) = rit.at(u, k);
    }
  }
  out.double_table = t;
  out.double_names = [&] {
    std::vector<std::string> names = v.basis_names();
    for (const auto& s : v.basis_names()) names.push_back(s + "*");
    return names;
  }();
  IdentityReport rep = check_jordan(t);
  out.is_bialgebra = rep.ok() && dual_commutative;
  if (out.is_bialgebra)
    out.double_algebra = JordanAlgebra::create_unchecked(out.double_names, t);
  return out;
}

DoubleResult delta_r_and_double(const JordanAlgebra& v, const RMatrix& r) {
  return delta_and_double(v, delta_r(v, r));
}

SymplecticAlgebra make_symplectic(const PseudoEuclideanAlgebra& p,
                                  const BilinearForm& omega) {
  SymplecticReport rep = check_symplectic(p.algebra(), omega);
  if (!rep.ok()) throw Error("NotSymplectic", "omega fails symplectic checks");
  BridgeReport bridge = bridge_from_omega(p, omega);
  if (!bridge.symplectic())
    throw Error("NotSymplectic", "omega has no invertible B-antisymmetric derivation");
  // Lemma: an algebra with an invertible derivation is nilpotent.
  if (!is_nilpotent(p.algebra()))
    throw Error("Internal", "symplectic algebra failed the nilpotency lemma");
  return SymplecticAlgebra{p, omega, bridge.d};
}

SymplecticAlgebra symplectic_double_extension(const SymplecticAlgebra& s1,
                                              const AdmissiblePair& pair, const Vec& a0,
                                              const Scalar& lambda, const Scalar& k) {
  const PseudoEuclideanAlgebra& p1 = s1.p;
  int n1 = p1.dim();
  if (static_cast<int>(a0.size()) != n1) throw Error("DimensionMismatch", "a0");
  const Matrix& delta = s1.d;

  // Compatibility: D(a0) = lambda x0 + 1/2 delta(x0).
  if (n1 > 0) {
    Vec lhs1 = pair.d.apply(a0);
    Vec rhs1 = lambda * pair.x0 + Scalar(1, 2) * delta.apply(pair.x0);
    if (lhs1 != rhs1)
      throw Error("CompatibilityFails:D(a0)", "D(a0) != lambda x0 + (1/2) delta(x0)");
    // R_{a0} = delta D - D delta + lambda D.
    Matrix lhs2 = p1.algebra().mult_operator(a0);
    Matrix rhs2 = delta * pair.d - pair.d * delta + lambda * pair.d;
    if (!(lhs2 == rhs2))
      throw Error("CompatibilityFails:R(a0)", "R_{a0} != delta D - D delta + lambda D");
    if (k * lambda != p1.form().eval(a0, pair.x0))
      throw Error("CompatibilityFails:k-lambda", "k lambda != B1(a0, x0)");
  } else if (!(k * lambda).is_zero()) {
    throw Error("CompatibilityFails:k-lambda", "k lambda != 0 over the zero algebra");
  }

  PseudoEuclideanAlgebra p =
      generalized_double_extension(GdeSpec{p1, pair, k});
  int n = p.dim();  // a, J1, b
  Matrix dl(n, n);
  dl.at(n - 1, n - 1) = lambda;  // Delta(b) = lambda b
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) dl.at(1 + j, 1 + i) = delta.at(j, i);
    dl.at(n - 1, 1 + i) = -p1.form().eval(a0, unit_vec(n1, i));
  }
  for (int i = 0; i < n1; ++i) dl.at(1 + i, 0) = a0[i];  // Delta(a) = a0 - lambda a
  dl.at(0, 0) = -lambda;

  BridgeReport bridge = bridge_from_derivation(p, dl);
  if (!bridge.symplectic())
    throw Error("Internal", "Delta failed to be an invertible B-antisymmetric derivation");
  SymplecticReport rep = check_symplectic(p.algebra(), bridge.omega);
  if (!rep.ok()) throw Error("Internal", "omega = B(Delta .,.) failed symplectic checks");
  return SymplecticAlgebra{p, bridge.omega, dl};
}

SymplecticPeel peel_symplectic_double_extension(const PseudoEuclideanAlgebra& p,
                                                const BilinearForm& omega) {
  int n = p.dim();
  if (n == 0) throw Error("ZeroAlgebra", "nothing to peel");
  SymplecticAlgebra s = make_symplectic(p, omega);  // includes the nilpotency lemma
  const Matrix& delta = s.d;

  Subspace ann = annulator_and_center(p.algebra()).ann;
  if (ann.is_zero()) throw Error("Internal", "nilpotent nonzero algebra with Ann = 0");
  // Delta stabilizes the annulator.
  for (const auto& v : ann.basis)
    if (!ann.contains(delta.apply(v)))
      throw Error("Internal", "Delta does not stabilize Ann");

  // Restrict Delta to Ann and find a rational eigenvector.
  int m = ann.dim();
  Matrix da(m, m);
  for (int j = 0; j < m; ++j) {
    auto c = coordinates_in(ann.basis, delta.apply(ann.basis[j]));
    for (int i = 0; i < m; ++i) da.at(i, j) = (*c)[i];
  }
  auto spec = rational_spectral(da);
  if (std::holds_alternative<SplitFailure>(spec))
    throw Error("SplitFailure",
                "Delta|Ann has no rational eigenvalue (splits only over a field extension)");
  auto pairs = std::get<std::vector<Eigenpair>>(spec);
  std::sort(pairs.begin(), pairs.end(),
            [](const Eigenpair& x, const Eigenpair& y) { return x.lambda < y.lambda; });
  Vec b;
  for (const auto& ep : pairs) {
    // Need a true eigenvector: ker(da - lambda) is nonzero inside the
    // generalized eigenspace.
    Matrix shifted = da - ep.lambda * Matrix::identity(m);
    Subspace evec = solve_and_kernel(shifted, nullptr).kernel;
    if (!evec.is_zero()) {
      Vec coords = evec.basis.front();
      b = zero_vec(n);
      for (int i = 0; i < m; ++i) b = b + coords[i] * ann.basis[i];
      break;
    }
  }
  if (is_zero_vec(b)) throw Error("Internal", "no eigenvector in Ann");
  return peel_symplectic_at(p, omega, b, nullptr);
}

SymplecticPeel peel_symplectic_at(const PseudoEuclideanAlgebra& p,
                                  const BilinearForm& omega, const Vec& b,
                                  const Vec* a_hint) {
  int n = p.dim();
  if (n == 0) throw Error("ZeroAlgebra", "nothing to peel");
  SymplecticAlgebra s = make_symplectic(p, omega);
  const Matrix& delta = s.d;

  // b must be a Delta-eigenvector in Ann; read off lambda.
  Vec db = delta.apply(b);
  Scalar lambda;
  {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (!b[i].is_zero()) {
        lead = i;
        break;
      }
    if (lead < 0) throw Error("BadDirection", "b must be nonzero");
    lambda = db[lead] / b[lead];
    if (db != lambda * b) throw Error("BadDirection", "b is not a Delta-eigenvector");
  }
  if (lambda.is_zero()) throw Error("Internal", "Delta invertible but 0 eigenvalue");
  if (!p.form().eval(b, b).is_zero())
    throw Error("Internal", "B(b,b) != 0 for a Delta-eigenvector in Ann");

  GdePeel base = a_hint ? peel_gde_at(p, b, *a_hint) : peel_gde(p, b);
  int mw = static_cast<int>(base.w_basis.size());

  // Delta(W) lies in W + Kb; extract delta_W and check the psi leg matches
  // -B(a0,.) with a0 = W-component of Delta(a).
  std::vector<Vec> w_and_b = base.w_basis;
  w_and_b.push_back(b);
  Matrix dw(mw, mw);
  Vec psi(static_cast<size_t>(mw));
  for (int j = 0; j < mw; ++j) {
    auto c = coordinates_in(w_and_b, delta.apply(base.w_basis[j]));
    if (!c) throw Error("Internal", "Delta(W) escaped W + Kb");
    for (int i = 0; i < mw; ++i) dw.at(i, j) = (*c)[i];
    psi[j] = (*c)[mw];
  }
  // Delta(a) = a0 - lambda a with a0 in W.
  std::vector<Vec> w_b_a = w_and_b;
  w_b_a.push_back(base.a);
  auto ca = coordinates_in(w_b_a, delta.apply(base.a));
  if (!ca) throw Error("Internal", "Delta(a) escaped W + Kb + Ka");
  if (!(*ca)[mw].is_zero())
    throw Error("Internal", "Delta(a) acquired a b-component");
  if ((*ca)[mw + 1] != -lambda)
    throw Error("Internal", "Delta(a) a-coefficient is not -lambda");
  Vec a0(ca->begin(), ca->begin() + mw);
  for (int j = 0; j < mw; ++j) {
    Scalar expect;
    for (int i = 0; i < mw; ++i)
      expect -= a0[i] * base.w.form().gram.at(i, j);
    if (psi[j] != expect)
      throw Error("Internal", "psi != -B(a0,.) during symplectic peel");
  }

  // Verify the extracted data on W.
  BridgeReport wb = bridge_from_derivation(base.w, dw);
  if (!wb.symplectic())
    throw Error("Internal", "delta|W is not an invertible T-antisymmetric derivation");
  if (mw > 0) {
    Vec lhs = dw.apply(base.pair.x0);
    Vec rhs = Scalar(2) * base.pair.d.apply(a0) - Scalar(2) * lambda * base.pair.x0;
    if (lhs != rhs) throw Error("Internal", "delta(x0) equation failed");
    if (base.k * lambda != base.w.form().eval(a0, base.pair.x0))
      throw Error("Internal", "k lambda = B(a0,x0) failed");
    Matrix ra0 = base.w.algebra().mult_operator(a0);
    if (!(ra0 == dw * base.pair.d - base.pair.d * dw + lambda * base.pair.d))
      throw Error("Internal", "R_{a0} equation failed");
  }

  SymplecticPeel out;
  out.w = SymplecticAlgebra{base.w, wb.omega, dw};
  out.pair = base.pair;
  out.a0 = a0;
  out.lambda = lambda;
  out.k = base.k;
  out.b = b;
  out.a = base.a;
  out.w_basis = base.w_basis;
  out.isometry = base.isometry;

  // Round trip: re-extend and compare omega through the isometry.
  SymplecticAlgebra re = symplectic_double_extension(out.w, out.pair, a0, lambda, out.k);
  if (!is_isometric_isomorphism(re.p, p, out.isometry))
    throw Error("Internal", "symplectic peel reconstruction failed");
  Matrix pulled = out.isometry.transpose() * omega.gram * out.isometry;
  if (!(pulled == re.omega.gram))
    throw Error("Internal", "omega does not pull back to the re-extension");
  return out;
}

}  // namespace jforge
