#include "jforge/double_ext.hpp"

namespace jforge {

bool is_isometric_isomorphism(const PseudoEuclideanAlgebra& a,
                              const PseudoEuclideanAlgebra& b, const Matrix& map) {
  if (a.dim() != b.dim() || map.rows != a.dim() || map.cols != a.dim()) return false;
  if (!check_isomorphism(a.algebra(), b.algebra(), map)) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (a.form().gram.at(i, j) != b.form().eval(map.col(i), map.col(j))) return false;
  return true;
}

PseudoEuclideanAlgebra double_extension(const DoubleExtensionSpec& spec) {
  const auto& j1 = spec.base.algebra();
  const auto& b1 = spec.base.form();
  const auto& j2 = spec.top;
  int n1 = j1.dim(), n2 = j2.dim();
  if (static_cast<int>(spec.pi.size()) != n2)
    throw Error("SpecInvalid:pi-shape", "one action matrix per J2 basis vector");
  for (const auto& m : spec.pi)
    if (m.rows != n1 || m.cols != n1)
      throw Error("SpecInvalid:pi-shape", "pi matrices must act on J1");
  for (int i = 0; i < n2; ++i)
    if (!is_b_symmetric(b1, spec.pi[i]))
      throw Error("SpecInvalid:pi-not-B1-symmetric", "pi(e_" + std::to_string(i + 1) + ")");
  Representation rep{j2, n1, spec.pi};
  CheckResult adm = check_admissible_representation(rep, j1);
  if (!adm.ok) throw Error("SpecInvalid:" + adm.condition, "pi is not admissible");
  if (spec.gamma.dim() != n2) throw Error("SpecInvalid:gamma-shape", "gamma must live on J2");
  if (!spec.gamma.is_symmetric()) throw Error("SpecInvalid:gamma-not-symmetric", "gamma");
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n2; ++k)
        if (spec.gamma.eval(j2.basis_product(i, j), unit_vec(n2, k)) !=
            spec.gamma.eval(unit_vec(n2, i), j2.basis_product(j, k)))
          throw Error("SpecInvalid:gamma-not-associative", "gamma");

  int n = n2 + n1 + n2;  // x-block, y-block, f-block
  MulTable t(n);
  auto set = [&](int i, int j, const Vec& v) { t.set_product(i, j, v); };
  // x x' = xx' + (f-part 0); phi only on y-pairs.
  for (int i = 0; i < n2; ++i)
    for (int j = i; j < n2; ++j) {
      Vec xx = j2.basis_product(i, j);
      Vec v = zero_vec(n);
      for (int u = 0; u < n2; ++u) v[u] = xx[u];
      set(i, j, v);
    }
  // x y' = pi(x) y'.
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n1; ++j) {
      Vec py = spec.pi[i].col(j);
      Vec v = zero_vec(n);
      for (int u = 0; u < n1; ++u) v[n2 + u] = py[u];
      set(i, n2 + j, v);
    }
  // x f' = f' o R_x (coadjoint of J2).
  for (int i = 0; i < n2; ++i) {
    Matrix ri_t = j2.basis_mult_operator(i).transpose();
    for (int j = 0; j < n2; ++j) {
      Vec ff = ri_t.col(j);
      Vec v = zero_vec(n);
      for (int u = 0; u < n2; ++u) v[n2 + n1 + u] = ff[u];
      set(i, n2 + n1 + j, v);
    }
  }
  // y y' = yy' + phi(y,y'), phi(y,y')(x) = B1(pi(x) y, y').
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) {
      Vec yy = j1.basis_product(i, j);
      Vec v = zero_vec(n);
      for (int u = 0; u < n1; ++u) v[n2 + u] = yy[u];
      for (int x = 0; x < n2; ++x)
        v[n2 + n1 + x] = b1.eval(spec.pi[x].col(i), unit_vec(n1, j));
      set(n2 + i, n2 + j, v);
    }
  // y f' = 0; f f' = 0 (already zero).

  std::vector<std::string> names;
  for (const auto& s : j2.basis_names()) names.push_back(s);
  for (const auto& s : j1.basis_names()) names.push_back(s + "'");
  for (const auto& s : j2.basis_names()) names.push_back(s + "*");
  JordanAlgebra alg = JordanAlgebra::create(std::move(names), std::move(t));

  Matrix g(n, n);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) g.at(i, j) = spec.gamma.gram.at(i, j);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) g.at(n2 + i, n2 + j) = b1.gram.at(i, j);
  for (int i = 0; i < n2; ++i) {
    g.at(i, n2 + n1 + i) = Scalar(1);
    g.at(n2 + n1 + i, i) = Scalar(1);
  }
  return PseudoEuclideanAlgebra::create(std::move(alg), BilinearForm(std::move(g)));
}

PseudoEuclideanAlgebra generalized_double_extension(const GdeSpec& spec) {
  const auto& j1 = spec.base.algebra();
  const auto& b1 = spec.base.form();
  int n1 = j1.dim();
  PairReport rep = check_admissible_pair(spec.base, spec.pair.d, spec.pair.x0);
  if (!rep.admissible)
    throw Error("SpecInvalid:" + rep.first_failed, "pair is not admissible");
  if (!rep.b_symmetric)
    throw Error("SpecInvalid:D-not-B-symmetric", "generalized double extension needs D in End_s");

  int n = n1 + 2;  // a, J1, b
  const int A = 0, B0 = n - 1;
  MulTable t(n);
  auto embed = [&](const Vec& y, const Scalar& bcoef) {
    Vec v = zero_vec(n);
    for (int i = 0; i < n1; ++i) v[1 + i] = y[i];
    v[B0] = bcoef;
    return v;
  };
  t.set_product(A, A, embed(spec.pair.x0, spec.k));
  for (int i = 0; i < n1; ++i)
    t.set_product(A, 1 + i, embed(spec.pair.d.col(i), b1.eval(spec.pair.x0, unit_vec(n1, i))));
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j)
      t.set_product(1 + i, 1 + j,
                    embed(j1.basis_product(i, j),
                          b1.eval(spec.pair.d.col(i), unit_vec(n1, j))));
  // b * anything = 0 (already zero).

  std::vector<std::string> names{"a"};
  for (const auto& s : j1.basis_names()) names.push_back(s);
  names.push_back("b");
  JordanAlgebra alg = JordanAlgebra::create(std::move(names), std::move(t));

  Matrix g(n, n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) g.at(1 + i, 1 + j) = b1.gram.at(i, j);
  g.at(A, B0) = Scalar(1);
  g.at(B0, A) = Scalar(1);
  PseudoEuclideanAlgebra out =
      PseudoEuclideanAlgebra::create(std::move(alg), BilinearForm(std::move(g)));
  if (!annulator_and_center(out.algebra()).ann.contains(unit_vec(n, B0)))
    throw Error("Internal", "b escaped the annulator");
  return out;
}

GdePeel peel_gde(const PseudoEuclideanAlgebra& p, const Vec& b) {
  int n = p.dim();
  if (static_cast<int>(b.size()) != n) throw Error("DimensionMismatch", "direction b");
  // a with B(a,b)=1, then make it isotropic: a -= B(a,a)/2 * b.
  Matrix row(1, n);
  Vec gb = p.form().gram.apply(b);
  for (int j = 0; j < n; ++j) row.at(0, j) = gb[j];
  Vec one{Scalar(1)};
  auto sol = solve_and_kernel(row, &one);
  if (!sol.solution) throw Error("BadDirection", "B(b,.) is identically zero");
  Vec a = *sol.solution;
  a = a - (p.form().eval(a, a) / Scalar(2)) * b;
  return peel_gde_at(p, b, a);
}

GdePeel peel_gde_at(const PseudoEuclideanAlgebra& p, const Vec& b, const Vec& a) {
  int n = p.dim();
  if (static_cast<int>(b.size()) != n || static_cast<int>(a.size()) != n)
    throw Error("DimensionMismatch", "peel directions");
  if (is_zero_vec(b)) throw Error("BadDirection", "b must be nonzero");
  if (!annulator_and_center(p.algebra()).ann.contains(b))
    throw Error("BadDirection", "b is not in the annulator");
  if (!p.form().eval(b, b).is_zero())
    throw Error("BadDirection",
                "B(b,b) != 0: Kb is a nondegenerate ideal (split off a one-dimensional "
                "orthogonal summand instead)");
  if (!p.form().eval(a, b).is_one() || !p.form().eval(a, a).is_zero())
    throw Error("BadDirection", "a must satisfy B(a,b)=1 and B(a,a)=0");

  Subspace ab = Subspace::span(n, {a, b});
  Subspace w = orthogonal_complement(p, ab);
  if (subspace_intersect(w, ab).dim() != 0)
    throw Error("Internal", "W does not complement the hyperbolic plane");
  std::vector<Vec> wb = w.basis;

  // Coordinates of an arbitrary element along W and b (inside (Kb)^perp = W + Kb).
  std::vector<Vec> wb_and_b = wb;
  wb_and_b.push_back(b);
  auto w_coords = [&](const Vec& v) {
    auto c = coordinates_in(wb_and_b, v);
    if (!c) throw Error("Internal", "product left (Kb)^perp during peel");
    return *c;  // last coordinate = b-component
  };

  int m = static_cast<int>(wb.size());
  // Induced product beta on W and the pair data.
  MulTable beta(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Vec c = w_coords(p.algebra().product(wb[i], wb[j]));
      Vec inw(c.begin(), c.begin() + m);
      beta.set_product(i, j, inw);
    }
  Matrix gw(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gw.at(i, j) = p.form().eval(wb[i], wb[j]);
  std::vector<std::string> wnames;
  for (int i = 1; i <= m; ++i) wnames.push_back("w" + std::to_string(i));
  PseudoEuclideanAlgebra w_alg = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create(wnames, std::move(beta)), BilinearForm(std::move(gw)));

  Matrix d(m, m);
  for (int j = 0; j < m; ++j) {
    Vec c = w_coords(p.algebra().product(a, wb[j]));
    for (int i = 0; i < m; ++i) d.at(i, j) = c[i];
  }
  Vec asq = w_coords(p.algebra().product(a, a));
  Vec x0(asq.begin(), asq.begin() + m);
  Scalar k = asq[m];

  GdePeel out;
  out.w = w_alg;
  out.w_basis = wb;
  out.pair = AdmissiblePair{d, x0};
  out.k = k;
  out.a = a;
  out.b = b;

  // Re-extend and verify the containment map is an isometric isomorphism.
  PseudoEuclideanAlgebra re =
      generalized_double_extension(GdeSpec{out.w, out.pair, out.k});
  std::vector<Vec> image_cols;
  image_cols.push_back(a);
  for (const auto& v : wb) image_cols.push_back(v);
  image_cols.push_back(b);
  out.isometry = Matrix::from_columns(image_cols);
  if (!is_isometric_isomorphism(re, p, out.isometry))
    throw Error("Internal", "peel_gde reconstruction failed verification");
  return out;
}

DePeel peel_de(const PseudoEuclideanAlgebra& p, const Subspace& ideal) {
  int n = p.dim();
  if (!is_ideal(p.algebra(), ideal)) throw Error("NotAnIdeal", "peel_de");
  Subspace iperp = orthogonal_complement(p, ideal);
  if (subspace_intersect(ideal, iperp).dim() == 0)
    throw Error("NondegenerateIdeal", "ideal is nondegenerate; use split_by_ideal");
  if (!ideal.contains(iperp))
    throw Error("NotMaximalComplemented",
                "I^perp must sit inside I (I maximal, P irreducible)");

  // Complement subalgebra V from the echelon complement of I.
  std::vector<Vec> vb = echelon_complement(ideal);
  int nv = static_cast<int>(vb.size());
  MulTable vt(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) {
      auto c = coordinates_in(vb, p.algebra().product(vb[i], vb[j]));
      if (!c)
        throw Error("NotMaximalComplemented",
                    "echelon complement of I is not a subalgebra");
      vt.set_product(i, j, *c);
    }
  std::vector<std::string> vnames;
  for (int i = 1; i <= nv; ++i) vnames.push_back("v" + std::to_string(i));
  JordanAlgebra v_alg = JordanAlgebra::create(vnames, std::move(vt));

  // A = I^perp + V, W realized as A^perp (inside I).
  Subspace a_space = subspace_sum(iperp, Subspace::span(n, vb));
  Subspace w_space = orthogonal_complement(p, a_space);
  if (!ideal.contains(w_space)) throw Error("Internal", "A^perp escaped I");
  std::vector<Vec> wb = w_space.basis;
  int m = static_cast<int>(wb.size());

  // Products in I decompose along I^perp + W.
  std::vector<Vec> iperp_and_w = iperp.basis;
  iperp_and_w.insert(iperp_and_w.end(), wb.begin(), wb.end());
  auto w_part = [&](const Vec& x) {
    auto c = coordinates_in(iperp_and_w, x);
    if (!c) throw Error("Internal", "element not in I^perp + W");
    Vec r(c->begin() + iperp.dim(), c->end());
    return r;
  };

  MulTable beta(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      beta.set_product(i, j, w_part(p.algebra().product(wb[i], wb[j])));
  Matrix gw(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gw.at(i, j) = p.form().eval(wb[i], wb[j]);
  std::vector<std::string> wnames;
  for (int i = 1; i <= m; ++i) wnames.push_back("w" + std::to_string(i));
  PseudoEuclideanAlgebra w_alg = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create(wnames, std::move(beta)), BilinearForm(std::move(gw)));

  // pi(v) = multiplication by v on W (V A^perp is contained in A^perp).
  std::vector<Matrix> pi;
  for (int vi = 0; vi < nv; ++vi) {
    Matrix mviw(m, m);
    for (int j = 0; j < m; ++j) {
      Vec prod = p.algebra().product(vb[vi], wb[j]);
      auto c = coordinates_in(wb, prod);
      if (!c) throw Error("Internal", "V does not stabilize A^perp");
      for (int i = 0; i < m; ++i) mviw.at(i, j) = (*c)[i];
    }
    pi.push_back(std::move(mviw));
  }

  Matrix gv(nv, nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) gv.at(i, j) = p.form().eval(vb[i], vb[j]);

  DePeel out;
  out.w = w_alg;
  out.w_basis = wb;
  out.v = v_alg;
  out.v_basis = vb;
  out.pi = pi;
  out.gamma = BilinearForm(gv);

  // Reconstruction: nabla(i + w + v) = v + w + nu(i) with nu(i) = B(i, .)|V.
  // Columns of the isometry are the P-images of the double extension basis
  // (V block, W block, V* block): V* basis f_t maps to the unique i in
  // I^perp with B(i, v_s) = delta_st, B(i, everything else) irrelevant
  // (nu is an isomorphism I^perp -> V*).
  PseudoEuclideanAlgebra re = double_extension(
      DoubleExtensionSpec{w_alg, v_alg, pi, out.gamma});
  std::vector<Vec> cols;
  for (const auto& vcol : vb) cols.push_back(vcol);
  for (const auto& wcol : wb) cols.push_back(wcol);
  // Solve nu(i_t) = f_t: B(i_t, v_s) = delta_{ts} over i in I^perp.
  Matrix pairing(nv, iperp.dim());
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < iperp.dim(); ++t)
      pairing.at(s, t) = p.form().eval(iperp.basis[t], vb[s]);
  for (int t = 0; t < nv; ++t) {
    Vec delta = unit_vec(nv, t);
    auto sol = solve_and_kernel(pairing, &delta);
    if (!sol.solution) throw Error("Internal", "nu is not surjective onto V*");
    Vec it = zero_vec(n);
    for (int u = 0; u < iperp.dim(); ++u) it = it + (*sol.solution)[u] * iperp.basis[u];
    cols.push_back(it);
  }
  out.isometry = Matrix::from_columns(cols);
  if (!is_isometric_isomorphism(re, p, out.isometry))
    throw Error("Internal", "peel_de reconstruction failed verification");
  return out;
}

}  // namespace jforge
