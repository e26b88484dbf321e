#include "jforge/manin.hpp"

#include <algorithm>

namespace jforge {

static bool is_subalgebra(const JordanAlgebra& a, const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i; j < s.dim(); ++j)
      if (!s.contains(a.product(s.basis[i], s.basis[j]))) return false;
  return true;
}

static bool is_isotropic(const BilinearForm& b, const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i; j < s.dim(); ++j)
      if (!b.eval(s.basis[i], s.basis[j]).is_zero()) return false;
  return true;
}

ManinReport check_manin(const PseudoEuclideanAlgebra& p, const Subspace& u,
                        const Subspace& v, const BilinearForm* omega) {
  if (u.ambient != p.dim() || v.ambient != p.dim())
    throw Error("DimensionMismatch", "subspace ambient");
  ManinReport rep;
  rep.u_subalgebra = is_subalgebra(p.algebra(), u);
  rep.v_subalgebra = is_subalgebra(p.algebra(), v);
  rep.u_isotropic = is_isotropic(p.form(), u);
  rep.v_isotropic = is_isotropic(p.form(), v);
  rep.direct_sum = subspace_intersect(u, v).is_zero() &&
                   subspace_sum(u, v) == Subspace::full(p.dim());
  if (omega) {
    rep.omega_ok = is_isotropic(BilinearForm(omega->gram), u) &&
                   is_isotropic(BilinearForm(omega->gram), v) &&
                   check_symplectic(p.algebra(), *omega).ok();
  }
  if (!rep.ok()) rep.first_violation = Violation{{}, "", "", "manin-invariant"};
  return rep;
}

ManinReport check_manin(const ManinTriple& m) {
  return check_manin(m.p, m.u, m.v, m.omega ? &*m.omega : nullptr);
}

static Subspace shift_into_gde(const Subspace& s, int n_old) {
  // Old coordinates i -> new coordinates 1+i (a sits at 0, b at n_old+1).
  std::vector<Vec> basis;
  for (const auto& x : s.basis) {
    Vec v = zero_vec(n_old + 2);
    for (int i = 0; i < n_old; ++i) v[1 + i] = x[i];
    basis.push_back(std::move(v));
  }
  return Subspace::span(n_old + 2, basis);
}

ManinTriple manin_double_extension(const ManinTriple& m, const AdmissiblePair& pair) {
  ManinReport rep = check_manin(m.p, m.u, m.v, nullptr);
  if (!rep.ok()) throw Error("SpecInvalid:not-a-manin-triple", "manin_double_extension");
  int n = m.p.dim();
  for (const auto& x : m.v.basis)
    if (!m.v.contains(pair.d.apply(x)))
      throw Error("SpecInvalid:D(V)-not-in-V", "manin_double_extension");
  if (n > 0 && !m.v.contains(pair.x0))
    throw Error("SpecInvalid:x0-not-in-V", "manin_double_extension");

  PseudoEuclideanAlgebra big =
      generalized_double_extension(GdeSpec{m.p, pair, Scalar(0)});
  ManinTriple out;
  out.p = big;
  Subspace u2 = shift_into_gde(m.u, n);
  u2 = subspace_sum(u2, Subspace::span(n + 2, {unit_vec(n + 2, n + 1)}));  // + Kb
  Subspace v2 = shift_into_gde(m.v, n);
  v2 = subspace_sum(v2, Subspace::span(n + 2, {unit_vec(n + 2, 0)}));       // + Ka
  out.u = u2;
  out.v = v2;
  ManinReport check = check_manin(out.p, out.u, out.v, nullptr);
  if (!check.ok()) throw Error("Internal", "Manin double extension lost the triple");
  return out;
}

static Vec partner_in(const PseudoEuclideanAlgebra& p, const Subspace& side,
                      const Vec& b) {
  // a in `side` with B(a,b) = 1; isotropy of the side gives B(a,a) = 0.
  int d = side.dim();
  Matrix row(1, d);
  for (int j = 0; j < d; ++j) row.at(0, j) = p.form().eval(side.basis[j], b);
  Vec one{Scalar(1)};
  auto sol = solve_and_kernel(row, &one);
  if (!sol.solution)
    throw Error("Internal", "isotropic side does not pair with the annulator direction");
  Vec a = zero_vec(p.dim());
  for (int j = 0; j < d; ++j) a = a + (*sol.solution)[j] * side.basis[j];
  return a;
}

/// Shared Manin-side extraction: U' = U cap W, V' = V cap (Kb)^perp,
/// converted to W coordinates.
struct ManinSides {
  Subspace u_w;  // in W coordinates
  Subspace v_w;
};

static ManinSides manin_sides(const PseudoEuclideanAlgebra& p, const Subspace& u,
                              const Subspace& v, const Vec& b,
                              const std::vector<Vec>& w_basis) {
  int n = p.dim();
  Subspace w = Subspace::span(n, w_basis);
  Subspace kbperp = orthogonal_complement(p, Subspace::span(n, {b}));
  Subspace up = subspace_intersect(u, w);
  Subspace vp = subspace_intersect(v, kbperp);
  if (!w.contains(vp)) throw Error("Internal", "V' escaped W");
  int m = static_cast<int>(w_basis.size());
  auto to_w = [&](const Subspace& s) {
    std::vector<Vec> basis;
    for (const auto& x : s.basis) {
      auto c = coordinates_in(w_basis, x);
      if (!c) throw Error("Internal", "side not expressible in W basis");
      basis.push_back(*c);
    }
    return Subspace::span(m, basis);
  };
  ManinSides sides{to_w(up), to_w(vp)};
  if (subspace_sum(sides.u_w, sides.v_w) != Subspace::full(m))
    throw Error("Internal", "W != U' + V'");
  return sides;
}

ManinPeel peel_manin(const ManinTriple& m) {
  ManinReport rep = check_manin(m.p, m.u, m.v, nullptr);
  if (!rep.ok()) throw Error("SpecInvalid:not-a-manin-triple", "peel_manin");
  Subspace ann = annulator_and_center(m.p.algebra()).ann;
  Subspace u_ann = subspace_intersect(m.u, ann);
  Subspace v_ann = subspace_intersect(m.v, ann);
  bool swapped = false;
  const Subspace* bside = &u_ann;
  const Subspace *u = &m.u, *v = &m.v;
  if (u_ann.is_zero()) {
    if (v_ann.is_zero())
      throw Error("NoIsotropicAnnDirection",
                  "neither U nor V meets the annulator (non-nilpotent triple?)");
    swapped = true;
    bside = &v_ann;
    std::swap(u, v);
  }
  Vec b = bside->basis.front();
  Vec a = partner_in(m.p, *v, b);
  GdePeel base = peel_gde_at(m.p, b, a);

  ManinSides sides = manin_sides(m.p, *u, *v, b, base.w_basis);
  int mw = static_cast<int>(base.w_basis.size());
  // x0 in V' and D(V') <= V'.
  if (mw > 0 && !sides.v_w.contains(base.pair.x0))
    throw Error("Internal", "x0 escaped V'");
  for (const auto& x : sides.v_w.basis)
    if (!sides.v_w.contains(base.pair.d.apply(x)))
      throw Error("Internal", "D does not stabilize V'");
  if (!base.k.is_zero()) throw Error("Internal", "Manin peel met nonzero k");

  ManinPeel out;
  out.triple = ManinTriple{base.w, sides.u_w, sides.v_w, std::nullopt};
  ManinReport small = check_manin(out.triple);
  if (!small.ok()) throw Error("Internal", "peeled triple fails check_manin");
  out.pair = base.pair;
  out.k = base.k;
  out.b = b;
  out.a = a;
  out.w_basis = base.w_basis;
  out.swapped = swapped;
  out.isometry = base.isometry;

  // Round trip: re-extend and identify U/V through the isometry.
  ManinTriple re = manin_double_extension(out.triple, out.pair);
  auto push = [&](const Subspace& s) {
    std::vector<Vec> basis;
    for (const auto& x : s.basis) basis.push_back(out.isometry.apply(x));
    return Subspace::span(m.p.dim(), basis);
  };
  if (!(push(re.u) == *u) || !(push(re.v) == *v))
    throw Error("Internal", "Manin round trip did not recover the sides");
  return out;
}

ManinTriple spectral_split(const PseudoEuclideanAlgebra& p, const BilinearForm& omega) {
  BridgeReport bridge = bridge_from_omega(p, omega);
  if (!bridge.symplectic())
    throw Error("NotSymplectic", "omega admits no invertible B-antisymmetric derivation");
  int n = p.dim();
  auto spec = rational_spectral(bridge.d);
  if (std::holds_alternative<SplitFailure>(spec))
    throw Error("SplitFailure", "derivation spectrum does not split over Q");
  auto pairs = std::get<std::vector<Eigenpair>>(spec);
  for (const auto& ep : pairs)
    if (ep.lambda.is_zero())
      throw Error("ZeroEigenvalue", "invertible derivation cannot have eigenvalue 0");

  Subspace u = Subspace::zero(n), v = Subspace::zero(n);
  for (const auto& ep : pairs) {
    if (ep.lambda.sign() > 0)
      u = subspace_sum(u, ep.space);
    else
      v = subspace_sum(v, ep.space);
  }
  // Product rule J(l)J(m) <= J(l+m); absent eigenvalues force zero products.
  for (const auto& e1 : pairs)
    for (const auto& e2 : pairs) {
      Scalar sum = e1.lambda + e2.lambda;
      const Subspace* target = nullptr;
      for (const auto& e3 : pairs)
        if (e3.lambda == sum) target = &e3.space;
      for (const auto& x : e1.space.basis)
        for (const auto& y : e2.space.basis) {
          Vec prod = p.algebra().product(x, y);
          if (target ? !target->contains(prod) : !is_zero_vec(prod))
            throw Error("Internal", "eigenspace product rule J(l)J(m) <= J(l+m) failed");
        }
    }
  ManinTriple out{p, u, v, omega};
  ManinReport rep = check_manin(out);
  if (!rep.ok()) throw Error("Internal", "spectral split is not a Manin triple");
  return out;
}

ManinTriple symplectic_manin_double_extension(const ManinTriple& m,
                                              const AdmissiblePair& pair, const Vec& a0,
                                              const Scalar& lambda) {
  if (!m.omega) throw Error("CompatibilityFails:no-omega", "symplectic triple required");
  ManinReport rep = check_manin(m);
  if (!rep.ok()) throw Error("CompatibilityFails:not-symplectic-manin", "input triple");
  int n = m.p.dim();
  if (n > 0 && !m.v.contains(a0))
    throw Error("CompatibilityFails:a0-not-in-V", "symplectic_manin_double_extension");
  for (const auto& x : m.v.basis)
    if (!m.v.contains(pair.d.apply(x)))
      throw Error("CompatibilityFails:D(V)-not-in-V", "symplectic_manin_double_extension");
  if (n > 0 && !m.v.contains(pair.x0))
    throw Error("CompatibilityFails:x0-not-in-V", "symplectic_manin_double_extension");

  SymplecticAlgebra s1 = make_symplectic(m.p, *m.omega);
  SymplecticAlgebra ext = symplectic_double_extension(s1, pair, a0, lambda, Scalar(0));

  ManinTriple out;
  out.p = ext.p;
  Subspace u2 = shift_into_gde(m.u, n);
  u2 = subspace_sum(u2, Subspace::span(n + 2, {unit_vec(n + 2, n + 1)}));
  Subspace v2 = shift_into_gde(m.v, n);
  v2 = subspace_sum(v2, Subspace::span(n + 2, {unit_vec(n + 2, 0)}));
  out.u = u2;
  out.v = v2;
  out.omega = ext.omega;
  ManinReport check = check_manin(out);
  if (!check.ok()) throw Error("Internal", "symplectic Manin extension lost the triple");
  // Delta stabilizes both sides.
  for (const auto& x : out.u.basis)
    if (!out.u.contains(ext.d.apply(x)))
      throw Error("Internal", "Delta does not stabilize U'");
  for (const auto& x : out.v.basis)
    if (!out.v.contains(ext.d.apply(x)))
      throw Error("Internal", "Delta does not stabilize V'");
  return out;
}

SymplecticManinPeel peel_symplectic_manin(const ManinTriple& m) {
  if (!m.omega) throw Error("NoEigenvector", "symplectic Manin triple required");
  ManinReport rep = check_manin(m);
  if (!rep.ok()) throw Error("SpecInvalid:not-symplectic-manin", "peel_symplectic_manin");
  SymplecticAlgebra s = make_symplectic(m.p, *m.omega);
  Subspace ann = annulator_and_center(m.p.algebra()).ann;

  auto eigenvector_in = [&](const Subspace& side) -> std::optional<std::pair<Vec, Scalar>> {
    Subspace sa = subspace_intersect(side, ann);
    if (sa.is_zero()) return std::nullopt;
    // Delta stabilizes side and Ann; restrict and split.
    int d = sa.dim();
    Matrix ds(d, d);
    for (int j = 0; j < d; ++j) {
      Vec img = s.d.apply(sa.basis[j]);
      auto c = coordinates_in(sa.basis, img);
      if (!c) return std::nullopt;  // not stable (cannot happen for honest triples)
      for (int i = 0; i < d; ++i) ds.at(i, j) = (*c)[i];
    }
    auto spec = rational_spectral(ds);
    if (std::holds_alternative<SplitFailure>(spec))
      throw Error("SplitFailure", "Delta restricted to Ann side does not split over Q");
    auto pairs = std::get<std::vector<Eigenpair>>(spec);
    std::sort(pairs.begin(), pairs.end(),
              [](const Eigenpair& x, const Eigenpair& y) { return x.lambda < y.lambda; });
    for (const auto& ep : pairs) {
      Matrix shifted = ds - ep.lambda * Matrix::identity(d);
      Subspace evec = solve_and_kernel(shifted, nullptr).kernel;
      if (!evec.is_zero()) {
        Vec coords = evec.basis.front();
        Vec b = zero_vec(m.p.dim());
        for (int i = 0; i < d; ++i) b = b + coords[i] * sa.basis[i];
        return std::make_pair(b, ep.lambda);
      }
    }
    return std::nullopt;
  };

  bool swapped = false;
  const Subspace *u = &m.u, *v = &m.v;
  auto found = eigenvector_in(m.u);
  if (!found) {
    found = eigenvector_in(m.v);
    if (!found)
      throw Error("NoEigenvector", "no Delta-eigenvector in (Ann cap U) + (Ann cap V)");
    swapped = true;
    std::swap(u, v);
  }
  Vec b = found->first;
  Vec a = partner_in(m.p, *v, b);
  SymplecticPeel sp = peel_symplectic_at(m.p, *m.omega, b, &a);

  ManinSides sides = manin_sides(m.p, *u, *v, b, sp.w_basis);
  int mw = static_cast<int>(sp.w_basis.size());
  if (mw > 0 && !sides.v_w.contains(sp.pair.x0)) throw Error("Internal", "x0 escaped V'");
  if (mw > 0 && !sides.v_w.contains(sp.a0)) throw Error("Internal", "a0 escaped V'");
  for (const auto& x : sides.v_w.basis)
    if (!sides.v_w.contains(sp.pair.d.apply(x)))
      throw Error("Internal", "D does not stabilize V'");
  if (!sp.k.is_zero()) throw Error("Internal", "symplectic Manin peel met nonzero k");

  SymplecticManinPeel out;
  out.triple = ManinTriple{sp.w.p, sides.u_w, sides.v_w, sp.w.omega};
  ManinReport small = check_manin(out.triple);
  if (!small.ok()) throw Error("Internal", "peeled symplectic triple fails check_manin");
  out.pair = sp.pair;
  out.a0 = sp.a0;
  out.lambda = sp.lambda;
  out.b = b;
  out.a = a;
  out.swapped = swapped;
  out.isometry = sp.isometry;

  ManinTriple re = symplectic_manin_double_extension(out.triple, out.pair, out.a0,
                                                     out.lambda);
  auto push = [&](const Subspace& sub) {
    std::vector<Vec> basis;
    for (const auto& x : sub.basis) basis.push_back(out.isometry.apply(x));
    return Subspace::span(m.p.dim(), basis);
  };
  if (!(push(re.u) == *u) || !(push(re.v) == *v))
    throw Error("Internal", "symplectic Manin round trip did not recover the sides");
  Matrix pulled = out.isometry.transpose() * m.omega->gram * out.isometry;
  if (!(pulled == re.omega->gram))
    throw Error("Internal", "omega does not pull back to the re-extension");
  return out;
}

}  // namespace jforge
