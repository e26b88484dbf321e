#include "jforge/represent.hpp"

namespace jforge {

std::vector<Vec> identity_eval_points(int n, int degree) {
  std::vector<Vec> base = polarization_points(n, degree);
  if (degree <= 1) return base;
  std::vector<Vec> pts;
  for (int c = 1; c <= degree; ++c)
    for (const auto& v : base) pts.push_back(Scalar(c) * v);
  return pts;
}

Matrix Representation::act(const Vec& x) const {
  Matrix m(space_dim, space_dim);
  for (size_t i = 0; i < action.size(); ++i)
    if (!x[i].is_zero()) m = m + x[i] * action[i];
  return m;
}

CheckResult check_representation(const JordanAlgebra& j, int space_dim,
                                 const std::vector<Matrix>& action) {
  int n = j.dim();
  if (static_cast<int>(action.size()) != n)
    throw Error("DimensionMismatch", "one action matrix per basis vector required");
  for (const auto& m : action)
    if (m.rows != space_dim || m.cols != space_dim)
      throw Error("DimensionMismatch", "action matrices must be space_dim x space_dim");

  Representation pi{j, space_dim, action};
  auto piv = [&](const Vec& v) { return pi.act(v); };

  CheckResult res;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Matrix pxy = piv(j.basis_product(x, y));
        Matrix pyz = piv(j.basis_product(y, z));
        Matrix pxz = piv(j.basis_product(x, z));
        Matrix lhs = pxy * action[z] + pyz * action[x] + pxz * action[y];
        Matrix mid = action[y] * pxz + action[x] * pyz + action[z] * pxy;
        if (!(lhs == mid)) {
          res.ok = false;
          res.condition = "rep(i)";
          res.violation = Violation{{x, y, z}, "", "", "linearized pi(x^2)pi(x)=pi(x)pi(x^2)"};
          return res;
        }
        Matrix rhs = piv(j.product(j.basis_product(x, y), unit_vec(n, z))) +
                     action[x] * action[z] * action[y] + action[y] * action[z] * action[x];
        if (!(lhs == rhs)) {
          res.ok = false;
          res.condition = "rep(ii)";
          res.violation = Violation{{x, y, z}, "", "", "linearized second representation identity"};
          return res;
        }
      }
  return res;
}

bool rep_associator_identity(const Representation& pi) {
  int n = pi.algebra.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec assoc = associator(pi.algebra, unit_vec(n, x), unit_vec(n, y), unit_vec(n, z));
        Matrix lhs = pi.act(assoc);
        Matrix rhs = commutator(pi.action[y], commutator(pi.action[x], pi.action[z]));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

CheckResult check_admissible_representation(const Representation& pi,
                                            const JordanAlgebra& target) {
  if (target.dim() != pi.space_dim)
    throw Error("DimensionMismatch", "target algebra must live on the representation space");
  CheckResult rep_ok = check_representation(pi.algebra, pi.space_dim, pi.action);
  if (!rep_ok.ok) return rep_ok;

  int n = pi.algebra.dim();
  int m = pi.space_dim;
  auto mul = [&](const Vec& a, const Vec& b) { return target.product(a, b); };

  CheckResult res;
  // All three conditions are evaluated so the report can name every failure.
  bool fail1 = false, fail2 = false, fail3 = false;
  // (1): quadratic in x, mixed degree in y, linear in y'.
  auto xs2 = identity_eval_points(n, 2);
  auto ys2 = identity_eval_points(m, 2);
  for (const auto& x : xs2) {
    if (fail1) break;
    Matrix px = pi.act(x);
    Matrix px2 = pi.act(pi.algebra.product(x, x));
    for (const auto& y : ys2) {
      if (fail1) break;
      Vec pxy = px.apply(y);
      Vec y2 = mul(y, y);
      for (int yp = 0; yp < m; ++yp) {
        Vec ypv = unit_vec(m, yp);
        Vec pxyp = px.apply(ypv);
        Vec lhs = px2.apply(mul(y, ypv)) + Scalar(2) * mul(pxyp, pxy) + mul(pxyp, y2) +
                  Scalar(2) * mul(mul(y, ypv), pxy);
        Vec rhs = Scalar(2) * px.apply(mul(ypv, pxy)) + px.apply(mul(ypv, y2)) +
                  mul(px2.apply(ypv), y) + Scalar(2) * mul(mul(ypv, pxy), y);
        if (lhs != rhs) {
          fail1 = true;
          break;
        }
      }
    }
  }
  // (2): linear in x, cubic in y.
  auto ys3 = identity_eval_points(m, 3);
  for (int x = 0; x < n && !fail2; ++x)
    for (const auto& y : ys3) {
      Vec y2 = mul(y, y);
      if (mul(pi.action[x].apply(y), y2) != mul(pi.action[x].apply(y2), y)) {
        fail2 = true;
        break;
      }
    }
  // (3): linear in x and x', quadratic in y.
  for (int x = 0; x < n && !fail3; ++x)
    for (int xp = 0; xp < n && !fail3; ++xp) {
      Matrix pxxp = pi.act(pi.algebra.basis_product(x, xp));
      Matrix prod = pi.action[x] * pi.action[xp];
      for (const auto& y : ys2) {
        Vec y2 = mul(y, y);
        Vec lhs = pxxp.apply(y2) +
                  Scalar(2) * mul(pi.action[xp].apply(y), pi.action[x].apply(y));
        Vec rhs = prod.apply(y2) +
                  Scalar(2) * mul(pi.action[xp].apply(pi.action[x].apply(y)), y);
        if (lhs != rhs) {
          fail3 = true;
          break;
        }
      }
    }
  if (fail1 || fail2 || fail3) {
    res.ok = false;
    std::string failed;
    if (fail1) failed = "adm(1)";
    if (fail2) failed += std::string(failed.empty() ? "" : ",") + "adm(2)";
    if (fail3) failed += std::string(failed.empty() ? "" : ",") + "adm(3)";
    res.condition = failed;
  }
  return res;
}

JordanAlgebra semidirect_product(const JordanAlgebra& j1, const JordanAlgebra& j2,
                                 const std::vector<Matrix>& pi) {
  Representation rep{j1, j2.dim(), pi};
  CheckResult adm = check_admissible_representation(rep, j2);
  if (!adm.ok) throw Error("NotAdmissible:" + adm.condition, "semidirect_product");

  int n1 = j1.dim(), n2 = j2.dim(), n = n1 + n2;
  MulTable t(n);
  auto embed1 = [&](const Vec& v) {
    Vec r = zero_vec(n);
    for (int i = 0; i < n1; ++i) r[i] = v[i];
    return r;
  };
  auto embed2 = [&](const Vec& v) {
    Vec r = zero_vec(n);
    for (int i = 0; i < n2; ++i) r[n1 + i] = v[i];
    return r;
  };
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) t.set_product(i, j, embed1(j1.basis_product(i, j)));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      t.set_product(i, n1 + j, embed2(pi[i].col(j)));
  for (int i = 0; i < n2; ++i)
    for (int j = i; j < n2; ++j) t.set_product(n1 + i, n1 + j, embed2(j2.basis_product(i, j)));

  std::vector<std::string> names = j1.basis_names();
  for (const auto& s : j2.basis_names()) names.push_back(s + "~");
  return JordanAlgebra::create(std::move(names), std::move(t));
}

Cocycle Cocycle::zero(Kind kind, int base_dim, int value_dim) {
  Cocycle c;
  c.kind = kind;
  c.base_dim = base_dim;
  c.value_dim = value_dim;
  c.table.assign(static_cast<size_t>(base_dim) * base_dim, zero_vec(value_dim));
  return c;
}

void Cocycle::set(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != value_dim)
    throw Error("DimensionMismatch", "cocycle value dimension");
  table[static_cast<size_t>(i) * base_dim + j] = v;
  table[static_cast<size_t>(j) * base_dim + i] = v;
}

Vec Cocycle::eval(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(value_dim);
  for (int i = 0; i < base_dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < base_dim; ++j) {
      if (y[j].is_zero()) continue;
      r = r + (x[i] * y[j]) * at(i, j);
    }
  }
  return r;
}

bool Cocycle::is_symmetric() const {
  for (int i = 0; i < base_dim; ++i)
    for (int j = i + 1; j < base_dim; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

CheckResult check_central_cocycle(const JordanAlgebra& j1, const Cocycle& phi) {
  CheckResult res;
  if (phi.base_dim != j1.dim()) throw Error("DimensionMismatch", "cocycle base dimension");
  if (!phi.is_symmetric()) {
    res.ok = false;
    res.condition = "not-symmetric";
    return res;
  }
  int n = j1.dim();
  for (const auto& x : identity_eval_points(n, 3)) {
    Vec x2 = j1.product(x, x);
    for (int y = 0; y < n; ++y) {
      Vec yv = unit_vec(n, y);
      Vec lhs = phi.eval(j1.product(x, yv), x2);
      Vec rhs = phi.eval(x, j1.product(yv, x2));
      if (lhs != rhs) {
        res.ok = false;
        res.condition = "central-cocycle";
        return res;
      }
    }
  }
  return res;
}

JordanAlgebra central_extension(const JordanAlgebra& j1, int v_dim, const Cocycle& phi) {
  if (phi.value_dim != v_dim) throw Error("DimensionMismatch", "cocycle value dimension");
  CheckResult chk = check_central_cocycle(j1, phi);
  if (!chk.ok) throw Error("BadCocycle:" + chk.condition, "central_extension");
  int n1 = j1.dim(), n = n1 + v_dim;
  MulTable t(n);
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) {
      Vec v = j1.basis_product(i, j);
      v.resize(static_cast<size_t>(n));
      Vec w = phi.at(i, j);
      for (int k = 0; k < v_dim; ++k) v[n1 + k] = w[k];
      t.set_product(i, j, v);
    }
  std::vector<std::string> names = j1.basis_names();
  for (int i = 1; i <= v_dim; ++i) names.push_back("v" + std::to_string(i));
  return JordanAlgebra::create(std::move(names), std::move(t));
}

CheckResult check_tstar_cocycle(const JordanAlgebra& j, const Cocycle& theta) {
  CheckResult res;
  int n = j.dim();
  if (theta.base_dim != n || theta.value_dim != n)
    throw Error("DimensionMismatch", "T*-cocycle must take values in J*");
  if (!theta.is_symmetric()) {
    res.ok = false;
    res.condition = "not-symmetric";
    return res;
  }
  // (id2) theta(x,y)(z) = theta(z,x)(y): trilinear, all basis triples.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (theta.at(x, y)[z] != theta.at(z, x)[y]) {
          res.ok = false;
          res.condition = "id2";
          return res;
        }
  // (id1): cubic in x, linear in y. Functionals compose as f.R_x = R_x^T f.
  for (const auto& x : identity_eval_points(n, 3)) {
    Vec x2 = j.product(x, x);
    Matrix rx = j.mult_operator(x).transpose();
    Matrix rx2 = j.mult_operator(x2).transpose();
    Vec txx = theta.eval(x, x);
    for (int yi = 0; yi < n; ++yi) {
      Vec y = unit_vec(n, yi);
      Vec xy = j.product(x, y);
      Matrix rxy = j.mult_operator(xy).transpose();
      Matrix ry = j.mult_operator(y).transpose();
      Vec lhs = theta.eval(xy, x2) + rxy.apply(txx) + rx2.apply(theta.eval(x, y));
      Vec rhs = theta.eval(x, j.product(y, x2)) + rx.apply(theta.eval(y, x2)) +
                rx.apply(ry.apply(txx));
      if (lhs != rhs) {
        res.ok = false;
        res.condition = "id1";
        return res;
      }
    }
  }
  return res;
}

PseudoEuclideanAlgebra tstar_extension(const JordanAlgebra& j, const Cocycle& theta) {
  CheckResult chk = check_tstar_cocycle(j, theta);
  if (!chk.ok) throw Error("BadCocycle:" + chk.condition, "tstar_extension");
  int n = j.dim(), N = 2 * n;
  MulTable t(N);
  // e_i e_j = e_ie_j + theta(e_i,e_j);  e_i f_j = f_j o R_{e_i};  f_i f_j = 0.
  for (int i = 0; i < n; ++i) {
    Matrix ri_t = j.basis_mult_operator(i).transpose();
    for (int k = i; k < n; ++k) {
      Vec v = j.basis_product(i, k);
      v.resize(static_cast<size_t>(N));
      const Vec& th = theta.at(i, k);
      for (int u = 0; u < n; ++u) v[n + u] = th[u];
      t.set_product(i, k, v);
    }
    for (int k = 0; k < n; ++k) {
      Vec fk = ri_t.col(k);  // f_k o R_{e_i} in dual coordinates
      Vec v = zero_vec(N);
      for (int u = 0; u < n; ++u) v[n + u] = fk[u];
      t.set_product(i, n + k, v);
    }
  }
  std::vector<std::string> names = j.basis_names();
  for (const auto& s : j.basis_names()) names.push_back(s + "*");
  JordanAlgebra alg = JordanAlgebra::create(std::move(names), std::move(t));
  Matrix g(N, N);
  for (int i = 0; i < n; ++i) {
    g.at(i, n + i) = Scalar(1);
    g.at(n + i, i) = Scalar(1);
  }
  return PseudoEuclideanAlgebra::create(std::move(alg), BilinearForm(std::move(g)));
}

PairReport check_admissible_pair(const JordanAlgebra& j, const Matrix& d, const Vec& x0) {
  int n = j.dim();
  if (d.rows != n || d.cols != n || static_cast<int>(x0.size()) != n)
    throw Error("DimensionMismatch", "admissible pair shapes");
  PairReport rep;
  rep.admissible = true;

  auto fail = [&](const char* cond, std::vector<int> idx) {
    rep.admissible = false;
    rep.first_failed = cond;
    rep.violation = Violation{std::move(idx), "", "", cond};
  };

  // C1: D(x^2 y) = x^2 D(y) + 2 D(x)(xy) - 2 x(D(x)y); quadratic in x.
  auto xs2 = identity_eval_points(n, 2);
  for (const auto& x : xs2) {
    if (!rep.admissible) break;
    Vec x2 = j.product(x, x);
    Vec dx = d.apply(x);
    for (int y = 0; y < n && rep.admissible; ++y) {
      Vec yv = unit_vec(n, y);
      Vec lhs = d.apply(j.product(x2, yv));
      Vec rhs = j.product(x2, d.col(y)) + Scalar(2) * j.product(dx, j.product(x, yv)) -
                Scalar(2) * j.product(x, j.product(dx, yv));
      if (lhs != rhs) fail("C1", {y});
    }
  }
  // C2 (literal, all ordered basis pairs): D(x)D(y) - D(D(x)y) = 1/2 (x0,y,x).
  for (int x = 0; x < n && rep.admissible; ++x)
    for (int y = 0; y < n && rep.admissible; ++y) {
      Vec lhs = j.product(d.col(x), d.col(y)) - d.apply(j.product(d.col(x), unit_vec(n, y)));
      Vec rhs = Scalar(1, 2) * associator(j, x0, unit_vec(n, y), unit_vec(n, x));
      if (lhs != rhs) fail("C2", {x, y});
    }
  // C3: D(x0 x) = x0 D(x).
  for (int x = 0; x < n && rep.admissible; ++x) {
    Vec lhs = d.apply(j.product(x0, unit_vec(n, x)));
    Vec rhs = j.product(x0, d.col(x));
    if (lhs != rhs) fail("C3", {x});
  }
  // C4: x D(x^2) = x^2 D(x); cubic in x.
  for (const auto& x : identity_eval_points(n, 3)) {
    if (!rep.admissible) break;
    Vec x2 = j.product(x, x);
    if (j.product(x, d.apply(x2)) != j.product(x2, d.apply(x))) fail("C4", {});
  }
  // C5: D^2(x^2) = 2 (D x)^2 - 2 x D^2(x) + x0 x^2; quadratic in x.
  Matrix d2 = d * d;
  for (const auto& x : xs2) {
    if (!rep.admissible) break;
    Vec x2 = j.product(x, x);
    Vec dx = d.apply(x);
    Vec lhs = d2.apply(x2);
    Vec rhs = Scalar(2) * j.product(dx, dx) - Scalar(2) * j.product(x, d2.apply(x)) +
              j.product(x0, x2);
    if (lhs != rhs) fail("C5", {});
  }
  // C6: D^3(x) = 3/2 x0 D(x) - 1/2 x D(x0).
  Matrix d3 = d2 * d;
  Vec dx0 = d.apply(x0);
  for (int x = 0; x < n && rep.admissible; ++x) {
    Vec lhs = d3.col(x);
    Vec rhs = Scalar(3, 2) * j.product(x0, d.col(x)) -
              Scalar(1, 2) * j.product(unit_vec(n, x), dx0);
    if (lhs != rhs) fail("C6", {x});
  }
  // C7: D^2(x0) = x0^2.
  if (rep.admissible && d2.apply(x0) != j.product(x0, x0)) fail("C7", {});
  return rep;
}

PairReport check_admissible_pair(const PseudoEuclideanAlgebra& p, const Matrix& d,
                                 const Vec& x0) {
  PairReport rep = check_admissible_pair(p.algebra(), d, x0);
  rep.b_symmetric = is_b_symmetric(p.form(), d);
  return rep;
}

JordanAlgebra generalized_semidirect(const JordanAlgebra& j, const AdmissiblePair& pair) {
  PairReport rep = check_admissible_pair(j, pair.d, pair.x0);
  if (!rep.admissible) throw Error("NotAdmissible:" + rep.first_failed, "generalized_semidirect");
  int n = j.dim(), N = n + 1;
  MulTable t(N);
  auto embed = [&](const Vec& v) {
    Vec r = zero_vec(N);
    for (int i = 0; i < n; ++i) r[1 + i] = v[i];
    return r;
  };
  t.set_product(0, 0, embed(pair.x0));
  for (int i = 0; i < n; ++i) t.set_product(0, 1 + i, embed(pair.d.col(i)));
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) t.set_product(1 + i, 1 + k, embed(j.basis_product(i, k)));
  std::vector<std::string> names{"a"};
  for (const auto& s : j.basis_names()) names.push_back(s);
  JordanAlgebra out = JordanAlgebra::create(std::move(names), std::move(t));
  // J sits inside as an ideal; the spanning line Ka in general is not a
  // subalgebra.
  std::vector<Vec> jb;
  for (int i = 0; i < n; ++i) jb.push_back(unit_vec(N, 1 + i));
  if (!is_ideal(out, Subspace::span(N, jb)))
    throw Error("Internal", "generalized semi-direct product lost the ideal property");
  return out;
}

}  // namespace jforge
