#include "jforge/tkk.hpp"

namespace jforge {

LieAlgebra LieAlgebra::create(std::vector<std::string> names, std::vector<int> grades,
                              Vec bracket_tensor,
                              std::optional<BilinearForm> invariant_form) {
  LieAlgebra g;
  g.dim_ = static_cast<int>(names.size());
  g.names_ = std::move(names);
  g.grades_ = std::move(grades);
  g.br_ = std::move(bracket_tensor);
  int n = g.dim_;
  if (static_cast<int>(g.grades_.size()) != n ||
      g.br_.size() != static_cast<size_t>(n) * n * n)
    throw Error("DimensionMismatch", "Lie algebra tensor shapes");

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          throw Error("NotAntisymmetric", "bracket tensor");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec jac = g.bracket(g.basis_bracket(i, j), unit_vec(n, k)) +
                  g.bracket(g.basis_bracket(j, k), unit_vec(n, i)) +
                  g.bracket(g.basis_bracket(k, i), unit_vec(n, j));
        if (!is_zero_vec(jac)) throw Error("JacobiFailure", "triple (" +
            std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (invariant_form) {
    const BilinearForm& b = *invariant_form;
    if (!b.is_symmetric() || b.dim() != n)
      throw Error("InvarianceFailure", "form must be symmetric on the algebra");
    if (!b.is_nondegenerate()) throw Error("InvarianceFailure", "form is degenerate");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (b.eval(g.basis_bracket(i, j), unit_vec(n, k)) !=
              b.eval(unit_vec(n, i), g.basis_bracket(j, k)))
            throw Error("InvarianceFailure", "B_L([x,y],z) != B_L(x,[y,z])");
    g.form_ = b;
  }
  return g;
}

Vec LieAlgebra::basis_bracket(int i, int j) const {
  Vec v(static_cast<size_t>(dim_));
  for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vec(dim_, j));
    for (int k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads;
  for (int i = 0; i < dim_; ++i) ads.push_back(ad(unit_vec(dim_, i)));
  Matrix k(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Scalar t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

std::vector<Matrix> StructureSpace::h_basis() const {
  std::vector<Matrix> ops = lsq_ops;
  ops.insert(ops.end(), br_ops.begin(), br_ops.end());
  return ops;
}

std::optional<Vec> StructureSpace::decompose(const Matrix& op) const {
  std::vector<Vec> flats;
  for (const auto& m : h_basis()) flats.push_back(m.flat());
  if (flats.empty()) return op.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  return coordinates_in(flats, op.flat());
}

std::variant<StructureSpace, NotDirect> build_structure_space(
    const PseudoEuclideanAlgebra& p) {
  const JordanAlgebra& j = p.algebra();
  const BilinearForm& b = p.form();
  int n = j.dim();
  StructureSpace ss;

  CoreSubspaces core = annulator_and_center(j);
  if (orthogonal_complement(p, core.ann) != core.square)
    throw Error("Internal", "(Ann J)^perp != J^2 on a pseudo-euclidean algebra");

  // Greedy independent R_u over a J^2 basis.
  std::vector<Vec> lsq_flats;
  for (const auto& u : core.square.basis) {
    Matrix op = j.mult_operator(u);
    std::vector<Vec> trial = lsq_flats;
    trial.push_back(op.flat());
    if (Subspace::span(n * n, trial).dim() == static_cast<int>(trial.size())) {
      ss.lsq_elems.push_back(u);
      ss.lsq_ops.push_back(op);
      lsq_flats.push_back(op.flat());
    }
  }
  ss.lsq_span = Subspace::span(n * n, lsq_flats);

  std::vector<Vec> br_flats;
  std::vector<Matrix> r(n);
  for (int i = 0; i < n; ++i) r[i] = j.basis_mult_operator(i);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Matrix op = commutator(r[i], r[k]);
      if (op.is_zero()) continue;
      std::vector<Vec> trial = br_flats;
      trial.push_back(op.flat());
      if (Subspace::span(n * n, trial).dim() == static_cast<int>(trial.size())) {
        ss.br_pairs.emplace_back(i, k);
        ss.br_ops.push_back(op);
        br_flats.push_back(op.flat());
      }
    }
  ss.br_span = Subspace::span(n * n, br_flats);

  Subspace meet = subspace_intersect(ss.lsq_span, ss.br_span);
  if (!meet.is_zero()) return NotDirect{meet.basis.front()};

  int h = ss.h_dim();
  int p_ = static_cast<int>(ss.lsq_ops.size());
  ss.gamma = Matrix(h, h);
  for (int a = 0; a < p_; ++a)
    for (int c = 0; c < p_; ++c) ss.gamma.at(a, c) = b.eval(ss.lsq_elems[a], ss.lsq_elems[c]);
  for (int a = 0; a < static_cast<int>(ss.br_ops.size()); ++a)
    for (int c = 0; c < static_cast<int>(ss.br_ops.size()); ++c) {
      // Omega(D, [R_{e_i},R_{e_k}]) = B(D(e_i), e_k) on the generating pair.
      auto [ci, ck] = ss.br_pairs[c];
      ss.gamma.at(p_ + a, p_ + c) =
          b.eval(ss.br_ops[a].col(ci), unit_vec(n, ck));
    }
  if (!(ss.gamma == ss.gamma.transpose()))
    throw Error("Internal", "Gamma failed to be symmetric");

  // Well-definedness of Omega: every [R_x,R_y] must evaluate consistently
  // with its decomposition over the chosen basis.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Matrix op = commutator(r[x], r[y]);
      std::vector<Vec> flats = br_flats;
      auto coords = flats.empty()
                        ? (op.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt)
                        : coordinates_in(flats, op.flat());
      if (!coords) throw Error("Internal", "[L,L] spanning inconsistency");
      for (int a = 0; a < static_cast<int>(ss.br_ops.size()); ++a) {
        Scalar direct = b.eval(ss.br_ops[a].col(x), unit_vec(n, y));
        Scalar via;
        for (size_t t = 0; t < coords->size(); ++t)
          via += (*coords)[t] * ss.gamma.at(p_ + a, p_ + static_cast<int>(t));
        if (direct != via)
          throw Error("Internal", "Omega is not well defined on this instance");
      }
    }
  // Well-definedness of the B-leg: R_u determines B(u,-) on J^2.
  for (const auto& u : core.square.basis) {
    Matrix op = j.mult_operator(u);
    auto coords = lsq_flats.empty()
                      ? (op.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt)
                      : coordinates_in(lsq_flats, op.flat());
    if (!coords) throw Error("Internal", "L(J^2) spanning inconsistency");
    for (int a = 0; a < p_; ++a) {
      Scalar direct = b.eval(u, ss.lsq_elems[a]);
      Scalar via;
      for (size_t t = 0; t < coords->size(); ++t)
        via += (*coords)[t] * ss.gamma.at(a, static_cast<int>(t));
      if (direct != via)
        throw Error("Internal", "Gamma B-leg is not well defined on this instance");
    }
  }
  return ss;
}

TkkResult tkk_build(const PseudoEuclideanAlgebra& p) {
  auto built = build_structure_space(p);
  if (std::holds_alternative<NotDirect>(built))
    throw Error("NotDirect", "L(J^2) meets [L,L] nontrivially");
  StructureSpace ss = std::get<StructureSpace>(std::move(built));
  const JordanAlgebra& j = p.algebra();
  int n = j.dim();
  int h = ss.h_dim();
  int p_ = static_cast<int>(ss.lsq_ops.size());
  int N = 2 * n + h;
  auto jpos = [&](int i) { return i; };
  auto hpos = [&](int a) { return n + a; };
  auto bpos = [&](int i) { return n + h + i; };

  Vec tensor(static_cast<size_t>(N) * N * N);
  auto set = [&](int i, int jj, const Vec& v) {
    for (int k = 0; k < N; ++k) {
      tensor[(static_cast<size_t>(i) * N + jj) * N + k] = v[k];
      tensor[(static_cast<size_t>(jj) * N + i) * N + k] = -v[k];
    }
  };
  auto embed_j = [&](const Vec& v) {
    Vec r = zero_vec(N);
    for (int i = 0; i < n; ++i) r[jpos(i)] = v[i];
    return r;
  };
  auto embed_bar = [&](const Vec& v) {
    Vec r = zero_vec(N);
    for (int i = 0; i < n; ++i) r[bpos(i)] = v[i];
    return r;
  };
  auto embed_h = [&](const Vec& coords) {
    Vec r = zero_vec(N);
    for (int a = 0; a < h; ++a) r[hpos(a)] = coords[a];
    return r;
  };
  auto h_op = [&](int a) {
    return a < p_ ? ss.lsq_ops[a] : ss.br_ops[a - p_];
  };
  auto theta_op = [&](int a) {  // theta fixes L(J^2), negates [L,L]
    return a < p_ ? ss.lsq_ops[a] : -ss.br_ops[a - p_];
  };

  std::vector<Matrix> r(n);
  for (int i = 0; i < n; ++i) r[i] = j.basis_mult_operator(i);

  // [H_a, H_b] = operator commutator, decomposed in H.
  for (int a = 0; a < h; ++a)
    for (int b2 = a + 1; b2 < h; ++b2) {
      auto coords = ss.decompose(commutator(h_op(a), h_op(b2)));
      if (!coords) throw Error("Internal", "H is not closed under commutator");
      Vec c = *coords;
      c.resize(static_cast<size_t>(h));
      set(hpos(a), hpos(b2), embed_h(c));
    }
  // [H_a, x_j] = H_a(e_j);  [H_a, xbar_j] = -(theta(H_a) e_j)bar.
  for (int a = 0; a < h; ++a)
    for (int i = 0; i < n; ++i) {
      set(hpos(a), jpos(i), embed_j(h_op(a).col(i)));
      set(hpos(a), bpos(i), embed_bar(Scalar(-1) * theta_op(a).col(i)));
    }
  // [x_i, ybar_k] = 2 R_{e_i e_k} + 2 [R_i, R_k].
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (jpos(i) >= bpos(k)) continue;  // set() writes both orders anyway
      Matrix op = Scalar(2) * (j.mult_operator(j.basis_product(i, k)) +
                               commutator(r[i], r[k]));
      auto coords = ss.decompose(op);
      if (!coords) throw Error("Internal", "[J, Jbar] bracket escaped H");
      Vec c = *coords;
      c.resize(static_cast<size_t>(h));
      set(jpos(i), bpos(k), embed_h(c));
    }

  std::vector<std::string> names;
  std::vector<int> grades;
  for (int i = 0; i < n; ++i) {
    names.push_back(j.basis_names()[i]);
    grades.push_back(1);
  }
  for (int a = 0; a < p_; ++a) {
    names.push_back("Ru" + std::to_string(a + 1));
    grades.push_back(0);
  }
  for (auto [i, k] : ss.br_pairs) {
    names.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
    grades.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    names.push_back(j.basis_names()[i] + "~");
    grades.push_back(-1);
  }

  Matrix g(N, N);
  for (int a = 0; a < h; ++a)
    for (int b2 = 0; b2 < h; ++b2) g.at(hpos(a), hpos(b2)) = ss.gamma.at(a, b2);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Scalar two_b = Scalar(2) * p.form().gram.at(i, k);
      g.at(jpos(i), bpos(k)) = two_b;
      g.at(bpos(k), jpos(i)) = two_b;
    }

  LieAlgebra lie = LieAlgebra::create(std::move(names), std::move(grades),
                                      std::move(tensor), BilinearForm(std::move(g)));
  // Grading respected: [g_r, g_s] in g_{r+s}, zero when |r+s| > 1.
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      Vec br = lie.basis_bracket(i, k);
      int target = lie.grades()[i] + lie.grades()[k];
      for (int u = 0; u < N; ++u)
        if (!br[u].is_zero() && lie.grades()[u] != target)
          throw Error("Internal", "grading violated");
    }
  return TkkResult{std::move(lie), std::move(ss), n};
}

Matrix lift_derivation(const PseudoEuclideanAlgebra& p, const TkkResult& tkk,
                       const Matrix& d) {
  const JordanAlgebra& j = p.algebra();
  if (!is_derivation(j, d)) throw Error("NotADerivation", "lift_derivation");
  int n = tkk.n;
  int h = tkk.space.h_dim();
  int N = tkk.lie.dim();
  Matrix dl(N, N);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      dl.at(k, i) = d.at(k, i);                      // J block
      dl.at(n + h + k, n + h + i) = d.at(k, i);      // Jbar block
    }
  auto h_op = [&](int a) {
    return a < static_cast<int>(tkk.space.lsq_ops.size())
               ? tkk.space.lsq_ops[a]
               : tkk.space.br_ops[a - tkk.space.lsq_ops.size()];
  };
  for (int a = 0; a < h; ++a) {
    // On H the lift is T -> [D, T]: it equals R_{D(u)} on L(J^2) and the
    // displayed sum on commutators, because D is a derivation.
    auto coords = tkk.space.decompose(commutator(d, h_op(a)));
    if (!coords) throw Error("Internal", "[D,H] escaped H for a derivation");
    Vec c = *coords;
    c.resize(static_cast<size_t>(h));
    for (int b2 = 0; b2 < h; ++b2) dl.at(n + b2, n + a) = c[b2];
  }
  // Verified: D_L is a derivation of the bracket.
  for (int i = 0; i < N; ++i)
    for (int k = i + 1; k < N; ++k) {
      Vec lhs = dl.apply(tkk.lie.basis_bracket(i, k));
      Vec rhs = tkk.lie.bracket(dl.col(i), unit_vec(N, k)) +
                tkk.lie.bracket(unit_vec(N, i), dl.col(k));
      if (lhs != rhs) throw Error("Internal", "lifted map is not a Lie derivation");
    }
  if (is_b_antisymmetric(p.form(), d) &&
      !is_b_antisymmetric(*tkk.lie.invariant_form(), dl))
    throw Error("Internal", "lift lost B_L-antisymmetry");
  return dl;
}

bool check_condition_d1(const PseudoEuclideanAlgebra& p, const Matrix& d) {
  if (!is_derivation(p.algebra(), d)) throw Error("NotADerivation", "check_condition_d1");
  auto built = build_structure_space(p);
  if (std::holds_alternative<NotDirect>(built))
    throw Error("NotDirect", "structure space is not direct");
  const StructureSpace& ss = std::get<StructureSpace>(built);
  int n = p.dim();
  std::vector<Vec> images;
  for (const auto& op : ss.br_ops) images.push_back(commutator(d, op).flat());
  Subspace image = Subspace::span(n * n, images);
  return image == ss.br_span;
}

bool lie_symplectic_check(const LieAlgebra& g, const BilinearForm& omega) {
  int n = g.dim();
  if (omega.dim() != n) throw Error("DimensionMismatch", "omega on Lie algebra");
  if (!omega.is_antisymmetric() || !omega.is_nondegenerate()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Scalar s = omega.eval(g.basis_bracket(i, j), unit_vec(n, k)) +
                   omega.eval(g.basis_bracket(j, k), unit_vec(n, i)) +
                   omega.eval(g.basis_bracket(k, i), unit_vec(n, j));
        if (!s.is_zero()) return false;
      }
  return true;
}

}  // namespace jforge
