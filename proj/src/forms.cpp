#include "jforge/forms.hpp"

namespace jforge {

Scalar BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != gram.rows || static_cast<int>(y.size()) != gram.cols)
    throw Error("DimensionMismatch", "bilinear form arguments");
  Scalar s;
  for (int i = 0; i < gram.rows; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < gram.cols; ++j)
      if (!y[j].is_zero() && !gram.at(i, j).is_zero()) s += x[i] * gram.at(i, j) * y[j];
  }
  return s;
}

bool BilinearForm::is_symmetric() const { return gram == gram.transpose(); }
bool BilinearForm::is_antisymmetric() const { return gram == -gram.transpose(); }
bool BilinearForm::is_nondegenerate() const { return !determinant(gram).is_zero(); }

PepReport check_pep(const JordanAlgebra& a, const BilinearForm& b) {
  if (b.dim() != a.dim()) throw Error("DimensionMismatch", "gram must be dim x dim");
  PepReport rep;
  rep.symmetric = b.is_symmetric();
  if (!rep.symmetric)
    rep.first_violation = Violation{{}, "gram", "gram^T", "symmetry"};
  rep.nondegenerate = b.is_nondegenerate();
  if (rep.nondegenerate == false && !rep.first_violation)
    rep.first_violation = Violation{{}, "det(gram)", "nonzero", "nondegeneracy"};
  rep.associative = true;
  int n = a.dim();
  for (int i = 0; i < n && rep.associative; ++i)
    for (int j = 0; j < n && rep.associative; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar lhs = b.eval(a.basis_product(i, j), unit_vec(n, k));
        Scalar rhs = b.eval(unit_vec(n, i), a.basis_product(j, k));
        if (lhs != rhs) {
          rep.associative = false;
          if (!rep.first_violation)
            rep.first_violation =
                Violation{{i, j, k}, lhs.str(), rhs.str(), "associativity B(xy,z)=B(x,yz)"};
          break;
        }
      }
  return rep;
}

bool is_b_symmetric(const BilinearForm& b, const Matrix& f) {
  return f.transpose() * b.gram == b.gram * f;
}

bool is_b_antisymmetric(const BilinearForm& b, const Matrix& f) {
  return f.transpose() * b.gram == -(b.gram * f);
}

PseudoEuclideanAlgebra PseudoEuclideanAlgebra::create(JordanAlgebra a, BilinearForm b) {
  PepReport rep = check_pep(a, b);
  if (!rep.ok()) {
    std::string what = rep.first_violation ? rep.first_violation->what : "pep";
    throw Error("NotPseudoEuclidean", "form fails " + what);
  }
  return create_unchecked(std::move(a), std::move(b));
}

PseudoEuclideanAlgebra PseudoEuclideanAlgebra::create_unchecked(JordanAlgebra a,
                                                                BilinearForm b) {
  PseudoEuclideanAlgebra p;
  p.algebra_ = std::move(a);
  p.form_ = std::move(b);
  return p;
}

Subspace orthogonal_complement(const PseudoEuclideanAlgebra& p, const Subspace& s) {
  if (s.ambient != p.dim()) throw Error("DimensionMismatch", "subspace ambient");
  int n = p.dim();
  if (s.is_zero()) return Subspace::full(n);
  // x with B(x, s_i) = 0: rows s_i^T G.
  Matrix m(s.dim(), n);
  for (int i = 0; i < s.dim(); ++i) {
    Vec row = p.form().gram.transpose().apply(s.basis[i]);  // G^T s_i, G symmetric
    for (int j = 0; j < n; ++j) m.at(i, j) = row[j];
  }
  return solve_and_kernel(m, nullptr).kernel;
}

std::variant<SplitOk, Degenerate> split_by_ideal(const PseudoEuclideanAlgebra& p,
                                                 const Subspace& ideal) {
  if (!is_ideal(p.algebra(), ideal)) throw Error("NotAnIdeal", "split_by_ideal");
  // Degenerate iff the gram restricted to I is singular.
  int d = ideal.dim();
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = p.form().eval(ideal.basis[i], ideal.basis[j]);
  if (d > 0 && determinant(g).is_zero()) return Degenerate{};

  Subspace perp = orthogonal_complement(p, ideal);
  SplitOk out;
  out.first_basis = ideal.basis;
  out.second_basis = perp.basis;
  out.first = restrict_to_subalgebra(p, ideal.basis, "i");
  out.second = restrict_to_subalgebra(p, perp.basis, "j");
  return out;
}

std::vector<Vec> dual_basis(const PseudoEuclideanAlgebra& p) {
  auto inv = inverse(p.form().gram);
  if (!inv) throw Error("Internal", "pseudo-euclidean gram not invertible");
  // B(e_i, e'_j) = delta_ij with e'_j = sum_k (G^{-1})_{kj} e_k (G symmetric).
  std::vector<Vec> dual;
  for (int j = 0; j < p.dim(); ++j) dual.push_back(inv->col(j));
  return dual;
}

PseudoEuclideanAlgebra orthogonal_direct_sum(const PseudoEuclideanAlgebra& p1,
                                             const PseudoEuclideanAlgebra& p2) {
  int n1 = p1.dim(), n2 = p2.dim(), n = n1 + n2;
  MulTable t(n);
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) {
      Vec v = p1.algebra().basis_product(i, j);
      v.resize(static_cast<size_t>(n));
      t.set_product(i, j, v);
    }
  for (int i = 0; i < n2; ++i)
    for (int j = i; j < n2; ++j) {
      Vec w = p2.algebra().basis_product(i, j);
      Vec v = zero_vec(n);
      for (int k = 0; k < n2; ++k) v[n1 + k] = w[k];
      t.set_product(n1 + i, n1 + j, v);
    }
  std::vector<std::string> names;
  for (const auto& s : p1.algebra().basis_names()) names.push_back(s + "'");
  for (const auto& s : p2.algebra().basis_names()) names.push_back(s + "''");
  Matrix g(n, n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) g.at(i, j) = p1.form().gram.at(i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) g.at(n1 + i, n1 + j) = p2.form().gram.at(i, j);
  return PseudoEuclideanAlgebra::create(
      JordanAlgebra::create_unchecked(std::move(names), std::move(t)), BilinearForm(g));
}

PseudoEuclideanAlgebra restrict_to_subalgebra(const PseudoEuclideanAlgebra& p,
                                              const std::vector<Vec>& basis,
                                              const std::string& name_prefix) {
  int m = static_cast<int>(basis.size());
  MulTable t(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Vec prod = p.algebra().product(basis[i], basis[j]);
      auto coords = coordinates_in(basis, prod);
      if (!coords) throw Error("NotClosed", "subspace is not multiplication-closed");
      t.set_product(i, j, *coords);
    }
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.at(i, j) = p.form().eval(basis[i], basis[j]);
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back(name_prefix + std::to_string(i));
  return PseudoEuclideanAlgebra::create(
      JordanAlgebra::create(std::move(names), std::move(t)), BilinearForm(g));
}

}  // namespace jforge
