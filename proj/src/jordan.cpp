#include "jforge/jordan.hpp"

#include <sstream>

namespace jforge {

void MulTable::set_product(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != dim)
    throw Error("DimensionMismatch", "product vector has wrong dimension");
  for (int k = 0; k < dim; ++k) {
    at(i, j, k) = v[k];
    at(j, i, k) = v[k];
  }
}

Vec MulTable::basis_product(int i, int j) const {
  Vec v(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) v[k] = at(i, j, k);
  return v;
}

static std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ")";
  return os.str();
}

static std::string mat_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; ++i) {
    os << (i ? "; " : "") ;
    for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m.at(i, j).str();
  }
  os << "]";
  return os.str();
}

static Matrix basis_op(const MulTable& t, int i) {
  Matrix r(t.dim, t.dim);
  for (int j = 0; j < t.dim; ++j)
    for (int k = 0; k < t.dim; ++k) r.at(k, j) = t.at(i, j, k);
  return r;
}

IdentityReport check_jordan(const MulTable& t) {
  IdentityReport rep;
  rep.commutative = true;
  int n = t.dim;
  for (int i = 0; i < n && rep.commutative; ++i)
    for (int j = i + 1; j < n && rep.commutative; ++j)
      for (int k = 0; k < n; ++k)
        if (t.at(i, j, k) != t.at(j, i, k)) {
          rep.commutative = false;
          rep.first_violation = Violation{
              {i, j}, vec_str(t.basis_product(i, j)), vec_str(t.basis_product(j, i)),
              "commutativity"};
          break;
        }
  if (!rep.commutative) {
    rep.jordan = false;
    return rep;
  }

  std::vector<Matrix> R(n);
  for (int i = 0; i < n; ++i) R[i] = basis_op(t, i);
  // R_{e_i e_j} for all pairs.
  std::vector<std::vector<Matrix>> P(n, std::vector<Matrix>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec p = t.basis_product(i, j);
      Matrix op(n, n);
      for (int u = 0; u < n; ++u)
        if (!p[u].is_zero()) op = op + p[u] * R[u];
      P[i][j] = op;
      P[j][i] = op;
    }

  rep.jordan = true;
  for (int w = 0; w < n && rep.jordan; ++w)
    for (int z = w; z < n && rep.jordan; ++z)
      for (int x = z; x < n && rep.jordan; ++x) {
        Matrix lhs = commutator(P[w][z], R[x]) + commutator(P[z][x], R[w]);
        Matrix rhs = -commutator(P[x][w], R[z]);
        if (!(lhs == rhs)) {
          rep.jordan = false;
          rep.first_violation = Violation{{w, z, x}, mat_str(lhs), mat_str(rhs),
                                          "linearized Jordan identity"};
        }
      }
  return rep;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

JordanAlgebra JordanAlgebra::create(std::vector<std::string> names, MulTable mul) {
  if (names.empty() && mul.dim > 0) names = default_names(mul.dim);
  if (static_cast<int>(names.size()) != mul.dim)
    throw Error("DimensionMismatch", "basis name count does not match dimension");
  IdentityReport rep = check_jordan(mul);
  if (!rep.ok()) {
    std::string what = rep.first_violation ? rep.first_violation->what : "unknown";
    throw Error("NotJordan", "table fails " + what);
  }
  return create_unchecked(std::move(names), std::move(mul));
}

JordanAlgebra JordanAlgebra::create_unchecked(std::vector<std::string> names, MulTable mul) {
  if (names.empty() && mul.dim > 0) names = default_names(mul.dim);
  // Basis labels double as file-format keys; de-duplicate with primes.
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (names[j] == names[i]) {
        names[i] += "'";
        j = static_cast<size_t>(-1);
      }
  JordanAlgebra a;
  a.names_ = std::move(names);
  a.mul_ = std::move(mul);
  return a;
}

Vec JordanAlgebra::product(const Vec& x, const Vec& y) const {
  int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw Error("DimensionMismatch", "product operands");
  Vec r = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        const Scalar& c = mul_.at(i, j, k);
        if (!c.is_zero()) r[k] += f * c;
      }
    }
  }
  return r;
}

Matrix JordanAlgebra::mult_operator(const Vec& x) const {
  int n = dim();
  if (static_cast<int>(x.size()) != n)
    throw Error("DimensionMismatch", "mult_operator argument");
  Matrix r(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = mul_.at(i, j, k);
        if (!c.is_zero()) r.at(k, j) += x[i] * c;
      }
  }
  return r;
}

Matrix JordanAlgebra::basis_mult_operator(int i) const { return basis_op(mul_, i); }

Vec associator(const JordanAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return a.product(a.product(x, y), z) - a.product(x, a.product(y, z));
}

Subspace associator_space(const JordanAlgebra& a) {
  int n = a.dim();
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec v = a.product(a.basis_product(i, j), unit_vec(n, k)) -
                a.product(unit_vec(n, i), a.basis_product(j, k));
        if (!is_zero_vec(v)) gens.push_back(std::move(v));
      }
  return Subspace::span(n, gens);
}

/// Intersection of kernels, computed incrementally to keep matrices small.
static Subspace joint_kernel(const std::vector<Matrix>& ms, int n) {
  Subspace k = Subspace::full(n);
  for (const auto& m : ms) {
    if (k.is_zero()) break;
    std::vector<Vec> images;
    for (const auto& b : k.basis) images.push_back(m.apply(b));
    Matrix restricted = Matrix::from_columns(images);
    Subspace coeff_kernel = solve_and_kernel(restricted, nullptr).kernel;
    std::vector<Vec> new_basis;
    for (const auto& c : coeff_kernel.basis) {
      Vec v = zero_vec(n);
      for (int i = 0; i < k.dim(); ++i) v = v + c[i] * k.basis[i];
      new_basis.push_back(std::move(v));
    }
    k = Subspace::span(n, new_basis);
  }
  return k;
}

CoreSubspaces annulator_and_center(const JordanAlgebra& a) {
  int n = a.dim();
  CoreSubspaces out;

  std::vector<Matrix> R(n);
  for (int j = 0; j < n; ++j) R[j] = a.basis_mult_operator(j);
  out.ann = joint_kernel(R, n);

  std::vector<Vec> sq;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) sq.push_back(a.basis_product(i, j));
  out.square = Subspace::span(n, sq);

  std::vector<Matrix> zmats;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Matrix Pjk(n, n);
      Vec p = a.basis_product(j, k);
      for (int u = 0; u < n; ++u)
        if (!p[u].is_zero()) Pjk = Pjk + p[u] * R[u];
      zmats.push_back(R[k] * R[j] - Pjk);      // x -> (x,e_j,e_k)
      zmats.push_back(commutator(R[k], R[j])); // x -> (e_j,x,e_k)
      zmats.push_back(Pjk - R[j] * R[k]);      // x -> (e_j,e_k,x)
    }
  out.center = joint_kernel(zmats, n);
  return out;
}

Subspace subspace_product(const JordanAlgebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> gens;
  for (const auto& x : u.basis)
    for (const auto& y : v.basis) {
      Vec p = a.product(x, y);
      if (!is_zero_vec(p)) gens.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), gens);
}

bool is_ideal(const JordanAlgebra& a, const Subspace& s) {
  for (const auto& x : s.basis)
    for (int j = 0; j < a.dim(); ++j)
      if (!s.contains(a.product(x, unit_vec(a.dim(), j)))) return false;
  return true;
}

std::optional<int> nilpotency_class(const JordanAlgebra& a) {
  int n = a.dim();
  if (n == 0) return 1;
  std::vector<Subspace> powers;           // powers[k-1] = J^k
  powers.push_back(Subspace::full(n));
  for (int k = 2; k <= n + 2; ++k) {
    Subspace pk = Subspace::zero(n);
    for (int i = 1; i < k; ++i)
      pk = subspace_sum(pk, subspace_product(a, powers[i - 1], powers[k - i - 1]));
    if (pk.is_zero()) return k;
    if (pk == powers.back()) return std::nullopt;  // chain stabilized nonzero
    powers.push_back(std::move(pk));
  }
  return std::nullopt;
}

bool is_nilpotent(const JordanAlgebra& a) { return nilpotency_class(a).has_value(); }

IdealClosureResult ideal_closure(const JordanAlgebra& a, const Subspace& seed) {
  if (seed.ambient != a.dim()) throw Error("DimensionMismatch", "seed ambient");
  IdealClosureResult out;
  out.seed_is_ideal = is_ideal(a, seed);
  Subspace cur = seed;
  for (int round = 0; round <= a.dim() + 1; ++round) {
    Subspace next = subspace_sum(cur, subspace_product(a, cur, Subspace::full(a.dim())));
    if (next == cur) break;
    cur = std::move(next);
  }
  out.ideal = cur;
  out.nilpotency_class = nilpotency_class(a);
  return out;
}

QuotientResult quotient(const JordanAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw Error("NotAnIdeal", "quotient requires an ideal");
  int n = a.dim();
  std::vector<Vec> comp = echelon_complement(ideal);
  int m = static_cast<int>(comp.size());

  // Coordinates in the basis [comp ; ideal]; quotient projection keeps the
  // first m coordinates.
  std::vector<Vec> full = comp;
  full.insert(full.end(), ideal.basis.begin(), ideal.basis.end());
  Matrix tobasis = *inverse(Matrix::from_columns(full));
  Matrix projection(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) projection.at(i, j) = tobasis.at(i, j);

  MulTable t(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      t.set_product(i, j, projection.apply(a.product(comp[i], comp[j])));

  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("q" + std::to_string(i + 1));
  QuotientResult out{JordanAlgebra::create(std::move(names), std::move(t)),
                     std::move(projection), std::move(comp)};
  return out;
}

bool check_isomorphism(const JordanAlgebra& a, const JordanAlgebra& b, const Matrix& phi) {
  if (a.dim() != b.dim()) throw Error("DimensionMismatch", "isomorphism needs equal dimensions");
  if (phi.rows != a.dim() || phi.cols != a.dim())
    throw Error("DimensionMismatch", "phi must be square of the algebra dimension");
  if (!inverse(phi)) return false;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec lhs = phi.apply(a.basis_product(i, j));
      Vec rhs = b.product(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Vec> polarization_points(int n, int max_terms) {
  std::vector<Vec> pts;
  if (max_terms >= 1)
    for (int i = 0; i < n; ++i) pts.push_back(unit_vec(n, i));
  if (max_terms >= 2)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pts.push_back(unit_vec(n, i) + unit_vec(n, j));
  if (max_terms >= 3)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          pts.push_back(unit_vec(n, i) + unit_vec(n, j) + unit_vec(n, k));
  return pts;
}

bool is_derivation(const JordanAlgebra& a, const Matrix& d) {
  if (d.rows != a.dim() || d.cols != a.dim()) return false;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec lhs = d.apply(a.basis_product(i, j));
      Vec rhs = a.product(d.col(i), unit_vec(n, j)) + a.product(unit_vec(n, i), d.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace jforge
