#include "jforge/linalg.hpp"

#include <algorithm>
#include <map>

namespace jforge {

Matrix rref(Matrix m, bool drop_zero_rows) {
  int lead = 0;
  for (int r = 0; r < m.rows && lead < m.cols; ++r) {
    int pivot = -1;
    while (lead < m.cols) {
      for (int i = r; i < m.rows; ++i)
        if (!m.at(i, lead).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Scalar inv = m.at(r, lead).inverse();
    for (int j = lead; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, lead).is_zero()) continue;
      Scalar f = m.at(i, lead);
      for (int j = lead; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  if (!drop_zero_rows) return m;
  std::vector<Vec> rows;
  for (int i = 0; i < m.rows; ++i) {
    Vec row = m.row(i);
    if (!is_zero_vec(row)) rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows).rows == 0 ? Matrix(0, m.cols) : Matrix::from_rows(rows);
}

Subspace Subspace::full(int ambient) {
  Subspace s{ambient, {}};
  for (int i = 0; i < ambient; ++i) s.basis.push_back(unit_vec(ambient, i));
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw Error("DimensionMismatch", "span vector has wrong ambient dimension");
  if (vectors.empty()) return zero(ambient);
  Matrix m = rref(Matrix::from_rows(vectors));
  Subspace s{ambient, {}};
  for (int i = 0; i < m.rows; ++i) s.basis.push_back(m.row(i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw Error("DimensionMismatch", "ambient mismatch");
  Vec w = v;
  for (const auto& b : basis) {
    int lead = 0;
    while (lead < ambient && b[lead].is_zero()) ++lead;
    if (lead < ambient && !w[lead].is_zero()) {
      Scalar f = w[lead];
      for (int j = 0; j < ambient; ++j) w[j] -= f * b[j];
    }
  }
  return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient != other.ambient) throw Error("DimensionMismatch", "ambient mismatch");
  for (const auto& b : other.basis)
    if (!contains(b)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw Error("DimensionMismatch", "ambient mismatch");
  std::vector<Vec> all = u.basis;
  all.insert(all.end(), v.basis.begin(), v.basis.end());
  return Subspace::span(u.ambient, all);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw Error("DimensionMismatch", "ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient);
  // x = sum alpha_i u_i = sum beta_j v_j  <=>  (alpha,beta) in ker [U^T | -V^T]
  int p = u.dim(), q = v.dim();
  Matrix m(u.ambient, p + q);
  for (int i = 0; i < p; ++i)
    for (int r = 0; r < u.ambient; ++r) m.at(r, i) = u.basis[i][r];
  for (int j = 0; j < q; ++j)
    for (int r = 0; r < u.ambient; ++r) m.at(r, p + j) = -v.basis[j][r];
  Subspace ker = solve_and_kernel(m, nullptr).kernel;
  std::vector<Vec> gens;
  for (const auto& coeff : ker.basis) {
    Vec x = zero_vec(u.ambient);
    for (int i = 0; i < p; ++i) x = x + coeff[i] * u.basis[i];
    gens.push_back(std::move(x));
  }
  return Subspace::span(u.ambient, gens);
}

std::variant<Subspace, bool> subspace_algebra(const Subspace& u, const Subspace& v,
                                              SubspaceOp op) {
  switch (op) {
    case SubspaceOp::sum:
      return subspace_sum(u, v);
    case SubspaceOp::intersect:
      return subspace_intersect(u, v);
    case SubspaceOp::equals:
      if (u.ambient != v.ambient) throw Error("DimensionMismatch", "ambient mismatch");
      return u == v;
    case SubspaceOp::contains:
      return u.contains(v);
  }
  throw Error("Internal", "unreachable");
}

SolveResult solve_and_kernel(const Matrix& A, const Vec* b) {
  if (b && static_cast<int>(b->size()) != A.rows)
    throw Error("DimensionMismatch", "right-hand side size mismatch");
  int n = A.cols;
  Matrix aug(A.rows, n + (b ? 1 : 0));
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    if (b) aug.at(i, n) = (*b)[i];
  }
  Matrix r = rref(std::move(aug), false);

  std::vector<int> pivot_col_of_row(A.rows, -1);
  std::vector<int> pivot_row_of_col(n, -1);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j)
      if (!r.at(i, j).is_zero()) {
        pivot_col_of_row[i] = j;
        if (j < n) pivot_row_of_col[j] = i;
        break;
      }

  SolveResult out;
  out.kernel.ambient = n;
  std::vector<Vec> kernel_gens;
  for (int j = 0; j < n; ++j) {
    if (pivot_row_of_col[j] >= 0) continue;  // pivot column
    Vec k = zero_vec(n);
    k[j] = Scalar(1);
    for (int jj = 0; jj < n; ++jj) {
      int pr = pivot_row_of_col[jj];
      if (pr >= 0) k[jj] = -r.at(pr, j);
    }
    kernel_gens.push_back(std::move(k));
  }
  out.kernel = Subspace::span(n, kernel_gens);

  if (b) {
    bool consistent = true;
    for (int i = 0; i < r.rows; ++i)
      if (pivot_col_of_row[i] == n) consistent = false;  // row 0...0 | nonzero
    if (consistent) {
      Vec x = zero_vec(n);
      for (int j = 0; j < n; ++j) {
        int pr = pivot_row_of_col[j];
        if (pr >= 0) x[j] = r.at(pr, n);
      }
      out.solution = std::move(x);
    }
  }
  return out;
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& span_vectors, const Vec& v) {
  if (span_vectors.empty()) return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Matrix m = Matrix::from_columns(span_vectors);
  auto res = solve_and_kernel(m, &v);
  return res.solution;
}

Scalar determinant(const Matrix& A) {
  if (!A.is_square()) throw Error("DimensionMismatch", "determinant of non-square matrix");
  Matrix m = A;
  int n = m.rows;
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (!A.is_square()) throw Error("DimensionMismatch", "inverse of non-square matrix");
  int n = A.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  Matrix r = rref(std::move(aug), false);
  for (int i = 0; i < n; ++i)
    if (!(r.at(i, i) == Scalar(1))) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

int rank(const Matrix& A) { return rref(A).rows; }

std::vector<Vec> extend_to_basis(int n, std::vector<Vec> start) {
  std::vector<Vec> current = start;
  for (int i = 0; i < n && static_cast<int>(current.size()) < n; ++i) {
    Vec e = unit_vec(n, i);
    if (!Subspace::span(n, current).contains(e)) current.push_back(e);
  }
  if (static_cast<int>(current.size()) != n)
    throw Error("Internal", "extend_to_basis failed (dependent start?)");
  return current;
}

std::vector<Vec> echelon_complement(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient, false);
  for (const auto& b : s.basis) {
    for (int j = 0; j < s.ambient; ++j)
      if (!b[j].is_zero()) {
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<Vec> comp;
  for (int j = 0; j < s.ambient; ++j)
    if (!is_pivot[j]) comp.push_back(unit_vec(s.ambient, j));
  return comp;
}

// ---- polynomials ----

Poly Poly::from_coeffs(Vec c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return Poly{std::move(c)};
}

int Poly::degree() const { return static_cast<int>(c.size()) - 1; }

Scalar Poly::eval(const Scalar& x) const {
  Scalar v;
  for (int i = degree(); i >= 0; --i) v = v * x + c[i];
  return v;
}

std::string Poly::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += c[i].sign() > 0 ? " + " : " - ";
    else if (c[i].sign() < 0) s += "-";
    Scalar a = c[i].abs();
    if (i == 0 || !a.is_one()) s += a.str();
    if (i > 0) {
      if (!a.is_one()) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

static Poly poly_derivative(const Poly& p) {
  Vec d;
  for (int i = 1; i <= p.degree(); ++i) d.push_back(Scalar(i) * p.c[i]);
  return Poly::from_coeffs(d);
}

static std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.c.empty()) throw Error("BadScalar", "polynomial division by zero");
  Vec rem = a.c;
  Vec quo(a.c.size(), Scalar(0));
  int db = b.degree();
  Scalar lead_inv = b.c[db].inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Scalar f = rem[i] * lead_inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
  }
  return {Poly::from_coeffs(quo), Poly::from_coeffs(rem)};
}

static Poly poly_monic(Poly p) {
  if (p.c.empty()) return p;
  Scalar inv = p.c.back().inverse();
  for (auto& x : p.c) x *= inv;
  return p;
}

static Poly poly_gcd(Poly a, Poly b) {
  while (!b.c.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly char_poly(const Matrix& A) {
  if (!A.is_square()) throw Error("DimensionMismatch", "char_poly of non-square matrix");
  int n = A.rows;
  Vec c(static_cast<size_t>(n) + 1);
  c[n] = Scalar(1);
  Matrix M = Matrix::identity(n);  // Faddeev-LeVerrier
  for (int k = 1; k <= n; ++k) {
    Matrix AM = A * M;
    Scalar ck = -(AM.trace() / Scalar(k));
    c[n - k] = ck;
    M = AM + ck * Matrix::identity(n);
  }
  return Poly{std::move(c)};
}

static std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  mpz_class i = 1;
  long iterations = 0;
  for (; i * i <= n; ++i) {
    if (++iterations > 2000000)
      throw Error("FactoringTooHard", "divisor enumeration exceeded iteration cap");
    if (n % i == 0) {
      divs.push_back(i);
      if (i * i != n) divs.push_back(n / i);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RootSplit rational_roots(const Poly& p_in) {
  RootSplit out;
  Poly p = p_in;
  if (p.degree() < 1) {
    out.remainder = p;
    return out;
  }
  // Root 0 first.
  int zero_mult = 0;
  while (!p.c.empty() && p.c[0].is_zero()) {
    p.c.erase(p.c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Scalar(0), zero_mult});
  if (p.degree() < 1) {
    out.remainder = p;
    return out;
  }
  // Clear to a primitive integer polynomial.
  mpz_class den_lcm = 1;
  for (const auto& x : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    x.raw().get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& x : p.c) ic.push_back(x.raw().get_num() * (den_lcm / x.raw().get_den()));
  mpz_class content = 0;
  for (const auto& z : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (auto& z : ic) z /= content;

  std::vector<mpz_class> ps = divisors(ic.front());
  std::vector<mpz_class> qs = divisors(ic.back());
  std::vector<Scalar> candidates;
  for (const auto& num : ps)
    for (const auto& den : qs) {
      mpq_class q(num, den);
      q.canonicalize();
      candidates.push_back(Scalar(q));
      candidates.push_back(Scalar(mpq_class(-q)));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Poly cur = p;
  for (const auto& cand : candidates) {
    if (cur.degree() < 1) break;
    int mult = 0;
    while (cur.degree() >= 1 && cur.eval(cand).is_zero()) {
      // synthetic division by (x - cand)
      Vec q(static_cast<size_t>(cur.degree()));
      Scalar carry;
      for (int i = cur.degree(); i >= 1; --i) {
        carry = cur.c[i] + carry * cand;
        q[i - 1] = carry;
      }
      cur = Poly::from_coeffs(std::move(q));
      ++mult;
    }
    if (mult > 0) out.roots.push_back({cand, mult});
  }
  out.remainder = cur;
  return out;
}

static std::vector<Poly> squarefree_parts(Poly p) {
  std::vector<Poly> parts;
  p = poly_monic(std::move(p));
  while (p.degree() > 0) {
    Poly g = poly_gcd(p, poly_derivative(p));
    Poly s = poly_divmod(p, g).first;  // radical: distinct factors once
    bool seen = false;
    for (const auto& q : parts)
      if (q.c == s.c) seen = true;
    if (!seen && s.degree() > 0) parts.push_back(s);
    if (g.degree() == 0) break;
    p = g;
  }
  return parts;
}

SpectralResult rational_spectral(const Matrix& A) {
  if (!A.is_square()) throw Error("DimensionMismatch", "rational_spectral needs a square matrix");
  int n = A.rows;
  if (n == 0) return std::vector<Eigenpair>{};
  Poly cp = char_poly(A);
  RootSplit rs = rational_roots(cp);
  if (rs.remainder.degree() > 0) return SplitFailure{squarefree_parts(rs.remainder)};
  std::vector<Eigenpair> pairs;
  int total = 0;
  for (const auto& [lambda, mult] : rs.roots) {
    Matrix shifted = A - lambda * Matrix::identity(n);
    Subspace gen = solve_and_kernel(shifted.pow(n), nullptr).kernel;
    if (gen.dim() != mult)
      throw Error("Internal", "generalized eigenspace dimension mismatch");
    total += gen.dim();
    pairs.push_back({lambda, std::move(gen)});
  }
  if (total != n) throw Error("Internal", "eigenspace dimensions do not fill the space");
  return pairs;
}

}  // namespace jforge
