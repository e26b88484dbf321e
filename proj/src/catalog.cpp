#include "jforge/catalog.hpp"

#include <algorithm>

#include "jforge/double_ext.hpp"
#include "jforge/represent.hpp"
#include "jforge/tkk.hpp"

namespace jforge {

PseudoEuclideanAlgebra CatalogResult::pe() const {
  if (!form) throw Error("BadParams", "entry carries no associative scalar product");
  return PseudoEuclideanAlgebra::create(algebra, *form);
}

static Scalar param(const std::map<std::string, Scalar>& params, const std::string& key,
                    const Scalar& dflt) {
  auto it = params.find(key);
  return it == params.end() ? dflt : it->second;
}

static void reject_unknown(const std::map<std::string, Scalar>& params,
                           const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw Error("BadParams", "unknown parameter '" + k + "'");
}

static BilinearForm hyperbolic_pairs_form(int n, const std::vector<std::pair<int, int>>& pairs,
                                          const std::vector<int>& units) {
  Matrix g(n, n);
  for (auto [i, j] : pairs) {
    g.at(i, j) = Scalar(1);
    g.at(j, i) = Scalar(1);
  }
  for (int i : units) g.at(i, i) = Scalar(1);
  return BilinearForm(g);
}

static CatalogResult make(JordanAlgebra a, std::optional<BilinearForm> form,
                          std::string notes = "") {
  if (form) PseudoEuclideanAlgebra::create(a, *form);  // verify pep now
  return CatalogResult{std::move(a), std::move(form), std::move(notes)};
}

static JordanAlgebra gde_relabel(const PseudoEuclideanAlgebra& base,
                                 const AdmissiblePair& pair, const Scalar& k,
                                 std::vector<std::string> names) {
  PseudoEuclideanAlgebra out = generalized_double_extension(GdeSpec{base, pair, k});
  return JordanAlgebra::create_unchecked(std::move(names), out.algebra().mul());
}

static CatalogResult build_j11() {
  MulTable t(1);
  return make(JordanAlgebra::create_unchecked({"a"}, t),
              hyperbolic_pairs_form(1, {}, {0}));
}

static CatalogResult build_j2(const Scalar& lambda) {
  MulTable t(2);
  t.set_product(0, 0, Vec{Scalar(0), lambda});  // a1 a1 = lambda b1
  return make(JordanAlgebra::create_unchecked({"a1", "b1"}, std::move(t)),
              hyperbolic_pairs_form(2, {{0, 1}}, {}));
}

static CatalogResult build_j3_0_k(const Scalar& k) {
  MulTable t(3);  // a2, a, b2 with a2 a2 = k b2
  t.set_product(0, 0, Vec{Scalar(0), Scalar(0), k});
  return make(JordanAlgebra::create_unchecked({"a2", "a", "b2"}, std::move(t)),
              hyperbolic_pairs_form(3, {{0, 2}}, {1}));
}

static CatalogResult build_j3_alpha_k(const Scalar& alpha, const Scalar& k) {
  MulTable t(3);  // a2 a2 = alpha a + k b2, a2 a = alpha b2
  t.set_product(0, 0, Vec{Scalar(0), alpha, k});
  t.set_product(0, 1, Vec{Scalar(0), Scalar(0), alpha});
  return make(JordanAlgebra::create_unchecked({"a2", "a", "b2"}, std::move(t)),
              hyperbolic_pairs_form(3, {{0, 2}}, {1}));
}

static const char* kJ40Note =
    "realized as the generalized double extension of J_2_0; the commonly "
    "tabulated a1a1 line carries a spurious b1 term that fails the Jordan "
    "check and is dropped";

static CatalogResult build_j4_0(bool family_a, const Scalar& alpha, const Scalar& eta,
                                const Scalar& epsilon, const Scalar& k) {
  CatalogResult base = build_j2(Scalar(0));
  Matrix d(2, 2);
  if (family_a)
    d.at(1, 0) = alpha;  // D(a1) = alpha b1
  else
    d.at(0, 1) = alpha;  // D(b1) = alpha a1
  Vec x0{eta, epsilon};
  JordanAlgebra alg = gde_relabel(base.pe(), AdmissiblePair{d, x0}, k,
                                  {"a3", "a1", "b1", "b3"});
  return make(std::move(alg), hyperbolic_pairs_form(4, {{0, 3}, {1, 2}}, {}), kJ40Note);
}

static CatalogResult build_j4_1(const Scalar& beta, const Scalar& epsilon, const Scalar& k) {
  CatalogResult base = build_j2(Scalar(1));
  Matrix d(2, 2);
  d.at(1, 0) = beta;  // D(a1) = beta b1
  Vec x0{Scalar(0), epsilon};
  JordanAlgebra alg = gde_relabel(base.pe(), AdmissiblePair{d, x0}, k,
                                  {"a3", "a1", "b1", "b3"});
  return make(std::move(alg), hyperbolic_pairs_form(4, {{0, 3}, {1, 2}}, {}));
}

static const char* kJ501Note =
    "admissibility with a B-symmetric D forces D(a) = alpha2 b2 and "
    "eta1 in {0, alpha2^2}; commonly tabulated versions omit the eta2 b4 "
    "term of a4a, restored here from the extension product";

static CatalogResult build_j5_0_1(const std::map<std::string, Scalar>& params) {
  Scalar a2 = param(params, "alpha2", Scalar(1));
  Scalar a3 = param(params, "alpha3", Scalar(0));
  Scalar e1 = param(params, "eta1", Scalar(0));
  Scalar e2 = param(params, "eta2", Scalar(0));
  Scalar e3 = param(params, "eta3", Scalar(0));
  Scalar k = param(params, "k", Scalar(0));
  if (!e1.is_zero() && e1 != a2 * a2)
    throw Error("BadParams", "eta1 must be 0 or alpha2^2");
  CatalogResult base = build_j3_0_k(Scalar(1));
  Matrix d(3, 3);  // basis a2, a, b2
  d.at(1, 0) = a2;
  d.at(2, 0) = a3;  // D(a2) = alpha2 a + alpha3 b2
  d.at(2, 1) = a2;  // D(a)  = alpha2 b2
  Vec x0{e1, e2, e3};
  JordanAlgebra alg = gde_relabel(base.pe(), AdmissiblePair{d, x0}, k,
                                  {"a4", "a2", "a", "b2", "b4"});
  return make(std::move(alg), hyperbolic_pairs_form(5, {{0, 4}, {1, 3}}, {2}), kJ501Note);
}

static const char* kJ510Note =
    "B-symmetry of D forces gamma = alpha; commonly tabulated a2a2/a2a "
    "lines disagree with the extension product and are rebuilt from it";

static CatalogResult build_j5_1_0(const std::map<std::string, Scalar>& params) {
  Scalar alpha = param(params, "alpha", Scalar(1));
  Scalar beta = param(params, "beta", Scalar(0));
  Scalar gamma = param(params, "gamma", alpha);
  Scalar epsilon = param(params, "epsilon", Scalar(0));
  Scalar eta = param(params, "eta", Scalar(0));
  Scalar k = param(params, "k", Scalar(0));
  if (gamma != alpha)
    throw Error("BadParams", "gamma must equal alpha (B-symmetry of D)");
  CatalogResult base = build_j3_alpha_k(Scalar(1), Scalar(0));
  Matrix d(3, 3);  // basis a2, a, b2
  d.at(1, 0) = alpha;
  d.at(2, 0) = beta;  // D(a2) = alpha a + beta b2
  d.at(2, 1) = gamma;  // D(a) = gamma b2
  Vec x0{Scalar(0), epsilon, eta};
  JordanAlgebra alg = gde_relabel(base.pe(), AdmissiblePair{d, x0}, k,
                                  {"a4", "a2", "a", "b2", "b4"});
  return make(std::move(alg), hyperbolic_pairs_form(5, {{0, 4}, {1, 3}}, {2}), kJ510Note);
}

static CatalogResult build_nonassoc5() {
  // J_5_1_0 at alpha = gamma = 1, beta = epsilon = eta = k = 0, written out:
  // a2a2 = a, a2a = b2 + b4, a4a2 = a, a4a = b2, b2, b4 in Ann.
  MulTable t(5);  // a4, a2, a, b2, b4
  t.set_product(1, 1, Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  t.set_product(1, 2, Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
  t.set_product(0, 1, Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  t.set_product(0, 2, Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0)});
  return make(JordanAlgebra::create_unchecked({"a4", "a2", "a", "b2", "b4"}, std::move(t)),
              hyperbolic_pairs_form(5, {{0, 4}, {1, 3}}, {2}),
              "the five-dimensional nonassociative witness: a2(a2a4)-(a2a2)a4 = b4");
}

static CatalogResult build_unit1() {
  MulTable t(1);
  t.set_product(0, 0, Vec{Scalar(1)});
  return make(JordanAlgebra::create_unchecked({"e"}, std::move(t)),
              hyperbolic_pairs_form(1, {}, {0}));
}

static CatalogResult build_spin(const std::map<std::string, Scalar>& params) {
  int m = 2;
  if (auto it = params.find("n"); it != params.end()) {
    if (!it->second.is_integer() || it->second.sign() <= 0)
      throw Error("BadParams", "n must be a positive integer");
    m = static_cast<int>(mpz_get_si(it->second.raw().get_num().get_mpz_t()));
    if (m > 10) throw Error("BadParams", "spin factor capped at n = 10");
  }
  std::vector<Scalar> q;
  for (int i = 1; i <= m; ++i) {
    Scalar qi = param(params, "q" + std::to_string(i), Scalar(1));
    if (qi.is_zero()) throw Error("BadParams", "q must be nondegenerate (diagonal nonzero)");
    q.push_back(qi);
  }
  int n = m + 1;
  MulTable t(n);  // e, v1..vm: e unit, v_i v_j = q_i d_ij e
  t.set_product(0, 0, unit_vec(n, 0));
  for (int i = 1; i < n; ++i) t.set_product(0, i, unit_vec(n, i));
  for (int i = 1; i < n; ++i) t.set_product(i, i, q[i - 1] * unit_vec(n, 0));
  Matrix g(n, n);
  g.at(0, 0) = Scalar(1);
  for (int i = 1; i < n; ++i) g.at(i, i) = q[i - 1];
  std::vector<std::string> names{"e"};
  for (int i = 1; i < n; ++i) names.push_back("v" + std::to_string(i));
  return make(JordanAlgebra::create_unchecked(std::move(names), std::move(t)),
              BilinearForm(std::move(g)));
}

static CatalogResult build_hn(const std::map<std::string, Scalar>& params) {
  int m = 2;
  if (auto it = params.find("n"); it != params.end()) {
    if (!it->second.is_integer() || it->second.sign() <= 0)
      throw Error("BadParams", "n must be a positive integer");
    m = static_cast<int>(mpz_get_si(it->second.raw().get_num().get_mpz_t()));
  }
  if (m < 1 || m > 4) throw Error("BadParams", "H_n supported for n in 1..4");
  // Basis: E_11..E_mm then S_ij = E_ij + E_ji for i<j; product x o y in
  // matrix form, expressed through the basis.
  struct B {
    int i, j;
  };
  std::vector<B> basis;
  for (int i = 0; i < m; ++i) basis.push_back({i, i});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) basis.push_back({i, j});
  int n = static_cast<int>(basis.size());
  auto as_matrix = [&](int idx) {
    Matrix mm(m, m);
    mm.at(basis[idx].i, basis[idx].j) = Scalar(1);
    mm.at(basis[idx].j, basis[idx].i) = Scalar(1);
    if (basis[idx].i == basis[idx].j) mm.at(basis[idx].i, basis[idx].i) = Scalar(1);
    return mm;
  };
  auto coords = [&](const Matrix& mm) {
    Vec v(static_cast<size_t>(n));
    for (int t2 = 0; t2 < n; ++t2)
      v[t2] = basis[t2].i == basis[t2].j ? mm.at(basis[t2].i, basis[t2].i)
                                         : mm.at(basis[t2].i, basis[t2].j);
    return v;
  };
  MulTable t(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Matrix prod = Scalar(1, 2) * (as_matrix(a) * as_matrix(b) + as_matrix(b) * as_matrix(a));
      t.set_product(a, b, coords(prod));
    }
  Matrix g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.at(a, b) = (as_matrix(a) * as_matrix(b)).trace();
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      names.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
  return make(JordanAlgebra::create(std::move(names), std::move(t)),
              BilinearForm(std::move(g)));
}

GradedTensorResult tensor_truncated(const JordanAlgebra& j, int n) {
  if (n < 1) throw Error("BadParams", "tensor truncation needs n >= 1");
  int r = j.dim();
  int dim = r * n;
  auto pos = [&](int i, int deg) { return (deg - 1) * r + i; };  // deg in 1..n
  MulTable t(dim);
  for (int d1 = 1; d1 <= n; ++d1)
    for (int d2 = d1; d2 <= n; ++d2)
      for (int i = 0; i < r; ++i)
        for (int k = (d1 == d2 ? i : 0); k < r; ++k) {
          Vec v = zero_vec(dim);
          if (d1 + d2 <= n) {
            Vec p = j.basis_product(i, k);
            for (int u = 0; u < r; ++u) v[pos(u, d1 + d2)] = p[u];
          }
          t.set_product(pos(i, d1), pos(k, d2), v);
        }
  std::vector<std::string> names;
  for (int deg = 1; deg <= n; ++deg)
    for (int i = 0; i < r; ++i)
      names.push_back(j.basis_names()[i] + "X" + std::to_string(deg));
  Matrix d(dim, dim);
  for (int deg = 1; deg <= n; ++deg)
    for (int i = 0; i < r; ++i) d.at(pos(i, deg), pos(i, deg)) = Scalar(deg);
  GradedTensorResult out{JordanAlgebra::create(std::move(names), std::move(t)), std::move(d)};
  return out;
}

TensorSymplecticExample tensor_symplectic_example(const JordanAlgebra& j, int n) {
  GradedTensorResult graded = tensor_truncated(j, n);
  int m = graded.algebra.dim();
  Cocycle zero = Cocycle::zero(Cocycle::Kind::tstar, m, m);
  PseudoEuclideanAlgebra p = tstar_extension(graded.algebra, zero);
  // Dbar(a + f) = D(a) - f o D.
  Matrix dbar(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      dbar.at(i, k) = graded.grading_derivation.at(i, k);
      dbar.at(m + i, m + k) = -graded.grading_derivation.at(k, i);  // -(D^T) on duals
    }
  if (!is_derivation(p.algebra(), dbar))
    throw Error("Internal", "Dbar is not a derivation of the T*-extension");
  if (!is_b_antisymmetric(p.form(), dbar))
    throw Error("Internal", "Dbar is not B-antisymmetric");
  if (!inverse(dbar)) throw Error("Internal", "Dbar is not invertible");
  if (!check_condition_d1(p, dbar))
    throw Error("Internal", "Dbar fails condition (d1)");
  return TensorSymplecticExample{std::move(p), std::move(dbar), graded.algebra,
                                 graded.grading_derivation};
}

static std::optional<std::pair<std::string, std::string>> split_composite(
    const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos) return std::nullopt;
  if (name.back() != ')') throw Error("UnknownName", "malformed composite name " + name);
  return std::make_pair(name.substr(0, open),
                        name.substr(open + 1, name.size() - open - 2));
}

CatalogResult catalog_get(const std::string& name,
                          const std::map<std::string, Scalar>& params) {
  if (auto comp = split_composite(name)) {
    auto [outer, inner_expr] = *comp;
    if (outer == "TSTAR0") {
      reject_unknown(params, {});
      CatalogResult inner = catalog_get(inner_expr);
      int m = inner.algebra.dim();
      PseudoEuclideanAlgebra p = tstar_extension(
          inner.algebra, Cocycle::zero(Cocycle::Kind::tstar, m, m));
      return CatalogResult{p.algebra(), p.form(), "trivial T*-extension of " + inner_expr};
    }
    if (outer == "TENSOR") {
      auto comma = inner_expr.rfind(',');
      if (comma == std::string::npos)
        throw Error("UnknownName", "TENSOR needs (entry, n)");
      std::string inner_name = inner_expr.substr(0, comma);
      int n = 0;
      try {
        n = std::stoi(inner_expr.substr(comma + 1));
      } catch (...) {
        throw Error("BadParams", "TENSOR truncation must be an integer");
      }
      reject_unknown(params, {});
      CatalogResult inner = catalog_get(inner_name);
      GradedTensorResult graded = tensor_truncated(inner.algebra, n);
      return CatalogResult{graded.algebra, std::nullopt,
                           "graded tensor algebra of " + inner_name};
    }
    throw Error("UnknownName", "unknown composite " + name);
  }

  if (name == "J_1_1") {
    reject_unknown(params, {});
    return build_j11();
  }
  if (name == "J_2_0") {
    reject_unknown(params, {});
    return build_j2(Scalar(0));
  }
  if (name == "J_2_lambda") {
    reject_unknown(params, {"lambda"});
    return build_j2(param(params, "lambda", Scalar(1)));
  }
  if (name == "J_2_1") {
    reject_unknown(params, {});
    return build_j2(Scalar(1));
  }
  if (name == "J_3_0_k") {
    reject_unknown(params, {"k"});
    return build_j3_0_k(param(params, "k", Scalar(1)));
  }
  if (name == "J_3_0_1") {
    reject_unknown(params, {});
    return build_j3_0_k(Scalar(1));
  }
  if (name == "J_3_alpha_k") {
    reject_unknown(params, {"alpha", "k"});
    return build_j3_alpha_k(param(params, "alpha", Scalar(1)), param(params, "k", Scalar(0)));
  }
  if (name == "J_3_1_0") {
    reject_unknown(params, {});
    return build_j3_alpha_k(Scalar(1), Scalar(0));
  }
  if (name == "J_4_0_A" || name == "J_4_0_B") {
    reject_unknown(params, {"alpha", "eta", "epsilon", "k"});
    return build_j4_0(name == "J_4_0_A", param(params, "alpha", Scalar(1)),
                      param(params, "eta", Scalar(0)), param(params, "epsilon", Scalar(0)),
                      param(params, "k", Scalar(0)));
  }
  if (name == "J_4_1") {
    reject_unknown(params, {"beta", "epsilon", "k"});
    return build_j4_1(param(params, "beta", Scalar(1)), param(params, "epsilon", Scalar(0)),
                      param(params, "k", Scalar(0)));
  }
  if (name == "J_5_0_1") {
    reject_unknown(params, {"alpha2", "alpha3", "eta1", "eta2", "eta3", "k"});
    return build_j5_0_1(params);
  }
  if (name == "J_5_1_0") {
    reject_unknown(params, {"alpha", "beta", "gamma", "epsilon", "eta", "k"});
    return build_j5_1_0(params);
  }
  if (name == "NONASSOC_5") {
    reject_unknown(params, {});
    return build_nonassoc5();
  }
  if (name == "UNIT_1") {
    reject_unknown(params, {});
    return build_unit1();
  }
  if (name == "SPIN") return build_spin(params);
  if (name == "H_n") return build_hn(params);
  if (name == "H_2") {
    reject_unknown(params, {});
    return build_hn({{"n", Scalar(2)}});
  }
  throw Error("UnknownName", "no catalog entry named " + name);
}

std::vector<CatalogEntryInfo> catalog_list() {
  std::vector<CatalogEntryInfo> out;
  auto add = [&](std::string name, std::string params, bool nil, bool assoc, bool form,
                 std::string notes = "") {
    out.push_back({std::move(name), std::move(params), nil, assoc, form, std::move(notes)});
  };
  add("J_1_1", "", true, true, true);
  add("J_2_0", "", true, true, true);
  add("J_2_lambda", "lambda=1", true, true, true);
  add("J_3_0_k", "k=1", true, true, true);
  add("J_3_alpha_k", "alpha=1, k=0", true, true, true);
  add("J_4_0_A", "alpha=1, eta=0, epsilon=0, k=0", true, true, true, kJ40Note);
  add("J_4_0_B", "alpha=1, eta=0, epsilon=0, k=0", true, true, true, kJ40Note);
  add("J_4_1", "beta=1, epsilon=0, k=0", true, true, true);
  add("J_5_0_1", "alpha2=1, alpha3=0, eta1=0 (0 or alpha2^2), eta2=0, eta3=0, k=0", true,
      false, true, kJ501Note);
  add("J_5_1_0", "alpha=1, beta=0, gamma=alpha, epsilon=0, eta=0, k=0", true, false, true,
      kJ510Note);
  add("NONASSOC_5", "", true, false, true,
      "a2(a2a4) - (a2a2)a4 = b4 != 0");
  add("UNIT_1", "", false, true, true);
  add("SPIN", "n=2, q1..qn=1 (nonzero)", false, false, true);
  add("H_n", "n=2 (1..4)", false, false, true);
  add("TENSOR(entry,n)", "", true, true, false, "nilpotent graded tensor algebra");
  add("TSTAR0(entry)", "", false, true, true, "hyperbolic trivial T*-extension");
  return out;
}

}  // namespace jforge
