#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "jforge/diagnostics.hpp"
#include "jforge/double_ext.hpp"

using namespace jforge;
using namespace jftest;

TEST_CASE("double extension of {0} by the unital line is S + S*") {
  PseudoEuclideanAlgebra zero = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create({}, MulTable(0)), BilinearForm(Matrix(0, 0)));
  JordanAlgebra s = catalog_get("UNIT_1").algebra;
  DoubleExtensionSpec spec{zero, s, {Matrix(0, 0)}, BilinearForm::zero(1)};
  PseudoEuclideanAlgebra out = double_extension(spec);
  CHECK(out.dim() == 2);
  CHECK(out.algebra().basis_product(0, 0) == unit_vec(2, 0));  // e e = e
  CHECK(out.algebra().basis_product(0, 1) == unit_vec(2, 1));  // e f = f
  CHECK(is_zero_vec(out.algebra().basis_product(1, 1)));
  CHECK(out.form().gram.at(0, 1) == Scalar(1));
  CHECK(out.form().gram.at(0, 0) == Scalar(0));
}

TEST_CASE("gamma = 0 and gamma = Albert give two independent scalar products") {
  PseudoEuclideanAlgebra base = catalog_get("J_2_lambda").pe();
  JordanAlgebra top = catalog_get("UNIT_1").algebra;
  std::vector<Matrix> pi{Matrix(2, 2)};  // zero action of the line
  PseudoEuclideanAlgebra out0 =
      double_extension(DoubleExtensionSpec{base, top, pi, BilinearForm::zero(1)});
  BilinearForm albert = albert_form(top);
  PseudoEuclideanAlgebra out1 =
      double_extension(DoubleExtensionSpec{base, top, pi, albert});
  CHECK(out0.algebra().mul().c == out1.algebra().mul().c);
  Matrix diff = out1.form().gram - out0.form().gram;
  CHECK(!diff.is_zero());
  // Difference is supported on the gamma block and is itself associative.
  BilinearForm diff_form(diff);
  CHECK(rank(diff) == rank(albert.gram));
  PepReport rep = check_pep(out0.algebra(), diff_form);
  CHECK(rep.associative);
}

TEST_CASE("double extension by the trivial top returns the base") {
  PseudoEuclideanAlgebra base = catalog_get("J_3_alpha_k").pe();
  DoubleExtensionSpec spec{base, JordanAlgebra(), {}, BilinearForm(Matrix(0, 0))};
  PseudoEuclideanAlgebra out = double_extension(spec);
  CHECK(out.dim() == 3);
  CHECK(out.algebra().mul().c == base.algebra().mul().c);
  CHECK(out.form().gram == base.form().gram);
}

TEST_CASE("double extension rejects broken specs by name") {
  PseudoEuclideanAlgebra base = catalog_get("J_2_lambda").pe();
  JordanAlgebra top = catalog_get("UNIT_1").algebra;
  // Non-B1-symmetric pi.
  Matrix bad(2, 2);
  bad.at(0, 0) = Scalar(1);
  CHECK_THROWS_WITH_AS(
      double_extension(DoubleExtensionSpec{base, top, {bad}, BilinearForm::zero(1)}),
      doctest::Contains("pi-not-B1-symmetric"), Error);
  // B1-symmetric but not a representation: a1 -> 0, b1 -> a1.
  Matrix notrep(2, 2);
  notrep.at(0, 1) = Scalar(1);
  CHECK_THROWS_WITH_AS(
      double_extension(DoubleExtensionSpec{base, top, {notrep}, BilinearForm::zero(1)}),
      doctest::Contains("SpecInvalid:rep"), Error);
  // Non-symmetric gamma on a two-dimensional top.
  JordanAlgebra top2 = catalog_get("J_2_0").algebra;
  std::vector<Matrix> pi0(2, Matrix(2, 2));
  Matrix asym(2, 2);
  asym.at(0, 1) = Scalar(1);
  CHECK_THROWS_WITH_AS(
      double_extension(DoubleExtensionSpec{base, top2, pi0, BilinearForm(asym)}),
      doctest::Contains("gamma-not-symmetric"), Error);
  // Symmetric but non-associative gamma on the J_2_1 top.
  JordanAlgebra top21 = catalog_get("J_2_lambda").algebra;
  CHECK_THROWS_WITH_AS(
      double_extension(
          DoubleExtensionSpec{base, top21, pi0, BilinearForm(Matrix::identity(2))}),
      doctest::Contains("gamma-not-associative"), Error);
}

TEST_CASE("generalized double extension reproduces J_3_1_0 from J_1_1") {
  PseudoEuclideanAlgebra base = catalog_get("J_1_1").pe();
  GdeSpec spec{base, AdmissiblePair{Matrix(1, 1), Vec{Scalar(1)}}, Scalar(0)};
  PseudoEuclideanAlgebra out = generalized_double_extension(spec);
  JordanAlgebra j310 = catalog_get("J_3_1_0").algebra;
  CHECK(check_isomorphism(out.algebra(), j310, Matrix::identity(3)));
}

TEST_CASE("generalized double extension of {0}") {
  PseudoEuclideanAlgebra zero = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create({}, MulTable(0)), BilinearForm(Matrix(0, 0)));
  GdeSpec flat{zero, AdmissiblePair{Matrix(0, 0), Vec{}}, Scalar(0)};
  PseudoEuclideanAlgebra j20 = generalized_double_extension(flat);
  CHECK(j20.dim() == 2);
  CHECK(is_zero_vec(j20.algebra().basis_product(0, 0)));
  GdeSpec bent{zero, AdmissiblePair{Matrix(0, 0), Vec{}}, Scalar(1)};
  PseudoEuclideanAlgebra j21 = generalized_double_extension(bent);
  CHECK(j21.algebra().basis_product(0, 0) == unit_vec(2, 1));  // a*a = k b
}

TEST_CASE("J_5_0_1 table matches the theorem's product entry for entry") {
  // Base J_3_0_1 (a2,a,b2), D(a2)=alpha2 a + alpha3 b2, D(a)=alpha2 b2,
  // x0 = eta1 a2 + eta2 a + eta3 b2 with eta1 = alpha2^2.
  Scalar a2c(2), a3c(3), e2(5), e3(7), k(11);
  Scalar e1 = a2c * a2c;
  auto res = catalog_get("J_5_0_1", {{"alpha2", a2c},
                                     {"alpha3", a3c},
                                     {"eta1", e1},
                                     {"eta2", e2},
                                     {"eta3", e3},
                                     {"k", k}});
  const JordanAlgebra& j = res.algebra;  // basis a4,a2,a,b2,b4
  auto v = [&](std::initializer_list<std::pair<int, Scalar>> terms) {
    Vec out = zero_vec(5);
    for (auto& [i, c] : terms) out[i] = c;
    return out;
  };
  CHECK(j.basis_product(0, 0) == v({{1, e1}, {2, e2}, {3, e3}, {4, k}}));  // a4a4
  CHECK(j.basis_product(0, 1) == v({{2, a2c}, {3, a3c}, {4, e3}}));        // a4a2
  CHECK(j.basis_product(0, 2) == v({{3, a2c}, {4, e2}}));                  // a4a
  CHECK(j.basis_product(0, 3) == v({{4, e1}}));                            // a4b2
  CHECK(j.basis_product(1, 1) == v({{3, Scalar(1)}, {4, a3c}}));           // a2a2
  CHECK(j.basis_product(1, 2) == v({{4, a2c}}));                           // a2a
  CHECK(is_zero_vec(j.basis_product(2, 2)));                               // aa
  CHECK(is_zero_vec(j.basis_product(1, 3)));                               // a2b2
  CHECK(is_zero_vec(j.basis_product(0, 4)));                               // b4 in Ann
}

TEST_CASE("gde peels back: J_2_1 at b1") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_lambda").pe();
  GdePeel peel = peel_gde(p, unit_vec(2, 1));
  CHECK(peel.w.dim() == 0);
  CHECK(peel.k == Scalar(1));
  CHECK(peel.a == unit_vec(2, 0));
}

TEST_CASE("gde peel rejects bad directions") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_lambda").pe();
  // b not in Ann.
  CHECK_THROWS_WITH_AS(peel_gde(p, unit_vec(2, 0)), doctest::Contains("BadDirection"),
                       Error);
  // B(b,b) != 0: the unital line direct summand.
  PseudoEuclideanAlgebra q =
      orthogonal_direct_sum(catalog_get("J_1_1").pe(), catalog_get("J_2_lambda").pe());
  // J_1_1 has a in Ann with B(a,a)=1.
  CHECK_THROWS_WITH_AS(peel_gde(q, unit_vec(3, 0)), doctest::Contains("BadDirection"),
                       Error);
}

TEST_CASE("gde round trips on randomized specs recover the data exactly") {
  for (int trial = 0; trial < 30; ++trial) {
    GdeSpec spec = random_gde_spec();
    PseudoEuclideanAlgebra big = generalized_double_extension(spec);
    int n = big.dim();
    GdePeel peel = peel_gde(big, unit_vec(n, n - 1));  // peel at the construction's b
    CHECK(peel.a == unit_vec(n, 0));
    CHECK(peel.w.algebra().mul().c == spec.base.algebra().mul().c);
    CHECK(peel.w.form().gram == spec.base.form().gram);
    CHECK(peel.pair.d == spec.pair.d);
    CHECK(peel.pair.x0 == spec.pair.x0);
    CHECK(peel.k == spec.k);
    // peel_gde verified the isometry internally; double-check it is identity.
    CHECK(peel.isometry == Matrix::identity(n));
  }
}

TEST_CASE("de peel: T*_0 of the unital line at the dual line") {
  JordanAlgebra u = catalog_get("UNIT_1").algebra;
  PseudoEuclideanAlgebra p = catalog_get("TSTAR0(UNIT_1)").pe();
  Subspace dual_line = Subspace::span(2, {unit_vec(2, 1)});
  DePeel peel = peel_de(p, dual_line);
  CHECK(peel.w.dim() == 0);
  CHECK(peel.v.dim() == 1);
  CHECK(peel.v.basis_product(0, 0) == Vec{Scalar(1)});  // V = the unital line
  (void)u;
}

TEST_CASE("de round trips on randomized specs") {
  for (int trial = 0; trial < 30; ++trial) {
    DoubleExtensionSpec spec = random_de_spec();
    PseudoEuclideanAlgebra big = double_extension(spec);
    int n2 = spec.top.dim(), n1 = spec.base.dim();
    int n = big.dim();
    // The canonical maximal ideal J1 + J2^*.
    std::vector<Vec> gens;
    for (int i = 0; i < n1 + n2; ++i) gens.push_back(unit_vec(n, n2 + i));
    DePeel peel = peel_de(big, Subspace::span(n, gens));
    CHECK(peel.w.dim() == n1);
    CHECK(peel.v.dim() == n2);
    CHECK(peel.w.algebra().mul().c == spec.base.algebra().mul().c);
    CHECK(peel.w.form().gram == spec.base.form().gram);
    CHECK(peel.v.mul().c == spec.top.mul().c);
    for (int i = 0; i < n2; ++i) CHECK(peel.pi[i] == spec.pi[i]);
    // gamma recovered as B restricted to V, i.e. the spec's gamma.
    CHECK(peel.gamma.gram == spec.gamma.gram);
  }
}

TEST_CASE("de peel refuses nondegenerate ideals") {
  PseudoEuclideanAlgebra q =
      orthogonal_direct_sum(catalog_get("UNIT_1").pe(), catalog_get("J_2_lambda").pe());
  Subspace line = Subspace::span(3, {unit_vec(3, 0)});
  CHECK_THROWS_WITH_AS(peel_de(q, line), doctest::Contains("NondegenerateIdeal"), Error);
}

TEST_CASE("gde output invariants: b in Ann, B(a,J1)=0, (Kb)^perp = J1 + Kb") {
  for (int trial = 0; trial < 8; ++trial) {
    GdeSpec spec = random_gde_spec();
    PseudoEuclideanAlgebra big = generalized_double_extension(spec);
    int n = big.dim();
    Vec b = unit_vec(n, n - 1);
    CHECK(annulator_and_center(big.algebra()).ann.contains(b));
    for (int i = 0; i < spec.base.dim(); ++i)
      CHECK(big.form().eval(unit_vec(n, 0), unit_vec(n, 1 + i)).is_zero());
    Subspace perp = orthogonal_complement(big, Subspace::span(n, {b}));
    std::vector<Vec> middle_and_b;
    for (int i = 0; i < spec.base.dim(); ++i) middle_and_b.push_back(unit_vec(n, 1 + i));
    middle_and_b.push_back(b);
    CHECK(perp == Subspace::span(n, middle_and_b));
  }
}
