#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "jforge/manin.hpp"

using namespace jforge;
using namespace jftest;

namespace {

ManinTriple tstar_triple(const std::string& inner) {
  PseudoEuclideanAlgebra p = catalog_get("TSTAR0(" + inner + ")").pe();
  int n = p.dim() / 2;
  std::vector<Vec> ub, vb;
  for (int i = 0; i < n; ++i) ub.push_back(unit_vec(2 * n, i));
  for (int i = 0; i < n; ++i) vb.push_back(unit_vec(2 * n, n + i));
  return ManinTriple{p, Subspace::span(2 * n, ub), Subspace::span(2 * n, vb),
                     std::nullopt};
}

ManinTriple j20_triple(bool with_omega) {
  PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
  Matrix og(2, 2);
  og.at(0, 1) = Scalar(1);
  og.at(1, 0) = Scalar(-1);
  return ManinTriple{p, Subspace::span(2, {unit_vec(2, 0)}),
                     Subspace::span(2, {unit_vec(2, 1)}),
                     with_omega ? std::optional<BilinearForm>(BilinearForm(og))
                                : std::nullopt};
}

}  // namespace

TEST_CASE("check_manin: T*_0 triples, the hyperbolic plane, and failures") {
  for (const char* inner : {"J_2_1", "J_3_0_1", "J_3_1_0", "NONASSOC_5", "H_2"}) {
    CAPTURE(inner);
    CHECK(check_manin(tstar_triple(inner)).ok());
  }
  CHECK(check_manin(j20_triple(false)).ok());
  CHECK(check_manin(j20_triple(true)).ok());

  PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
  ManinReport bad = check_manin(p, Subspace::full(2), Subspace::full(2), nullptr);
  CHECK(!bad.ok());
  CHECK(!bad.u_isotropic);
}

TEST_CASE("Manin triples have dim U = dim V = dim/2") {
  for (const char* inner : {"J_2_1", "J_3_1_0", "H_2"}) {
    ManinTriple m = tstar_triple(inner);
    CHECK(m.u.dim() == m.p.dim() / 2);
    CHECK(m.v.dim() == m.p.dim() / 2);
  }
}

TEST_CASE("manin_double_extension: zero base gives the hyperbolic plane triple") {
  PseudoEuclideanAlgebra zero = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create({}, MulTable(0)), BilinearForm(Matrix(0, 0)));
  ManinTriple m{zero, Subspace::zero(0), Subspace::zero(0), std::nullopt};
  ManinTriple out = manin_double_extension(m, AdmissiblePair{Matrix(0, 0), Vec{}});
  CHECK(out.p.dim() == 2);
  CHECK(out.u == Subspace::span(2, {unit_vec(2, 1)}));  // Kb
  CHECK(out.v == Subspace::span(2, {unit_vec(2, 0)}));  // Ka
  CHECK(check_manin(out).ok());
}

TEST_CASE("manin_double_extension enforces D(V) <= V and x0 in V") {
  ManinTriple m = j20_triple(false);
  // Family B: D(b1) = alpha a1 leaves V = span{b1}.
  Matrix bad(2, 2);
  bad.at(0, 1) = Scalar(2);
  CHECK_THROWS_WITH_AS(manin_double_extension(m, AdmissiblePair{bad, zero_vec(2)}),
                       doctest::Contains("D(V)-not-in-V"), Error);
  // x0 outside V.
  CHECK_THROWS_WITH_AS(
      manin_double_extension(m, AdmissiblePair{Matrix(2, 2), unit_vec(2, 0)}),
      doctest::Contains("x0-not-in-V"), Error);
  // Family A with x0 = eps b1 works: D(a1) = alpha b1 maps V to 0.
  Matrix good(2, 2);
  good.at(1, 0) = Scalar(3);
  Vec x0 = zero_vec(2);
  x0[1] = Scalar(5);
  ManinTriple out = manin_double_extension(m, AdmissiblePair{good, x0});
  CHECK(out.p.dim() == 4);
  CHECK(check_manin(out).ok());
}

TEST_CASE("peel_manin round trips and the U-side preference") {
  ManinTriple m = j20_triple(false);
  Matrix d(2, 2);
  d.at(1, 0) = Scalar(3);
  Vec x0 = zero_vec(2);
  x0[1] = Scalar(5);
  ManinTriple big = manin_double_extension(m, AdmissiblePair{d, x0});
  ManinPeel peel = peel_manin(big);  // verifies the round trip internally
  CHECK(peel.triple.p.dim() == 2);
  CHECK(peel.k.is_zero());
}

TEST_CASE("peel_manin on randomized towers") {
  for (int trial = 0; trial < 30; ++trial) {
    // Random nilpotent T*_0 triple, extended by (0, x0) with x0 in Ann cap V.
    const char* inners[] = {"J_2_1", "J_3_0_1", "J_3_1_0", "J_2_0"};
    ManinTriple m = tstar_triple(inners[rint(0, 3)]);
    int n = m.p.dim();
    Subspace ann = annulator_and_center(m.p.algebra()).ann;
    Subspace av = subspace_intersect(ann, m.v);
    REQUIRE(!av.is_zero());
    Vec x0 = zero_vec(n);
    for (const auto& b : av.basis) x0 = x0 + rscalar(3) * b;
    ManinTriple big = manin_double_extension(m, AdmissiblePair{Matrix(n, n), x0});
    CHECK(check_manin(big).ok());
    ManinPeel peel = peel_manin(big);
    CHECK(peel.triple.p.dim() == n);
  }
}

TEST_CASE("Lemma inter as a property: nilpotent triples meet the annulator") {
  for (const char* inner : {"J_2_1", "J_3_0_1", "J_3_1_0", "NONASSOC_5", "J_2_0"}) {
    CAPTURE(inner);
    ManinTriple m = tstar_triple(inner);
    REQUIRE(is_nilpotent(m.p.algebra()));
    Subspace ann = annulator_and_center(m.p.algebra()).ann;
    CHECK(!subspace_intersect(m.u, ann).is_zero());
    CHECK(!subspace_intersect(m.v, ann).is_zero());
  }
  ManinTriple m20 = j20_triple(false);
  Subspace ann = annulator_and_center(m20.p.algebra()).ann;
  CHECK(!subspace_intersect(m20.u, ann).is_zero());
}

TEST_CASE("peel_manin refuses triples that avoid the annulator") {
  ManinTriple sharp = tstar_triple("UNIT_1");  // not nilpotent, Ann = 0
  CHECK(!is_nilpotent(sharp.p.algebra()));
  CHECK_THROWS_WITH_AS(peel_manin(sharp), doctest::Contains("NoIsotropicAnnDirection"),
                       Error);
}

TEST_CASE("spectral_split of the worked example: eigenvalues {1,2,-1,-2}") {
  TensorSymplecticExample ex =
      tensor_symplectic_example(catalog_get("UNIT_1").algebra, 2);
  BridgeReport bridge = bridge_from_derivation(ex.p, ex.dbar);
  ManinTriple m = spectral_split(ex.p, bridge.omega);
  CHECK(m.u.dim() == 2);
  CHECK(m.v.dim() == 2);
  CHECK(check_manin(m).ok());
  // Eigenvalue set check.
  auto spec = rational_spectral(ex.dbar);
  auto pairs = std::get<std::vector<Eigenpair>>(spec);
  std::vector<std::string> vals;
  for (auto& ep : pairs) vals.push_back(ep.lambda.str());
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<std::string>{"-1", "-2", "1", "2"});
}

TEST_CASE("spectral_split: diag(1,-1) on J_2_0 and the split-failure case") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
  Matrix og(2, 2);
  og.at(0, 1) = Scalar(1);
  og.at(1, 0) = Scalar(-1);
  ManinTriple m = spectral_split(p, BilinearForm(og));
  CHECK(m.u == Subspace::span(2, {unit_vec(2, 0)}));
  CHECK(m.v == Subspace::span(2, {unit_vec(2, 1)}));

  // A 4-dimensional zero-product algebra with an omega whose derivation has
  // char poly (x^2+1)^2: SplitFailure.
  JordanAlgebra zero4 = JordanAlgebra::create(default_names(4), MulTable(4));
  Matrix g(4, 4);
  g.at(0, 1) = Scalar(1);
  g.at(1, 0) = Scalar(1);
  g.at(2, 3) = Scalar(1);
  g.at(3, 2) = Scalar(1);
  PseudoEuclideanAlgebra p4 =
      PseudoEuclideanAlgebra::create(zero4, BilinearForm(g));
  Matrix om(4, 4);
  om.at(0, 2) = Scalar(1);
  om.at(2, 0) = Scalar(-1);
  om.at(1, 3) = Scalar(1);
  om.at(3, 1) = Scalar(-1);
  CHECK_THROWS_WITH_AS(spectral_split(p4, BilinearForm(om)),
                       doctest::Contains("SplitFailure"), Error);
}

TEST_CASE("eigenspace product rule holds on towers with products") {
  SymplecticAlgebra s1 = [] {
    PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
    Matrix og(2, 2);
    og.at(0, 1) = Scalar(1);
    og.at(1, 0) = Scalar(-1);
    return make_symplectic(p, BilinearForm(og));
  }();
  // The nontrivial lambda=2 extension has honest products; split it.
  Matrix d(2, 2);
  d.at(1, 0) = Scalar(3);
  Vec x0 = zero_vec(2);
  x0[1] = Scalar(2);
  SymplecticAlgebra out = symplectic_double_extension(
      s1, AdmissiblePair{d, x0}, unit_vec(2, 0), Scalar(2), Scalar(1));
  ManinTriple m = spectral_split(out.p, out.omega);  // product rule verified inside
  CHECK(check_manin(m).ok());
  CHECK(m.u.dim() == 2);
}

TEST_CASE("symplectic_manin_double_extension and its peel round trip") {
  // Base: the J_2_0 triple with omega.
  ManinTriple m = j20_triple(true);
  ManinTriple big = symplectic_manin_double_extension(
      m, AdmissiblePair{Matrix(2, 2), zero_vec(2)}, zero_vec(2), Scalar(1));
  CHECK(big.p.dim() == 4);
  REQUIRE(big.omega.has_value());
  CHECK(check_manin(big).ok());

  SymplecticManinPeel peel = peel_symplectic_manin(big);  // round trip inside
  CHECK(peel.triple.p.dim() == 2);
  CHECK(peel.lambda == Scalar(1));

  // a0 outside V is rejected by name.
  CHECK_THROWS_WITH_AS(
      symplectic_manin_double_extension(m, AdmissiblePair{Matrix(2, 2), zero_vec(2)},
                                        unit_vec(2, 0), Scalar(1)),
      doctest::Contains("a0-not-in-V"), Error);
}

TEST_CASE("zero-base symplectic Manin tower") {
  PseudoEuclideanAlgebra zero = PseudoEuclideanAlgebra::create(
      JordanAlgebra::create({}, MulTable(0)), BilinearForm(Matrix(0, 0)));
  ManinTriple m{zero, Subspace::zero(0), Subspace::zero(0),
                BilinearForm(Matrix(0, 0))};
  ManinTriple two = symplectic_manin_double_extension(
      m, AdmissiblePair{Matrix(0, 0), Vec{}}, Vec{}, Scalar(1));
  CHECK(two.p.dim() == 2);
  ManinTriple four = symplectic_manin_double_extension(
      two, AdmissiblePair{Matrix(2, 2), zero_vec(2)}, zero_vec(2), Scalar(-3));
  CHECK(four.p.dim() == 4);
  SymplecticManinPeel peel = peel_symplectic_manin(four);
  CHECK(peel.triple.p.dim() == 2);
}

TEST_CASE("spectral_split of the worked example feeds peel_symplectic_manin") {
  TensorSymplecticExample ex =
      tensor_symplectic_example(catalog_get("UNIT_1").algebra, 2);
  BridgeReport bridge = bridge_from_derivation(ex.p, ex.dbar);
  ManinTriple m = spectral_split(ex.p, bridge.omega);
  SymplecticManinPeel peel = peel_symplectic_manin(m);
  CHECK(peel.triple.p.dim() == 2);
}

TEST_CASE("peel_symplectic_manin without omega reports NoEigenvector") {
  ManinTriple m = j20_triple(false);
  CHECK_THROWS_WITH_AS(peel_symplectic_manin(m), doctest::Contains("NoEigenvector"),
                       Error);
}
