#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "jforge/forms.hpp"

using namespace jforge;
using namespace jftest;

TEST_CASE("check_pep on the displayed J_2_1 form and failure variants") {
  auto j21 = catalog_get("J_2_lambda");
  PepReport rep = check_pep(j21.algebra, *j21.form);
  CHECK(rep.ok());

  // Identity gram on a zero-product algebra: everything passes.
  JordanAlgebra zero2 = JordanAlgebra::create(default_names(2), MulTable(2));
  CHECK(check_pep(zero2, BilinearForm(Matrix::identity(2))).ok());

  // Identity gram on J_2_1 breaks associativity at a triple like (a1,a1,b1).
  PepReport bad = check_pep(j21.algebra, BilinearForm(Matrix::identity(2)));
  CHECK(bad.symmetric);
  CHECK(bad.nondegenerate);
  CHECK(!bad.associative);
  REQUIRE(bad.first_violation.has_value());
  CHECK(bad.first_violation->what == "associativity B(xy,z)=B(x,yz)");
}

TEST_CASE("orthogonal complements of Ann and Z on catalog entries") {
  for (const char* name :
       {"J_1_1", "J_2_0", "J_2_lambda", "J_3_0_k", "J_3_alpha_k", "J_4_0_A", "J_4_0_B",
        "J_4_1", "J_5_0_1", "J_5_1_0", "NONASSOC_5", "UNIT_1", "H_2"}) {
    PseudoEuclideanAlgebra p = catalog_get(name).pe();
    CoreSubspaces core = annulator_and_center(p.algebra());
    CHECK(orthogonal_complement(p, core.ann) == core.square);
    CHECK(orthogonal_complement(p, core.center) == associator_space(p.algebra()));
  }
}

TEST_CASE("orthogonal complement dimensions and double perp") {
  for (int trial = 0; trial < 10; ++trial) {
    PseudoEuclideanAlgebra p = random_pe_base();
    Subspace s = Subspace::span(p.dim(), {rvec(p.dim(), 3), rvec(p.dim(), 3)});
    Subspace perp = orthogonal_complement(p, s);
    CHECK(s.dim() + perp.dim() == p.dim());
    CHECK(orthogonal_complement(p, perp) == s);
  }
  PseudoEuclideanAlgebra p = catalog_get("J_4_1").pe();
  CHECK(orthogonal_complement(p, Subspace::full(4)).is_zero());
}

TEST_CASE("split_by_ideal recovers direct-sum factors") {
  PseudoEuclideanAlgebra p1 = catalog_get("J_2_lambda").pe();
  PseudoEuclideanAlgebra p2 = catalog_get("J_1_1").pe();
  PseudoEuclideanAlgebra sum = orthogonal_direct_sum(p1, p2);
  Subspace first = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});
  auto res = split_by_ideal(sum, first);
  REQUIRE(std::holds_alternative<SplitOk>(res));
  auto ok = std::get<SplitOk>(res);
  CHECK(ok.first.dim() == 2);
  CHECK(ok.second.dim() == 1);
  CHECK(ok.first.algebra().mul().c == p1.algebra().mul().c);
  CHECK(ok.second.form().gram == p2.form().gram);

  // Degenerate ideal: span{b1} in J_2_1.
  auto deg = split_by_ideal(p1, Subspace::span(2, {unit_vec(2, 1)}));
  CHECK(std::holds_alternative<Degenerate>(deg));

  // Zero ideal splits off nothing.
  auto triv = split_by_ideal(p1, Subspace::zero(2));
  REQUIRE(std::holds_alternative<SplitOk>(triv));
  CHECK(std::get<SplitOk>(triv).second.dim() == 2);

  CHECK_THROWS_WITH_AS(split_by_ideal(p1, Subspace::span(2, {unit_vec(2, 0)})),
                       doctest::Contains("NotAnIdeal"), Error);
}

TEST_CASE("split outputs recombine to the original block structure") {
  PseudoEuclideanAlgebra sum =
      orthogonal_direct_sum(catalog_get("UNIT_1").pe(), catalog_get("J_2_lambda").pe());
  Subspace line = Subspace::span(3, {unit_vec(3, 0)});
  auto res = split_by_ideal(sum, line);
  REQUIRE(std::holds_alternative<SplitOk>(res));
  auto ok = std::get<SplitOk>(res);
  PseudoEuclideanAlgebra re = orthogonal_direct_sum(ok.first, ok.second);
  CHECK(re.algebra().mul().c == sum.algebra().mul().c);
  CHECK(re.form().gram == sum.form().gram);
}

TEST_CASE("dual basis") {
  // Orthonormal gram: dual = original.
  JordanAlgebra zero2 = JordanAlgebra::create(default_names(2), MulTable(2));
  PseudoEuclideanAlgebra p =
      PseudoEuclideanAlgebra::create(zero2, BilinearForm(Matrix::identity(2)));
  auto dual = dual_basis(p);
  CHECK(dual[0] == unit_vec(2, 0));
  CHECK(dual[1] == unit_vec(2, 1));

  // Hyperbolic J_2_1: duals swap.
  PseudoEuclideanAlgebra j21 = catalog_get("J_2_lambda").pe();
  auto d2 = dual_basis(j21);
  CHECK(d2[0] == unit_vec(2, 1));
  CHECK(d2[1] == unit_vec(2, 0));

  // Defining property on random catalog entries.
  for (const char* name : {"J_3_alpha_k", "J_4_0_B", "H_2"}) {
    PseudoEuclideanAlgebra q = catalog_get(name).pe();
    auto d = dual_basis(q);
    for (int i = 0; i < q.dim(); ++i)
      for (int j = 0; j < q.dim(); ++j)
        CHECK(q.form().eval(unit_vec(q.dim(), i), d[j]) ==
              (i == j ? Scalar(1) : Scalar(0)));
  }
}

TEST_CASE("B-symmetric and B-antisymmetric predicates") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
  Matrix sym(2, 2);
  sym.at(0, 0) = Scalar(2);
  sym.at(1, 1) = Scalar(2);  // scalar matrices are both-symmetric
  CHECK(is_b_symmetric(p.form(), sym));
  Matrix anti(2, 2);
  anti.at(0, 0) = Scalar(1);
  anti.at(1, 1) = Scalar(-1);
  CHECK(is_b_antisymmetric(p.form(), anti));
  CHECK(!is_b_antisymmetric(p.form(), sym));
}
