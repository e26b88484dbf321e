#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "jforge/represent.hpp"

using namespace jforge;
using namespace jftest;

namespace {

std::vector<Matrix> adjoint_action(const JordanAlgebra& a) {
  std::vector<Matrix> pi;
  for (int i = 0; i < a.dim(); ++i) pi.push_back(a.basis_mult_operator(i));
  return pi;
}

std::vector<Matrix> coadjoint_action(const JordanAlgebra& a) {
  std::vector<Matrix> pi;
  for (int i = 0; i < a.dim(); ++i) pi.push_back(a.basis_mult_operator(i).transpose());
  return pi;
}

}  // namespace

TEST_CASE("adjoint, coadjoint and zero actions are representations") {
  for (const char* name : {"J_2_lambda", "J_3_alpha_k", "J_5_1_0", "NONASSOC_5", "H_2"}) {
    JordanAlgebra a = catalog_get(name).algebra;
    CHECK(check_representation(a, a.dim(), adjoint_action(a)).ok);
    CHECK(check_representation(a, a.dim(), coadjoint_action(a)).ok);
    CHECK(check_representation(a, 3, std::vector<Matrix>(a.dim(), Matrix(3, 3))).ok);
  }
}

TEST_CASE("a non-representation is rejected") {
  JordanAlgebra a = catalog_get("J_3_1_0").algebra;
  auto pi = adjoint_action(a);
  pi[0].at(0, 0) = Scalar(1);  // poke the a2-action
  CheckResult res = check_representation(a, 3, pi);
  CHECK(!res.ok);
  CHECK(res.condition.rfind("rep", 0) == 0);
}

TEST_CASE("rep_associator_identity") {
  JordanAlgebra na = catalog_get("NONASSOC_5").algebra;
  CHECK(rep_associator_identity(Representation{na, 5, adjoint_action(na)}));
  JordanAlgebra a = catalog_get("J_3_alpha_k").algebra;  // associative
  CHECK(rep_associator_identity(Representation{a, 3, adjoint_action(a)}));
  CHECK(rep_associator_identity(Representation{a, 2, std::vector<Matrix>(3, Matrix(2, 2))}));
}

TEST_CASE("adjoint representations are admissible") {
  for (const char* name : {"J_2_lambda", "J_3_1_0", "J_4_1", "NONASSOC_5", "H_2"}) {
    JordanAlgebra a = catalog_get(name).algebra;
    Representation pi{a, a.dim(), adjoint_action(a)};
    CHECK(check_admissible_representation(pi, a).ok);
  }
}

TEST_CASE("the zero representation onto a Jordan target is admissible") {
  JordanAlgebra j1 = catalog_get("J_2_lambda").algebra;
  JordanAlgebra j2 = catalog_get("J_3_1_0").algebra;
  Representation pi{j1, 3, std::vector<Matrix>(2, Matrix(3, 3))};
  CHECK(check_admissible_representation(pi, j2).ok);
}

TEST_CASE("the coadjoint of J_3_1_0 onto itself fails admissibility condition 2") {
  JordanAlgebra a = catalog_get("J_3_1_0").algebra;
  Representation pi{a, 3, coadjoint_action(a)};
  CheckResult res = check_admissible_representation(pi, a);
  CHECK(!res.ok);
  CHECK(res.condition.find("adm(2)") != std::string::npos);
}

TEST_CASE("semidirect product: zero action gives the direct sum") {
  JordanAlgebra j1 = catalog_get("J_2_lambda").algebra;
  JordanAlgebra j2 = catalog_get("J_3_1_0").algebra;
  JordanAlgebra out = semidirect_product(j1, j2, std::vector<Matrix>(2, Matrix(3, 3)));
  CHECK(out.dim() == 5);
  // Cross products vanish.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(is_zero_vec(out.basis_product(i, 2 + j)));
}

TEST_CASE("semidirect product: UNIT_1 acting on itself by adjoint") {
  JordanAlgebra u = catalog_get("UNIT_1").algebra;
  JordanAlgebra out = semidirect_product(u, u, {Matrix::identity(1)});
  CHECK(out.dim() == 2);
  CHECK(out.basis_product(0, 0) == unit_vec(2, 0));
  CHECK(out.basis_product(0, 1) == unit_vec(2, 1));
  CHECK(out.basis_product(1, 1) == unit_vec(2, 1));
}

TEST_CASE("semidirect product: trivial J2") {
  JordanAlgebra j1 = catalog_get("J_3_1_0").algebra;
  JordanAlgebra out = semidirect_product(j1, JordanAlgebra(), std::vector<Matrix>(3, Matrix(0, 0)));
  CHECK(out.dim() == 3);
  CHECK(out.mul().c == j1.mul().c);
}

TEST_CASE("semidirect product rejects inadmissible actions by name") {
  JordanAlgebra a = catalog_get("J_3_1_0").algebra;
  CHECK_THROWS_WITH_AS(semidirect_product(a, a, coadjoint_action(a)),
                       doctest::Contains("NotAdmissible:"), Error);
}

TEST_CASE("central extension: zero cocycle and the J_2_1 reconstruction") {
  JordanAlgebra j11 = catalog_get("J_1_1").algebra;
  Cocycle zero = Cocycle::zero(Cocycle::Kind::central, 1, 1);
  JordanAlgebra triv = central_extension(j11, 1, zero);
  CHECK(triv.dim() == 2);
  CHECK(is_zero_vec(triv.basis_product(0, 0)));

  Cocycle phi = Cocycle::zero(Cocycle::Kind::central, 1, 1);
  phi.set(0, 0, Vec{Scalar(1)});  // phi(a,a) = b
  JordanAlgebra ext = central_extension(j11, 1, phi);
  CHECK(ext.basis_product(0, 0) == unit_vec(2, 1));  // reproduces J_2_1
  // V lands in the annulator.
  CHECK(annulator_and_center(ext).ann.contains(unit_vec(2, 1)));
}

TEST_CASE("central extension cocycle identity is enforced") {
  JordanAlgebra u = catalog_get("UNIT_1").algebra;
  Cocycle bad = Cocycle::zero(Cocycle::Kind::central, 1, 1);
  bad.set(0, 0, Vec{Scalar(1)});  // phi(e,e)=v fails phi(xy,x^2)=phi(x,yx^2)? equal here...
  // For the unital line the identity phi(ee,e^2)=phi(e,ee^2) is trivially
  // symmetric, so this one is actually valid.
  CHECK(check_central_cocycle(u, bad).ok);
  // A genuinely bad cocycle on J_3_1_0: phi(a,a) = v, rest 0 violates
  // phi(xy,x^2) = phi(x,yx^2) at x=y=a2: lhs phi(a,a)=v, rhs phi(a2,b2)=0.
  JordanAlgebra j310 = catalog_get("J_3_1_0").algebra;
  Cocycle bad2 = Cocycle::zero(Cocycle::Kind::central, 3, 1);
  bad2.set(1, 1, Vec{Scalar(1)});
  CheckResult res = check_central_cocycle(j310, bad2);
  CHECK(!res.ok);
  CHECK(res.condition == "central-cocycle");
  CHECK_THROWS_WITH_AS(central_extension(j310, 1, bad2),
                       doctest::Contains("BadCocycle"), Error);
}

TEST_CASE("T*_0 of J_1_1 is the 2-dimensional zero algebra with hyperbolic form") {
  JordanAlgebra j11 = catalog_get("J_1_1").algebra;
  PseudoEuclideanAlgebra t = tstar_extension(j11, Cocycle::zero(Cocycle::Kind::tstar, 1, 1));
  CHECK(t.dim() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) CHECK(is_zero_vec(t.algebra().basis_product(i, j)));
  CHECK(t.form().gram.at(0, 1) == Scalar(1));
}

TEST_CASE("T*_0 of the unital line: e.e=e, e.f=f, f.f=0; not nilpotent") {
  JordanAlgebra u = catalog_get("UNIT_1").algebra;
  PseudoEuclideanAlgebra t = tstar_extension(u, Cocycle::zero(Cocycle::Kind::tstar, 1, 1));
  CHECK(t.algebra().basis_product(0, 0) == unit_vec(2, 0));
  CHECK(t.algebra().basis_product(0, 1) == unit_vec(2, 1));
  CHECK(is_zero_vec(t.algebra().basis_product(1, 1)));
  CHECK(!is_nilpotent(t.algebra()));
  // f spans a nilpotent (zero-product) ideal.
  Subspace dual_line = Subspace::span(2, {unit_vec(2, 1)});
  CHECK(is_ideal(t.algebra(), dual_line));
  CHECK(subspace_product(t.algebra(), dual_line, dual_line).is_zero());
}

TEST_CASE("T*_0 of H_2: square of the extension is everything; J* is a zero ideal") {
  JordanAlgebra h2 = catalog_get("H_2").algebra;
  PseudoEuclideanAlgebra t = tstar_extension(h2, Cocycle::zero(Cocycle::Kind::tstar, 3, 3));
  CHECK(t.dim() == 6);
  CoreSubspaces core = annulator_and_center(t.algebra());
  CHECK(core.square == Subspace::full(6));
  std::vector<Vec> dual;
  for (int i = 0; i < 3; ++i) dual.push_back(unit_vec(6, 3 + i));
  Subspace js = Subspace::span(6, dual);
  CHECK(is_ideal(t.algebra(), js));
  CHECK(subspace_product(t.algebra(), js, js).is_zero());
}

TEST_CASE("T*-extension with a nonzero cyclic cocycle stays pseudo-euclidean") {
  // theta on J_2_0 (zero products): (id1) reduces to 0=0; (id2) demands
  // full cyclic symmetry of the 3-tensor theta(ei,ej)(ek).
  JordanAlgebra j20 = catalog_get("J_2_0").algebra;
  Cocycle theta = Cocycle::zero(Cocycle::Kind::tstar, 2, 2);
  // Symmetric + cyclic: theta(a,a) = f_a-coefficient c means tensor c*(x,x,x);
  // use theta(a,a)=(0,1): theta(a,a)(b)=1 -> cyclicity needs theta(b,a)(a)=1.
  theta.set(0, 0, Vec{Scalar(0), Scalar(1)});
  CheckResult bad = check_tstar_cocycle(j20, theta);
  CHECK(!bad.ok);
  CHECK(bad.condition == "id2");
  theta.set(0, 1, Vec{Scalar(1), Scalar(0)});  // theta(a,b)(a) = 1 fixes cyclicity
  CHECK(check_tstar_cocycle(j20, theta).ok);
  PseudoEuclideanAlgebra t = tstar_extension(j20, theta);
  CHECK(t.dim() == 4);
  CHECK(t.algebra().basis_product(0, 0)[3] == Scalar(1));  // a.a has f_b part
}

TEST_CASE("admissible pairs: J_1_1 family (D=0, x0=alpha a)") {
  PseudoEuclideanAlgebra p = catalog_get("J_1_1").pe();
  for (long alpha : {0L, 1L, -3L}) {
    PairReport rep = check_admissible_pair(p, Matrix(1, 1), Vec{Scalar(alpha)});
    CHECK(rep.admissible);
    CHECK(rep.b_symmetric);
  }
}

TEST_CASE("admissible pairs: J_2_0 families A and B") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_0").pe();
  for (int fam = 0; fam < 2; ++fam)
    for (int t = 0; t < 5; ++t) {
      Matrix d(2, 2);
      if (fam == 0)
        d.at(1, 0) = rscalar_nonzero(4);
      else
        d.at(0, 1) = rscalar_nonzero(4);
      PairReport rep = check_admissible_pair(p, d, rvec(2, 4));
      CHECK(rep.admissible);
      CHECK(rep.b_symmetric);
    }
  // A generic non-nilpotent D on the zero-product algebra fails C6.
  Matrix bad(2, 2);
  bad.at(0, 1) = Scalar(1);
  bad.at(1, 0) = Scalar(1);
  PairReport rep = check_admissible_pair(p, bad, zero_vec(2));
  CHECK(!rep.admissible);
  CHECK(rep.first_failed == "C6");
}

TEST_CASE("admissible pairs: J_2_1 rejects D(a1)=a1 (fails C2 first)") {
  PseudoEuclideanAlgebra p = catalog_get("J_2_lambda").pe();
  Matrix d(2, 2);
  d.at(0, 0) = Scalar(1);
  PairReport rep = check_admissible_pair(p, d, zero_vec(2));
  CHECK(!rep.admissible);
  CHECK(rep.first_failed == "C2");
}

TEST_CASE("admissibility checker agrees with 200-point random evaluation") {
  // Both for valid pairs (families) and for random perturbations.
  auto oracle = [](const JordanAlgebra& j, const Matrix& d, const Vec& x0, int points) {
    int n = j.dim();
    Matrix d2 = d * d, d3 = d * d * d;
    for (int t = 0; t < points; ++t) {
      Vec x = rvec(n, 4), y = rvec(n, 4);
      Vec x2 = j.product(x, x);
      Vec dx = d.apply(x);
      if (d.apply(j.product(x2, y)) !=
          j.product(x2, d.apply(y)) + Scalar(2) * j.product(dx, j.product(x, y)) -
              Scalar(2) * j.product(x, j.product(dx, y)))
        return false;  // C1
      if (j.product(dx, d.apply(y)) - d.apply(j.product(dx, y)) !=
          Scalar(1, 2) * associator(j, x0, y, x))
        return false;  // C2
      if (d.apply(j.product(x0, x)) != j.product(x0, dx)) return false;       // C3
      if (j.product(x, d.apply(x2)) != j.product(x2, dx)) return false;       // C4
      if (d2.apply(x2) != Scalar(2) * j.product(dx, dx) -
                              Scalar(2) * j.product(x, d2.apply(x)) +
                              j.product(x0, x2))
        return false;  // C5
      if (d3.apply(x) !=
          Scalar(3, 2) * j.product(x0, dx) - Scalar(1, 2) * j.product(x, d.apply(x0)))
        return false;  // C6
    }
    return d2.apply(x0) == j.product(x0, x0);  // C7
  };
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PseudoEuclideanAlgebra p = random_pe_base();
    AdmissiblePair pair = random_pair_for(p);
    if (rint(0, 1) == 0 && p.dim() > 0) {
      // Perturb a single entry; verdicts must still agree.
      pair.d.at(rint(0, p.dim() - 1), rint(0, p.dim() - 1)) += rscalar_nonzero(2);
    }
    bool checker = check_admissible_pair(p.algebra(), pair.d, pair.x0).admissible;
    bool brute = oracle(p.algebra(), pair.d, pair.x0, 5);
    CHECK(checker == brute);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("generalized semidirect products") {
  JordanAlgebra j310 = catalog_get("J_3_1_0").algebra;
  JordanAlgebra triv = generalized_semidirect(j310, AdmissiblePair{Matrix(3, 3), zero_vec(3)});
  CHECK(triv.dim() == 4);
  CHECK(is_zero_vec(triv.basis_product(0, 0)));

  // J_1_1 with pair (0, a): a2a2 = a, the 2-dimensional layer.
  JordanAlgebra j11 = catalog_get("J_1_1").algebra;
  JordanAlgebra layer = generalized_semidirect(j11, AdmissiblePair{Matrix(1, 1), Vec{Scalar(1)}});
  CHECK(layer.dim() == 2);
  CHECK(layer.basis_product(0, 0) == unit_vec(2, 1));  // a*a = x0
  CHECK(is_zero_vec(layer.basis_product(1, 1)));
  // Ka is not a subalgebra when x0 != 0.
  Subspace ka = Subspace::span(2, {unit_vec(2, 0)});
  CHECK(!ka.contains(layer.basis_product(0, 0)));

  CHECK_THROWS_WITH_AS(
      generalized_semidirect(catalog_get("J_2_lambda").algebra,
                             AdmissiblePair{Matrix::identity(2), zero_vec(2)}),
      doctest::Contains("NotAdmissible:"), Error);
}
