#pragma once

// Shared test utilities: deterministic random rationals, random valid
// extension specs per machine, and small fixed algebras.

#include <random>

#include "jforge/catalog.hpp"
#include "jforge/diagnostics.hpp"
#include "jforge/double_ext.hpp"
#include "jforge/represent.hpp"

namespace jftest {

using namespace jforge;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(871225);
  return gen;
}

inline Scalar rscalar(int num_range = 6, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Scalar(num(rng()), den(rng()));
}

inline Scalar rscalar_nonzero(int num_range = 6) {
  for (;;) {
    Scalar s = rscalar(num_range);
    if (!s.is_zero()) return s;
  }
}

inline Vec rvec(int n, int num_range = 6) {
  Vec v(static_cast<size_t>(n));
  for (auto& x : v) x = rscalar(num_range);
  return v;
}

inline int rint(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

// Pseudo-euclidean catalog bases small enough for randomized towers.
inline PseudoEuclideanAlgebra random_pe_base() {
  static const char* names[] = {"J_1_1", "J_2_0",   "J_2_lambda", "J_3_0_k",
                                "J_3_alpha_k", "J_4_1", "UNIT_1"};
  int pick = rint(0, 6);
  std::map<std::string, Scalar> params;
  if (pick == 2) params["lambda"] = rscalar_nonzero(3);
  if (pick == 3) params["k"] = rscalar(3);
  if (pick == 4) {
    params["alpha"] = rscalar_nonzero(3);
    params["k"] = rscalar(3);
  }
  if (pick == 5) {
    params["beta"] = rscalar(3);
    params["epsilon"] = rscalar(3);
    params["k"] = rscalar(3);
  }
  return catalog_get(names[pick], params).pe();
}

inline JordanAlgebra random_algebra() { return random_pe_base().algebra(); }

// A random admissible pair with B-symmetric D for the given catalog base;
// (0, x0) with x0 in the annulator always qualifies, the two-dimensional
// bases also carry the nontrivial families.
inline AdmissiblePair random_pair_for(const PseudoEuclideanAlgebra& p) {
  int n = p.dim();
  Subspace ann = annulator_and_center(p.algebra()).ann;
  std::vector<AdmissiblePair> candidates;
  {
    Vec x0 = zero_vec(n);
    for (const auto& b : ann.basis) x0 = x0 + rscalar(3) * b;
    candidates.push_back(AdmissiblePair{Matrix(n, n), x0});
  }
  if (n == 2) {
    Vec sq = p.algebra().basis_product(0, 0);
    bool zero_products = is_zero_vec(sq) && is_zero_vec(p.algebra().basis_product(0, 1)) &&
                         is_zero_vec(p.algebra().basis_product(1, 1));
    if (zero_products) {
      // J_2_0: families A and B with arbitrary x0.
      Matrix d(2, 2);
      if (rint(0, 1) == 0)
        d.at(1, 0) = rscalar_nonzero(4);
      else
        d.at(0, 1) = rscalar_nonzero(4);
      candidates.push_back(AdmissiblePair{d, rvec(2, 3)});
    } else if (sq == unit_vec(2, 1)) {
      // J_2_1: D(a1) = beta b1, x0 = eps b1.
      Matrix d(2, 2);
      d.at(1, 0) = rscalar(4);
      Vec x0 = zero_vec(2);
      x0[1] = rscalar(3);
      candidates.push_back(AdmissiblePair{d, x0});
    }
  }
  return candidates[static_cast<size_t>(rint(0, static_cast<int>(candidates.size()) - 1))];
}

inline GdeSpec random_gde_spec() {
  PseudoEuclideanAlgebra base = random_pe_base();
  return GdeSpec{base, random_pair_for(base), rscalar(3)};
}

// Random element of the associative-symmetric-form space.
inline BilinearForm random_assoc_form(const JordanAlgebra& a) {
  IndexData data = index(a);
  Matrix g(a.dim(), a.dim());
  for (const auto& b : data.basis_of_forms) g = g + rscalar(3) * b.gram;
  return BilinearForm(g);
}

// Double extension spec: the adjoint action of a pseudo-euclidean algebra on
// itself is admissible through B-symmetric operators; gamma is sampled from
// the space of associative symmetric forms of the top. pi = 0 with an
// independent top also qualifies.
inline DoubleExtensionSpec random_de_spec() {
  PseudoEuclideanAlgebra base = random_pe_base();
  if (rint(0, 1) == 0) {
    JordanAlgebra top = random_algebra();
    std::vector<Matrix> pi(top.dim(), Matrix(base.dim(), base.dim()));
    return DoubleExtensionSpec{base, top, pi, random_assoc_form(top)};
  }
  std::vector<Matrix> pi;
  for (int i = 0; i < base.dim(); ++i) pi.push_back(base.algebra().basis_mult_operator(i));
  return DoubleExtensionSpec{base, base.algebra(), pi, random_assoc_form(base.algebra())};
}

}  // namespace jftest
