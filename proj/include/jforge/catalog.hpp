#pragma once

#include <map>

#include "jforge/forms.hpp"

namespace jforge {

struct CatalogResult {
  JordanAlgebra algebra;
  std::optional<BilinearForm> form;
  std::string notes;

  PseudoEuclideanAlgebra pe() const;
};

/// Builds a catalog entry. `name` is either a plain entry (J_2_1 style names
/// use underscores: J_1_1, J_2_0, J_2_lambda, J_3_0_k, J_3_alpha_k, J_4_0_A,
/// J_4_0_B, J_4_1, J_5_0_1, J_5_1_0, NONASSOC_5, UNIT_1, SPIN, H_n) or a
/// composite TSTAR0(inner) / TENSOR(inner,n) where the inner entry is built
/// with default parameters. Unknown names raise UnknownName, out-of-domain
/// parameters raise BadParams.
CatalogResult catalog_get(const std::string& name,
                          const std::map<std::string, Scalar>& params = {});

struct CatalogEntryInfo {
  std::string name;
  std::string parameters;  // names with defaults / domains
  bool nilpotent = false;  // expected for default parameters
  bool associative = false;
  bool has_form = false;
  std::string notes;
};

std::vector<CatalogEntryInfo> catalog_list();

/// Truncated-polynomial tensor algebra J (x) X K[X]/X^{n+1} with the grading
/// derivation D(x (x) X^i) = i x (x) X^i.
struct GradedTensorResult {
  JordanAlgebra algebra;
  Matrix grading_derivation;
};
GradedTensorResult tensor_truncated(const JordanAlgebra& j, int n);

/// The worked symplectic example: P = T*_0(J (x) XK[X]/X^{n+1}) with
/// Dbar(a+f) = D(a) - f o D, verified: derivation, B-antisymmetric,
/// invertible, and condition (d1) holds on the TKK side.
struct TensorSymplecticExample {
  PseudoEuclideanAlgebra p;
  Matrix dbar;
  JordanAlgebra graded;  // the tensor algebra before the T*-extension
  Matrix d;              // its grading derivation
};
TensorSymplecticExample tensor_symplectic_example(const JordanAlgebra& j, int n);

}  // namespace jforge
