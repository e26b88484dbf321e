#pragma once

#include <json.hpp>

#include "jforge/manin.hpp"
#include "jforge/represent.hpp"

namespace jforge {

using Json = nlohmann::ordered_json;

/// Parsed algebra file: sparse multiplication table plus optional gram
/// matrices and named subspaces. Scalars are "p/q" strings everywhere.
struct AlgebraFile {
  std::string name;
  std::vector<std::string> basis;
  MulTable mul;
  std::optional<BilinearForm> form;
  std::optional<BilinearForm> omega;
  std::vector<std::pair<std::string, Subspace>> subspaces;  // insertion order

  JordanAlgebra algebra(bool verify = true) const;
};

/// Strict parser: unknown keys and unknown basis labels are rejected with
/// Error("Parse", ...) diagnostics naming the offender.
AlgebraFile parse_algebra_json(const Json& j);
AlgebraFile parse_algebra_file(const std::string& path);

Json algebra_to_json(const std::string& name, const JordanAlgebra& a,
                     const BilinearForm* form, const BilinearForm* omega,
                     const std::vector<std::pair<std::string, Subspace>>& subspaces);

/// {"kind":"pair","D":[["..."]],"x0":["..."],"k":"..."} with dense string
/// matrices.
struct PairFile {
  AdmissiblePair pair;
  Scalar k;
};
PairFile parse_pair_file(const std::string& path, int expected_dim);

/// {"kind":"rep","matrices":[ dense, ... ]}.
std::vector<Matrix> parse_rep_file(const std::string& path, int count, int space_dim);

/// {"kind":"cocycle","type":"central"|"tstar","value_dim":m,"table":{"ei.ej":[...]}}.
Cocycle parse_cocycle_file(const std::string& path, const std::vector<std::string>& basis);

/// {"kind":"rmatrix","r":{"ei.ej":"p/q"}} with antisymmetric completion.
Matrix parse_rmatrix_file(const std::string& path, const std::vector<std::string>& basis);

/// {"kind":"operator","matrix":[["..."]]}.
Matrix parse_operator_file(const std::string& path, int dim);

/// Dense helpers for reports.
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vec& v);
Json subspace_to_json(const Subspace& s);
Json violation_to_json(const Violation& v);
Matrix parse_dense_matrix(const Json& j);
Vec parse_dense_vector(const Json& j);
Vec parse_inline_vector(const std::string& csv, int dim);  // "1,0,-2/3"

std::string dump_canonical(const Json& j);  // stable 2-space indentation

}  // namespace jforge
