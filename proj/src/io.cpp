#include "jforge/io.hpp"

#include <fstream>
#include <sstream>

namespace jforge {

JordanAlgebra AlgebraFile::algebra(bool verify) const {
  return verify ? JordanAlgebra::create(basis, mul)
                : JordanAlgebra::create_unchecked(basis, mul);
}

static int label_index(const std::vector<std::string>& basis, const std::string& label,
                       const std::string& where) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<int>(i);
  throw Error("Parse", where + ": unknown basis label '" + label + "'");
}

static std::pair<int, int> split_key(const std::vector<std::string>& basis,
                                     const std::string& key, const std::string& where) {
  auto dot = key.find('.');
  if (dot == std::string::npos)
    throw Error("Parse", where + ": key '" + key + "' is not of the form 'ei.ej'");
  return {label_index(basis, key.substr(0, dot), where),
          label_index(basis, key.substr(dot + 1), where)};
}

static Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error("Parse", where + ": scalars must be strings");
  return Scalar::parse(j.get<std::string>());
}

static Vec combination_from_json(const Json& j, const std::vector<std::string>& basis,
                                 const std::string& where) {
  if (!j.is_object()) throw Error("Parse", where + ": expected {label: scalar}");
  Vec v = zero_vec(static_cast<int>(basis.size()));
  for (auto it = j.begin(); it != j.end(); ++it)
    v[label_index(basis, it.key(), where)] = scalar_from_json(it.value(), where);
  return v;
}

AlgebraFile parse_algebra_json(const Json& j) {
  if (!j.is_object()) throw Error("Parse", "algebra file must be a JSON object");
  static const std::vector<std::string> known{"kind", "name",  "basis",
                                              "mul",  "form",  "omega",
                                              "subspaces"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw Error("Parse", "unknown key '" + it.key() + "'");
  if (j.contains("kind") && j["kind"] != "algebra")
    throw Error("Parse", "kind must be 'algebra'");

  AlgebraFile out;
  out.name = j.value("name", std::string("algebra"));
  if (!j.contains("basis") || !j["basis"].is_array())
    throw Error("Parse", "missing basis array");
  for (const auto& b : j["basis"]) out.basis.push_back(b.get<std::string>());
  int n = static_cast<int>(out.basis.size());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (out.basis[i] == out.basis[k]) throw Error("Parse", "duplicate basis label");

  out.mul = MulTable(n);
  if (j.contains("mul")) {
    if (!j["mul"].is_object()) throw Error("Parse", "mul must be an object");
    for (auto it = j["mul"].begin(); it != j["mul"].end(); ++it) {
      auto [a, b] = split_key(out.basis, it.key(), "mul");
      Vec v = combination_from_json(it.value(), out.basis, "mul." + it.key());
      // Commutative completion; conflicting duplicate entries are rejected.
      Vec existing = out.mul.basis_product(a, b);
      if (!is_zero_vec(existing) && existing != v)
        throw Error("Parse", "conflicting entries for product " + it.key());
      out.mul.set_product(a, b, v);
    }
  }

  auto parse_gram = [&](const Json& spec, bool antisym, const std::string& where) {
    Matrix g(n, n);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (auto it = spec.begin(); it != spec.end(); ++it) {
      auto [a, b] = split_key(out.basis, it.key(), where);
      Scalar v = scalar_from_json(it.value(), where + "." + it.key());
      if (antisym && a == b && !v.is_zero())
        throw Error("Parse", where + ": diagonal of an antisymmetric gram must vanish");
      if (seen[a][b] && g.at(a, b) != v)
        throw Error("Parse", where + ": conflicting entries for " + it.key());
      g.at(a, b) = v;
      g.at(b, a) = antisym ? -v : v;
      seen[a][b] = seen[b][a] = true;
    }
    return BilinearForm(g);
  };
  if (j.contains("form")) out.form = parse_gram(j["form"], false, "form");
  if (j.contains("omega")) out.omega = parse_gram(j["omega"], true, "omega");

  if (j.contains("subspaces")) {
    if (!j["subspaces"].is_object()) throw Error("Parse", "subspaces must be an object");
    for (auto it = j["subspaces"].begin(); it != j["subspaces"].end(); ++it) {
      if (!it.value().is_array())
        throw Error("Parse", "subspace '" + it.key() + "' must be an array of combinations");
      std::vector<Vec> gens;
      for (const auto& comb : it.value())
        gens.push_back(combination_from_json(comb, out.basis, "subspaces." + it.key()));
      out.subspaces.emplace_back(it.key(), Subspace::span(n, gens));
    }
  }
  return out;
}

static Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Parse", "cannot open file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("Parse", path + ": " + e.what());
  }
  return j;
}

AlgebraFile parse_algebra_file(const std::string& path) {
  return parse_algebra_json(load_json(path));
}

Json algebra_to_json(const std::string& name, const JordanAlgebra& a,
                     const BilinearForm* form, const BilinearForm* omega,
                     const std::vector<std::pair<std::string, Subspace>>& subspaces) {
  Json j;
  j["kind"] = "algebra";
  j["name"] = name;
  j["basis"] = a.basis_names();
  Json mul = Json::object();
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      Vec p = a.basis_product(i, k);
      if (is_zero_vec(p)) continue;
      Json row = Json::object();
      for (int u = 0; u < n; ++u)
        if (!p[u].is_zero()) row[a.basis_names()[u]] = p[u].str();
      mul[a.basis_names()[i] + "." + a.basis_names()[k]] = row;
    }
  j["mul"] = mul;
  auto gram_out = [&](const BilinearForm& b, bool strict_upper) {
    Json g = Json::object();
    for (int i = 0; i < n; ++i)
      for (int k = strict_upper ? i + 1 : i; k < n; ++k)
        if (!b.gram.at(i, k).is_zero())
          g[a.basis_names()[i] + "." + a.basis_names()[k]] = b.gram.at(i, k).str();
    return g;
  };
  if (form) j["form"] = gram_out(*form, false);
  if (omega) j["omega"] = gram_out(*omega, true);
  if (!subspaces.empty()) {
    Json subs = Json::object();
    for (const auto& [label, space] : subspaces) {
      Json arr = Json::array();
      for (const auto& v : space.basis) {
        Json comb = Json::object();
        for (int u = 0; u < n; ++u)
          if (!v[u].is_zero()) comb[a.basis_names()[u]] = v[u].str();
        arr.push_back(comb);
      }
      subs[label] = arr;
    }
    j["subspaces"] = subs;
  }
  return j;
}

PairFile parse_pair_file(const std::string& path, int expected_dim) {
  Json j = load_json(path);
  if (j.value("kind", "pair") != "pair") throw Error("Parse", path + ": kind must be 'pair'");
  PairFile out;
  if (!j.contains("D")) throw Error("Parse", path + ": missing D");
  out.pair.d = parse_dense_matrix(j["D"]);
  if (out.pair.d.rows != expected_dim || out.pair.d.cols != expected_dim)
    throw Error("Parse", path + ": D has the wrong shape");
  if (!j.contains("x0")) throw Error("Parse", path + ": missing x0");
  out.pair.x0 = parse_dense_vector(j["x0"]);
  if (static_cast<int>(out.pair.x0.size()) != expected_dim)
    throw Error("Parse", path + ": x0 has the wrong length");
  out.k = j.contains("k") ? Scalar::parse(j["k"].get<std::string>()) : Scalar(0);
  return out;
}

std::vector<Matrix> parse_rep_file(const std::string& path, int count, int space_dim) {
  Json j = load_json(path);
  if (j.value("kind", "rep") != "rep") throw Error("Parse", path + ": kind must be 'rep'");
  if (!j.contains("matrices") || !j["matrices"].is_array())
    throw Error("Parse", path + ": missing matrices array");
  std::vector<Matrix> out;
  for (const auto& m : j["matrices"]) out.push_back(parse_dense_matrix(m));
  if (static_cast<int>(out.size()) != count)
    throw Error("Parse", path + ": expected " + std::to_string(count) + " matrices");
  for (const auto& m : out)
    if (m.rows != space_dim || m.cols != space_dim)
      throw Error("Parse", path + ": matrix has the wrong shape");
  return out;
}

Cocycle parse_cocycle_file(const std::string& path, const std::vector<std::string>& basis) {
  Json j = load_json(path);
  if (j.value("kind", "cocycle") != "cocycle")
    throw Error("Parse", path + ": kind must be 'cocycle'");
  std::string type = j.value("type", "central");
  int n = static_cast<int>(basis.size());
  int value_dim;
  Cocycle::Kind kind;
  if (type == "central") {
    kind = Cocycle::Kind::central;
    if (!j.contains("value_dim")) throw Error("Parse", path + ": central cocycle needs value_dim");
    value_dim = j["value_dim"].get<int>();
  } else if (type == "tstar") {
    kind = Cocycle::Kind::tstar;
    value_dim = n;
  } else {
    throw Error("Parse", path + ": type must be 'central' or 'tstar'");
  }
  Cocycle c = Cocycle::zero(kind, n, value_dim);
  if (j.contains("table")) {
    for (auto it = j["table"].begin(); it != j["table"].end(); ++it) {
      auto [a, b] = split_key(basis, it.key(), "table");
      if (!it.value().is_array())
        throw Error("Parse", path + ": table values must be arrays of scalars");
      Vec v = parse_dense_vector(it.value());
      if (static_cast<int>(v.size()) != value_dim)
        throw Error("Parse", path + ": table value has the wrong length");
      c.set(a, b, v);
    }
  }
  return c;
}

Matrix parse_rmatrix_file(const std::string& path, const std::vector<std::string>& basis) {
  Json j = load_json(path);
  if (j.value("kind", "rmatrix") != "rmatrix")
    throw Error("Parse", path + ": kind must be 'rmatrix'");
  int n = static_cast<int>(basis.size());
  Matrix r(n, n);
  if (j.contains("r")) {
    for (auto it = j["r"].begin(); it != j["r"].end(); ++it) {
      auto [a, b] = split_key(basis, it.key(), "r");
      Scalar v = Scalar::parse(it.value().get<std::string>());
      if (a == b && !v.is_zero())
        throw Error("Parse", path + ": antisymmetric r cannot have diagonal entries");
      r.at(a, b) = v;
      r.at(b, a) = -v;
    }
  }
  return r;
}

Matrix parse_operator_file(const std::string& path, int dim) {
  Json j = load_json(path);
  if (j.value("kind", "operator") != "operator")
    throw Error("Parse", path + ": kind must be 'operator'");
  if (!j.contains("matrix")) throw Error("Parse", path + ": missing matrix");
  Matrix m = parse_dense_matrix(j["matrix"]);
  if (m.rows != dim || m.cols != dim) throw Error("Parse", path + ": wrong shape");
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json vector_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Json subspace_to_json(const Subspace& s) {
  Json arr = Json::array();
  for (const auto& v : s.basis) arr.push_back(vector_to_json(v));
  return arr;
}

Json violation_to_json(const Violation& v) {
  Json j;
  j["identity"] = v.what;
  j["index"] = v.index;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

Matrix parse_dense_matrix(const Json& j) {
  if (!j.is_array()) throw Error("Parse", "dense matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(parse_dense_vector(row));
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

Vec parse_dense_vector(const Json& j) {
  if (!j.is_array()) throw Error("Parse", "dense vector must be an array of scalars");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error("Parse", "scalars must be strings");
    v.push_back(Scalar::parse(x.get<std::string>()));
  }
  return v;
}

Vec parse_inline_vector(const std::string& csv, int dim) {
  Vec v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(Scalar::parse(tok));
  if (static_cast<int>(v.size()) != dim)
    throw Error("Parse", "inline vector has length " + std::to_string(v.size()) +
                             ", expected " + std::to_string(dim));
  return v;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jforge
