#include "jforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "jforge/catalog.hpp"
#include "jforge/diagnostics.hpp"
#include "jforge/double_ext.hpp"
#include "jforge/io.hpp"
#include "jforge/tkk.hpp"

namespace jforge {

namespace {

int max_dim() {
  const char* env = std::getenv("JFORGE_MAX_DIM");
  if (!env) return 32;
  int v = std::atoi(env);
  return v > 0 ? v : 32;
}

bool is_input_error(const std::string& code) {
  static const std::set<std::string> input{"Parse",         "UnknownName", "BadParams",
                                           "BadScalar",     "DimensionMismatch",
                                           "MaxDim",        "Usage",       "Internal",
                                           "FactoringTooHard"};
  auto head = code.substr(0, code.find(':'));
  return input.count(head) > 0;
}

struct Args {
  std::string command;
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> options;  // --k v
  std::set<std::string> flags;                               // --k without value

  bool has(const std::string& f) const { return flags.count(f) > 0; }
  std::optional<std::string> opt(const std::string& k) const {
    for (const auto& [key, val] : options)
      if (key == k) return val;
    return std::nullopt;
  }
  std::string need(const std::string& k) const {
    auto v = opt(k);
    if (!v) throw Error("Usage", "missing required option --" + k);
    return *v;
  }
  std::vector<std::string> all(const std::string& k) const {
    std::vector<std::string> out;
    for (const auto& [key, val] : options)
      if (key == k) out.push_back(val);
    return out;
  }
};

Args parse_args(const std::vector<std::string>& argv,
                const std::set<std::string>& value_options) {
  Args a;
  for (size_t i = 0; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s.rfind("--", 0) == 0) {
      std::string key = s.substr(2);
      if (value_options.count(key)) {
        if (i + 1 >= argv.size()) throw Error("Usage", "option --" + key + " needs a value");
        a.options.emplace_back(key, argv[++i]);
      } else {
        a.flags.insert(key);
      }
    } else if (s == "-o") {
      if (i + 1 >= argv.size()) throw Error("Usage", "-o needs a path");
      a.options.emplace_back("o", argv[++i]);
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

AlgebraFile load_algebra(const std::string& path, bool enforce_cap = true) {
  AlgebraFile f = parse_algebra_file(path);
  if (enforce_cap && static_cast<int>(f.basis.size()) > max_dim())
    throw Error("MaxDim", "dimension exceeds JFORGE_MAX_DIM");
  return f;
}

void maybe_write(const Args& a, const Json& algebra_json) {
  if (auto path = a.opt("o")) {
    std::ofstream out(*path);
    if (!out) throw Error("Parse", "cannot write " + *path);
    out << dump_canonical(algebra_json);
  }
}

Json pep_report_json(const PepReport& rep) {
  Json j;
  j["symmetric"] = rep.symmetric;
  j["nondegenerate"] = rep.nondegenerate;
  j["associative"] = rep.associative;
  j["ok"] = rep.ok();
  if (rep.first_violation) j["violation"] = violation_to_json(*rep.first_violation);
  return j;
}

CliResult finish(Json report, int exit_code) {
  return CliResult{exit_code, dump_canonical(report)};
}

CliResult cmd_check(const std::vector<std::string>& argv) {
  Args a = parse_args(argv, {});
  if (a.positional.size() != 1) throw Error("Usage", "check needs exactly one file");
  AlgebraFile f = load_algebra(a.positional[0]);
  bool all = !a.has("jordan") && !a.has("pe") && !a.has("symplectic") && !a.has("manin");

  Json report;
  report["command"] = "check";
  report["name"] = f.name;
  bool ok = true;
  Json checks;

  IdentityReport jr = check_jordan(f.mul);
  if (all || a.has("jordan")) {
    Json j;
    j["commutative"] = jr.commutative;
    j["jordan"] = jr.jordan;
    j["ok"] = jr.ok();
    if (jr.first_violation) j["violation"] = violation_to_json(*jr.first_violation);
    checks["jordan"] = j;
    ok = ok && jr.ok();
  }
  if (!jr.ok()) {
    report["checks"] = checks;
    report["ok"] = false;
    return finish(report, 1);
  }
  JordanAlgebra alg = f.algebra(false);

  if (a.has("pe") || (all && f.form)) {
    if (!f.form) throw Error("Usage", "--pe requires a 'form' block in the file");
    PepReport rep = check_pep(alg, *f.form);
    checks["pe"] = pep_report_json(rep);
    ok = ok && rep.ok();
  }
  if (a.has("symplectic") || (all && f.omega)) {
    if (!f.omega) throw Error("Usage", "--symplectic requires an 'omega' block");
    SymplecticReport rep = check_symplectic(alg, *f.omega);
    Json j;
    j["antisymmetric"] = rep.antisymmetric;
    j["nondegenerate"] = rep.nondegenerate;
    j["cyclic"] = rep.cyclic;
    j["ok"] = rep.ok();
    if (f.form) {
      BridgeReport br = bridge_from_omega(
          PseudoEuclideanAlgebra::create_unchecked(alg, *f.form), *f.omega);
      j["derivation"] = br.derivation;
      j["b_antisymmetric"] = br.b_antisymmetric;
      j["invertible"] = br.invertible;
      j["ok"] = rep.ok() && br.symplectic();
    }
    checks["symplectic"] = j;
    ok = ok && j["ok"].get<bool>();
  }
  auto find_sub = [&](const std::string& label) -> const Subspace* {
    for (const auto& [k, s] : f.subspaces)
      if (k == label) return &s;
    return nullptr;
  };
  bool have_uv = find_sub("U") && find_sub("V");
  if (a.has("manin") || (all && have_uv)) {
    if (!f.form) throw Error("Usage", "--manin requires a 'form' block");
    if (!have_uv) throw Error("Usage", "--manin requires subspaces U and V");
    PseudoEuclideanAlgebra p = PseudoEuclideanAlgebra::create(alg, *f.form);
    ManinReport rep =
        check_manin(p, *find_sub("U"), *find_sub("V"), f.omega ? &*f.omega : nullptr);
    Json j;
    j["u_subalgebra"] = rep.u_subalgebra;
    j["v_subalgebra"] = rep.v_subalgebra;
    j["u_isotropic"] = rep.u_isotropic;
    j["v_isotropic"] = rep.v_isotropic;
    j["direct_sum"] = rep.direct_sum;
    j["omega_ok"] = rep.omega_ok;
    j["ok"] = rep.ok();
    checks["manin"] = j;
    ok = ok && rep.ok();
  }
  report["checks"] = checks;
  report["ok"] = ok;
  return finish(report, ok ? 0 : 1);
}

CliResult cmd_analyze(const std::vector<std::string>& argv) {
  Args a = parse_args(argv, {});
  if (a.positional.size() != 1) throw Error("Usage", "analyze needs exactly one file");
  AlgebraFile f = load_algebra(a.positional[0]);
  JordanAlgebra alg = f.algebra(!a.has("no-verify"));
  Json report;
  report["command"] = "analyze";
  report["name"] = f.name;
  auto pe = [&]() {
    if (!f.form) throw Error("Usage", "this analysis needs a 'form' block");
    return PseudoEuclideanAlgebra::create(alg, *f.form);
  };
  bool any = false;
  if (a.has("albert")) {
    any = true;
    report["albert"] = matrix_to_json(albert_form(alg).gram);
  }
  if (a.has("radical")) {
    any = true;
    RadicalResult r = radical_and_semisimplicity(alg);
    Json j;
    j["radical"] = subspace_to_json(r.radical);
    j["semisimple"] = r.semisimple;
    report["radical"] = j;
  }
  if (a.has("index")) {
    any = true;
    IndexData d = index(alg);
    report["index"] = d.index;
    Json forms = Json::array();
    for (const auto& b : d.basis_of_forms) forms.push_back(matrix_to_json(b.gram));
    report["form_basis"] = forms;
  }
  if (a.has("casimir")) {
    any = true;
    CasimirData c = casimir(pe());
    Json j;
    j["c"] = vector_to_json(c.c);
    j["Rc"] = matrix_to_json(c.rc);
    j["classification"] = c.classification == CasimirClass::invertible ? "invertible"
                          : c.classification == CasimirClass::nilpotent ? "nilpotent"
                                                                        : "mixed";
    report["casimir"] = j;
  }
  if (a.has("fitting")) {
    any = true;
    FittingResult r = fitting(pe());
    Json j;
    j["S"] = subspace_to_json(r.s);
    j["S_perp"] = subspace_to_json(r.s_perp);
    report["fitting"] = j;
  }
  if (a.has("reductive")) {
    any = true;
    std::vector<Subspace> comps;
    for (const auto& [k, s] : f.subspaces) comps.push_back(s);
    ReductiveReport r = reductive_report(pe(), comps);
    Json j;
    j["reductive"] = r.reductive;
    j["dim_ann"] = r.dim_ann;
    j["index"] = r.index;
    j["components"] = r.component_count;
    j["semisimple"] = r.semisimple;
    j["square_is_whole"] = r.square_is_whole;
    j["corollary1_consistent"] = r.corollary1_consistent;
    j["corollary2_consistent"] = r.corollary2_consistent;
    report["reductive"] = j;
  }
  if (!any)
    throw Error("Usage",
                "analyze needs one of --albert --casimir --radical --index --fitting "
                "--reductive");
  report["ok"] = true;
  return finish(report, 0);
}

Json construct_output(const Args& a, const std::string& machine,
                      const PseudoEuclideanAlgebra& p, const BilinearForm* omega,
                      const std::vector<std::pair<std::string, Subspace>>& subs = {}) {
  Json alg = algebra_to_json(machine + "-output", p.algebra(), &p.form(), omega, subs);
  Json report;
  report["command"] = "construct";
  report["machine"] = machine;
  report["dim"] = p.dim();
  report["output"] = alg;
  report["ok"] = true;
  maybe_write(a, alg);
  return report;
}

CliResult cmd_construct(const std::vector<std::string>& argv) {
  if (argv.empty()) throw Error("Usage", "construct needs a machine");
  std::string machine = argv[0];
  Args a = parse_args({argv.begin() + 1, argv.end()},
                      {"base", "top", "pair", "cocycle", "rep", "gamma", "r", "a0",
                       "lambda", "k"});

  if (machine == "tstar") {
    AlgebraFile base = load_algebra(a.need("base"));
    JordanAlgebra j1 = base.algebra(true);
    Cocycle theta = a.opt("cocycle")
                        ? parse_cocycle_file(*a.opt("cocycle"), base.basis)
                        : Cocycle::zero(Cocycle::Kind::tstar, j1.dim(), j1.dim());
    if (theta.kind != Cocycle::Kind::tstar)
      throw Error("Usage", "tstar needs a cocycle of type 'tstar'");
    PseudoEuclideanAlgebra out = tstar_extension(j1, theta);
    return finish(construct_output(a, machine, out, nullptr), 0);
  }
  if (machine == "central") {
    AlgebraFile base = load_algebra(a.need("base"));
    JordanAlgebra j1 = base.algebra(true);
    Cocycle phi = parse_cocycle_file(a.need("cocycle"), base.basis);
    if (phi.kind != Cocycle::Kind::central)
      throw Error("Usage", "central needs a cocycle of type 'central'");
    JordanAlgebra out = central_extension(j1, phi.value_dim, phi);
    Json alg = algebra_to_json("central-output", out, nullptr, nullptr, {});
    Json report;
    report["command"] = "construct";
    report["machine"] = machine;
    report["dim"] = out.dim();
    report["output"] = alg;
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (machine == "sdp") {
    AlgebraFile base = load_algebra(a.need("base"));
    AlgebraFile top = load_algebra(a.need("top"));
    JordanAlgebra j1 = base.algebra(true);
    JordanAlgebra j2 = top.algebra(true);
    std::vector<Matrix> pi = parse_rep_file(a.need("rep"), j1.dim(), j2.dim());
    JordanAlgebra out = semidirect_product(j1, j2, pi);
    Json alg = algebra_to_json("sdp-output", out, nullptr, nullptr, {});
    Json report;
    report["command"] = "construct";
    report["machine"] = machine;
    report["dim"] = out.dim();
    report["output"] = alg;
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (machine == "gsd") {
    AlgebraFile base = load_algebra(a.need("base"));
    JordanAlgebra j1 = base.algebra(true);
    PairFile pf = parse_pair_file(a.need("pair"), j1.dim());
    JordanAlgebra out = generalized_semidirect(j1, pf.pair);
    Json alg = algebra_to_json("gsd-output", out, nullptr, nullptr, {});
    Json report;
    report["command"] = "construct";
    report["machine"] = machine;
    report["dim"] = out.dim();
    report["output"] = alg;
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (machine == "de") {
    AlgebraFile base = load_algebra(a.need("base"));
    AlgebraFile top = load_algebra(a.need("top"));
    if (!base.form) throw Error("Usage", "de base needs a 'form' block");
    PseudoEuclideanAlgebra p1 = PseudoEuclideanAlgebra::create(base.algebra(true), *base.form);
    JordanAlgebra j2 = top.algebra(true);
    std::vector<Matrix> pi = parse_rep_file(a.need("rep"), j2.dim(), p1.dim());
    BilinearForm gamma = BilinearForm::zero(j2.dim());
    if (auto g = a.opt("gamma")) gamma = BilinearForm(parse_operator_file(*g, j2.dim()));
    PseudoEuclideanAlgebra out = double_extension(DoubleExtensionSpec{p1, j2, pi, gamma});
    return finish(construct_output(a, machine, out, nullptr), 0);
  }
  if (machine == "gde") {
    AlgebraFile base = load_algebra(a.need("base"));
    if (!base.form) throw Error("Usage", "gde base needs a 'form' block");
    PseudoEuclideanAlgebra p1 = PseudoEuclideanAlgebra::create(base.algebra(true), *base.form);
    PairFile pf = parse_pair_file(a.need("pair"), p1.dim());
    PseudoEuclideanAlgebra out = generalized_double_extension(GdeSpec{p1, pf.pair, pf.k});
    return finish(construct_output(a, machine, out, nullptr), 0);
  }
  if (machine == "sympde") {
    AlgebraFile base = load_algebra(a.need("base"));
    if (!base.form || !base.omega)
      throw Error("Usage", "sympde base needs 'form' and 'omega' blocks");
    PseudoEuclideanAlgebra p1 = PseudoEuclideanAlgebra::create(base.algebra(true), *base.form);
    SymplecticAlgebra s1 = make_symplectic(p1, *base.omega);
    PairFile pf = parse_pair_file(a.need("pair"), p1.dim());
    Vec a0 = parse_inline_vector(a.need("a0"), p1.dim());
    Scalar lambda = Scalar::parse(a.need("lambda"));
    Scalar k = a.opt("k") ? Scalar::parse(*a.opt("k")) : pf.k;
    SymplecticAlgebra out = symplectic_double_extension(s1, pf.pair, a0, lambda, k);
    return finish(construct_output(a, machine, out.p, &out.omega), 0);
  }
  if (machine == "manin-de") {
    AlgebraFile base = load_algebra(a.need("base"));
    if (!base.form) throw Error("Usage", "manin-de base needs a 'form' block");
    const Subspace *u = nullptr, *v = nullptr;
    for (const auto& [k2, s] : base.subspaces) {
      if (k2 == "U") u = &s;
      if (k2 == "V") v = &s;
    }
    if (!u || !v) throw Error("Usage", "manin-de base needs subspaces U and V");
    PseudoEuclideanAlgebra p1 = PseudoEuclideanAlgebra::create(base.algebra(true), *base.form);
    ManinTriple m{p1, *u, *v,
                  base.omega ? std::optional<BilinearForm>(*base.omega) : std::nullopt};
    PairFile pf = parse_pair_file(a.need("pair"), p1.dim());
    ManinTriple out = a.opt("a0")
                          ? symplectic_manin_double_extension(
                                m, pf.pair, parse_inline_vector(a.need("a0"), p1.dim()),
                                Scalar::parse(a.need("lambda")))
                          : manin_double_extension(m, pf.pair);
    std::vector<std::pair<std::string, Subspace>> subs{{"U", out.u}, {"V", out.v}};
    return finish(
        construct_output(a, machine, out.p, out.omega ? &*out.omega : nullptr, subs), 0);
  }
  if (machine == "drinfeld") {
    AlgebraFile base = load_algebra(a.need("base"));
    JordanAlgebra j1 = base.algebra(true);
    Matrix r = parse_rmatrix_file(a.need("r"), base.basis);
    DoubleResult out = delta_r_and_double(j1, RMatrix::from_matrix(r));
    Json report;
    report["command"] = "construct";
    report["machine"] = machine;
    report["is_bialgebra"] = out.is_bialgebra;
    Json alg;
    if (out.double_algebra) {
      alg = algebra_to_json("drinfeld-double", *out.double_algebra, nullptr, nullptr, {});
      report["output"] = alg;
    }
    report["ok"] = out.is_bialgebra;
    if (out.double_algebra) maybe_write(a, alg);
    return finish(report, out.is_bialgebra ? 0 : 1);
  }
  throw Error("Usage", "unknown construct machine " + machine);
}

CliResult cmd_peel(const std::vector<std::string>& argv) {
  if (argv.empty()) throw Error("Usage", "peel needs a mode");
  std::string mode = argv[0];
  Args a = parse_args({argv.begin() + 1, argv.end()}, {"b", "ideal"});
  if (a.positional.size() != 1) throw Error("Usage", "peel needs exactly one file");
  AlgebraFile f = load_algebra(a.positional[0]);
  if (!f.form) throw Error("Usage", "peel needs a 'form' block");
  PseudoEuclideanAlgebra p = PseudoEuclideanAlgebra::create(f.algebra(true), *f.form);

  Json report;
  report["command"] = "peel";
  report["mode"] = mode;

  if (mode == "gde") {
    Vec b = parse_inline_vector(a.need("b"), p.dim());
    GdePeel res = peel_gde(p, b);
    Json alg = algebra_to_json("peeled-base", res.w.algebra(), &res.w.form(), nullptr, {});
    report["base"] = alg;
    report["D"] = matrix_to_json(res.pair.d);
    report["x0"] = vector_to_json(res.pair.x0);
    report["k"] = res.k.str();
    report["a"] = vector_to_json(res.a);
    report["b"] = vector_to_json(res.b);
    report["isometry"] = matrix_to_json(res.isometry);
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (mode == "de") {
    std::string label = a.need("ideal");
    const Subspace* ideal = nullptr;
    for (const auto& [k2, s] : f.subspaces)
      if (k2 == label) ideal = &s;
    if (!ideal) throw Error("Usage", "no subspace named '" + label + "' in the file");
    DePeel res = peel_de(p, *ideal);
    Json alg = algebra_to_json("peeled-base", res.w.algebra(), &res.w.form(), nullptr, {});
    report["base"] = alg;
    report["top"] = algebra_to_json("peeled-top", res.v, nullptr, nullptr, {});
    Json pis = Json::array();
    for (const auto& m : res.pi) pis.push_back(matrix_to_json(m));
    report["pi"] = pis;
    report["gamma"] = matrix_to_json(res.gamma.gram);
    report["isometry"] = matrix_to_json(res.isometry);
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (mode == "symp") {
    if (!f.omega) throw Error("Usage", "peel symp needs an 'omega' block");
    SymplecticPeel res = peel_symplectic_double_extension(p, *f.omega);
    Json alg = algebra_to_json("peeled-base", res.w.p.algebra(), &res.w.p.form(),
                               &res.w.omega, {});
    report["base"] = alg;
    report["D"] = matrix_to_json(res.pair.d);
    report["x0"] = vector_to_json(res.pair.x0);
    report["a0"] = vector_to_json(res.a0);
    report["lambda"] = res.lambda.str();
    report["k"] = res.k.str();
    report["b"] = vector_to_json(res.b);
    report["isometry"] = matrix_to_json(res.isometry);
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  auto get_uv = [&]() {
    const Subspace *u = nullptr, *v = nullptr;
    for (const auto& [k2, s] : f.subspaces) {
      if (k2 == "U") u = &s;
      if (k2 == "V") v = &s;
    }
    if (!u || !v) throw Error("Usage", "peel needs subspaces U and V");
    return std::make_pair(u, v);
  };
  if (mode == "manin") {
    auto [u, v] = get_uv();
    ManinTriple m{p, *u, *v, std::nullopt};
    ManinPeel res = peel_manin(m);
    std::vector<std::pair<std::string, Subspace>> subs{{"U", res.triple.u},
                                                       {"V", res.triple.v}};
    Json alg = algebra_to_json("peeled-base", res.triple.p.algebra(),
                               &res.triple.p.form(), nullptr, subs);
    report["base"] = alg;
    report["D"] = matrix_to_json(res.pair.d);
    report["x0"] = vector_to_json(res.pair.x0);
    report["swapped"] = res.swapped;
    report["isometry"] = matrix_to_json(res.isometry);
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  if (mode == "symp-manin") {
    if (!f.omega) throw Error("Usage", "peel symp-manin needs an 'omega' block");
    auto [u, v] = get_uv();
    ManinTriple m{p, *u, *v, *f.omega};
    SymplecticManinPeel res = peel_symplectic_manin(m);
    std::vector<std::pair<std::string, Subspace>> subs{{"U", res.triple.u},
                                                       {"V", res.triple.v}};
    Json alg = algebra_to_json("peeled-base", res.triple.p.algebra(),
                               &res.triple.p.form(), &*res.triple.omega, subs);
    report["base"] = alg;
    report["D"] = matrix_to_json(res.pair.d);
    report["x0"] = vector_to_json(res.pair.x0);
    report["a0"] = vector_to_json(res.a0);
    report["lambda"] = res.lambda.str();
    report["swapped"] = res.swapped;
    report["isometry"] = matrix_to_json(res.isometry);
    report["ok"] = true;
    maybe_write(a, alg);
    return finish(report, 0);
  }
  throw Error("Usage", "unknown peel mode " + mode);
}

CliResult cmd_tkk(const std::vector<std::string>& argv) {
  if (argv.empty() || argv[0] != "build") throw Error("Usage", "tkk build FILE ...");
  Args a = parse_args({argv.begin() + 1, argv.end()}, {"lift"});
  if (a.positional.size() != 1) throw Error("Usage", "tkk build needs exactly one file");
  AlgebraFile f = load_algebra(a.positional[0]);
  if (!f.form) throw Error("Usage", "tkk needs a 'form' block");
  PseudoEuclideanAlgebra p = PseudoEuclideanAlgebra::create(f.algebra(true), *f.form);
  TkkResult tkk = tkk_build(p);

  Json report;
  report["command"] = "tkk";
  report["dim"] = tkk.lie.dim();
  report["grades"] = tkk.lie.grades();
  Json brackets = Json::object();
  int N = tkk.lie.dim();
  for (int i = 0; i < N; ++i)
    for (int k = i + 1; k < N; ++k) {
      Vec br = tkk.lie.basis_bracket(i, k);
      if (is_zero_vec(br)) continue;
      Json row = Json::object();
      for (int u = 0; u < N; ++u)
        if (!br[u].is_zero()) row[tkk.lie.names()[u]] = br[u].str();
      brackets[tkk.lie.names()[i] + "." + tkk.lie.names()[k]] = row;
    }
  report["basis"] = tkk.lie.names();
  report["brackets"] = brackets;
  report["B_L"] = matrix_to_json(tkk.lie.invariant_form()->gram);
  report["killing_nondegenerate"] = !determinant(tkk.lie.killing_form()).is_zero();

  if (auto lift = a.opt("lift")) {
    Matrix d = parse_operator_file(*lift, p.dim());
    Matrix dl = lift_derivation(p, tkk, d);
    report["lift"] = matrix_to_json(dl);
    if (a.has("check-d1")) report["d1"] = check_condition_d1(p, d);
  } else if (a.has("check-d1")) {
    throw Error("Usage", "--check-d1 needs --lift D.json");
  }
  report["ok"] = true;
  return finish(report, 0);
}

CliResult cmd_catalog(const std::vector<std::string>& argv) {
  if (argv.empty()) throw Error("Usage", "catalog get NAME | catalog list");
  if (argv[0] == "list") {
    Json report;
    report["command"] = "catalog";
    Json entries = Json::array();
    for (const auto& e : catalog_list()) {
      Json j;
      j["name"] = e.name;
      j["parameters"] = e.parameters;
      j["nilpotent"] = e.nilpotent;
      j["associative"] = e.associative;
      j["has_form"] = e.has_form;
      if (!e.notes.empty()) j["notes"] = e.notes;
      entries.push_back(j);
    }
    report["entries"] = entries;
    report["ok"] = true;
    return finish(report, 0);
  }
  if (argv[0] != "get") throw Error("Usage", "catalog get NAME | catalog list");
  Args a = parse_args({argv.begin() + 1, argv.end()}, {"param"});
  if (a.positional.size() != 1) throw Error("Usage", "catalog get needs exactly one name");
  std::map<std::string, Scalar> params;
  for (const auto& kv : a.all("param")) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error("Usage", "--param expects k=v");
    params[kv.substr(0, eq)] = Scalar::parse(kv.substr(eq + 1));
  }
  CatalogResult res = catalog_get(a.positional[0], params);
  if (res.algebra.dim() > max_dim()) throw Error("MaxDim", "entry exceeds JFORGE_MAX_DIM");
  Json alg = algebra_to_json(a.positional[0], res.algebra,
                             res.form ? &*res.form : nullptr, nullptr, {});
  Json report;
  report["command"] = "catalog";
  report["name"] = a.positional[0];
  if (!res.notes.empty()) report["notes"] = res.notes;
  report["output"] = alg;
  report["ok"] = true;
  maybe_write(a, alg);
  return finish(report, 0);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  try {
    if (args.empty())
      throw Error("Usage", "commands: check analyze construct peel tkk catalog");
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (args[0] == "check") return cmd_check(rest);
    if (args[0] == "analyze") return cmd_analyze(rest);
    if (args[0] == "construct") return cmd_construct(rest);
    if (args[0] == "peel") return cmd_peel(rest);
    if (args[0] == "tkk") return cmd_tkk(rest);
    if (args[0] == "catalog") return cmd_catalog(rest);
    throw Error("Usage", "unknown command " + args[0]);
  } catch (const Error& e) {
    Json report;
    report["ok"] = false;
    report["error"] = e.code();
    report["message"] = e.what();
    return CliResult{is_input_error(e.code()) ? 2 : 1, dump_canonical(report)};
  } catch (const std::exception& e) {
    Json report;
    report["ok"] = false;
    report["error"] = "Internal";
    report["message"] = e.what();
    return CliResult{2, dump_canonical(report)};
  }
}

}  // namespace jforge
