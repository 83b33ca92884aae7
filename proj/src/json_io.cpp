#include "octf4/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace octf4 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

void expect_array(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    fail(where + ": expected an array of length " + std::to_string(n));
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  expect_array(j, 2, "complex number");
  return {number(j[0], "complex number"), number(j[1], "complex number")};
}

Json to_json(const ComplexOctonion& x) {
  Json out = Json::array();
  for (int k = 0; k < 8; ++k) out.push_back(to_json(x[k]));
  return out;
}

ComplexOctonion octonion_from_json(const Json& j) {
  expect_array(j, 8, "octonion");
  ComplexOctonion x;
  for (int k = 0; k < 8; ++k) x[k] = complex_from_json(j[k]);
  return x;
}

Json to_json(const HermMat3& a) {
  return {{"diag", Json::array({to_json(a.diag[0]), to_json(a.diag[1]), to_json(a.diag[2])})},
          {"x1", to_json(a.x1)},
          {"x2", to_json(a.x2)},
          {"x3", to_json(a.x3)}};
}

HermMat3 herm_from_json(const Json& j) {
  HermMat3 a;
  const Json& d = field(j, "diag");
  expect_array(d, 3, "diag");
  for (int k = 0; k < 3; ++k) a.diag[k] = complex_from_json(d[k]);
  a.x1 = octonion_from_json(field(j, "x1"));
  a.x2 = octonion_from_json(field(j, "x2"));
  a.x3 = octonion_from_json(field(j, "x3"));
  return a;
}

Json to_json(const RealHermMat3& x) {
  return {{"diag", x.diag}, {"x1", x.x1}, {"x2", x.x2}, {"x3", x.x3}};
}

RealHermMat3 real_herm_from_json(const Json& j) {
  RealHermMat3 x;
  const auto reals = [](const Json& a, double* out, std::size_t n, const std::string& where) {
    expect_array(a, n, where);
    for (std::size_t k = 0; k < n; ++k) out[k] = number(a[k], where);
  };
  reals(field(j, "diag"), x.diag.data(), 3, "diag");
  reals(field(j, "x1"), x.x1.data(), 8, "x1");
  reals(field(j, "x2"), x.x2.data(), 8, "x2");
  reals(field(j, "x3"), x.x3.data(), 8, "x3");
  return x;
}

Json to_json(const Eigen::Matrix3cd& m) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 3; ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Eigen::Matrix3cd matrix3_from_json(const Json& j) {
  expect_array(j, 3, "matrix");
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i) {
    expect_array(j[i], 3, "matrix row");
    for (int k = 0; k < 3; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const SpinGenerator& g) {
  return std::visit(
      [](const auto& l) -> Json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, Spin9Letter>)
          return {{"kind", "spin9"}, {"r", to_json(l.r)}, {"u", to_json(l.u)}};
        else if constexpr (std::is_same_v<T, Spin8Letter>)
          return {{"kind", "spin8"}, {"u", to_json(l.u)}, {"v", to_json(l.v)}};
        else if constexpr (std::is_same_v<T, Orth3Letter>)
          return {{"kind", "orth3"}, {"m", to_json(l.m)}};
        else
          return {{"kind", "orth12"}, {"m", to_json(l.m)}};
      },
      g);
}

SpinGenerator letter_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("letter kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "spin9")
    return Spin9Letter{complex_from_json(field(j, "r")), octonion_from_json(field(j, "u"))};
  if (k == "spin8")
    return Spin8Letter{octonion_from_json(field(j, "u")), octonion_from_json(field(j, "v"))};
  if (k == "orth3") return Orth3Letter{matrix3_from_json(field(j, "m"))};
  if (k == "orth12") return Orth12Letter{matrix3_from_json(field(j, "m"))};
  fail("unknown letter kind '" + k + "'");
}

Json to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const auto& g : w) out.push_back(to_json(g));
  return out;
}

GeneratorWord word_from_json(const Json& j) {
  if (!j.is_array()) fail("word: expected an array of letters");
  GeneratorWord w;
  for (const auto& l : j) w.push_back(letter_from_json(l));
  return w;
}

Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"label", s.label},
                     {"branch", branch_name(s.branch)},
                     {"letters", to_json(s.letters)},
                     {"matrix", to_json(s.matrix)}});
  return {{"model", t.model == Model::real ? "real" : "complex"},
          {"input", to_json(t.input)},
          {"scale", to_json(t.scale)},
          {"initial_branch", branch_name(t.initial_branch)},
          {"steps", steps},
          {"word", to_json(t.word)},
          {"final", to_json(t.final)},
          {"target", to_json(t.target)},
          {"residual", t.residual},
          {"bound", t.bound}};
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace t;
  const Json& model = field(j, "model");
  if (model == "real")
    t.model = Model::real;
  else if (model == "complex")
    t.model = Model::complex;
  else
    fail("trace model must be \"complex\" or \"real\"");
  t.input = herm_from_json(field(j, "input"));
  t.scale = j.contains("scale") ? complex_from_json(j["scale"]) : Complex(1.0);
  t.word = word_from_json(field(j, "word"));
  t.final = herm_from_json(field(j, "final"));
  t.target = herm_from_json(field(j, "target"));
  if (j.contains("initial_branch")) {
    if (!j["initial_branch"].is_string()) fail("initial_branch must be a string");
    t.initial_branch = branch_from_name(j["initial_branch"].get<std::string>());
  }
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) fail("steps must be an array");
    for (const auto& s : j["steps"]) {
      ReductionStep step;
      const Json& label = field(s, "label");
      if (!label.is_string()) fail("step label must be a string");
      step.label = label.get<std::string>();
      const Json& branch = field(s, "branch");
      if (!branch.is_string()) fail("step branch must be a string");
      step.branch = branch_from_name(branch.get<std::string>());
      step.letters = word_from_json(field(s, "letters"));
      step.matrix = herm_from_json(field(s, "matrix"));
      t.steps.push_back(std::move(step));
    }
  }
  if (j.contains("residual")) t.residual = number(j["residual"], "residual");
  if (j.contains("bound")) t.bound = number(j["bound"], "bound");
  return t;
}

Json to_json(const Classification& c) {
  return {{"branch", branch_name(c.branch)},
          {"t", to_json(c.t)},
          {"vector_quadratic", to_json(c.vector_quadratic)},
          {"scale", c.scale},
          {"vector_isotropic", c.vector_isotropic},
          {"t_vanishes", c.t_vanishes},
          {"spinor_isotropic", c.spinor_isotropic},
          {"consistent", c.consistent()}};
}

Json to_json(const TraceCheck& c) {
  return {{"word_residual", c.word_residual},
          {"target_residual", c.target_residual},
          {"letters_valid", c.letters_valid},
          {"ok", c.ok}};
}

Json to_json(const KernelResult& k) {
  return {{"dimension", k.dimension},
          {"real_dimension", 2 * k.dimension},
          {"gap_ratio", k.gap_ratio},
          {"max_residual", k.max_residual}};
}

Config config_from_json(const Json& j, Config base) {
  if (!j.is_object()) fail("config: expected an object");
  if (j.contains("tolerance")) {
    const Json& t = j["tolerance"];
    if (!t.is_object()) fail("config: tolerance must be an object");
    if (t.contains("abs")) base.tol.abs = number(t["abs"], "tolerance.abs");
    if (t.contains("rel")) base.tol.rel = number(t["rel"], "tolerance.rel");
    if (t.contains("classify")) base.tol.classify = number(t["classify"], "tolerance.classify");
    if (t.contains("accept")) base.tol.accept = number(t["accept"], "tolerance.accept");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("config: seed must be a nonnegative integer");
    base.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer()) fail("config: samples must be an integer");
    base.samples = j["samples"].get<int>();
  }
  base.validate();
  return base;
}

Json to_json(const Config& c) {
  return {{"tolerance",
           {{"abs", c.tol.abs}, {"rel", c.tol.rel}, {"classify", c.tol.classify},
            {"accept", c.tol.accept}}},
          {"seed", c.seed},
          {"samples", c.samples}};
}

Json to_json(const ParabolicReport& p) {
  return {{"crossed", p.crossed},
          {"levi_dim", p.levi_dim},
          {"levi_semisimple_dim", p.levi_semisimple_dim},
          {"levi_center_dim", p.levi_center_dim},
          {"levi_type", p.levi_type},
          {"nilradical_dim", p.nilradical_dim},
          {"parabolic_dim", p.parabolic_dim}};
}

Json to_json(const SmallIrrepReport& r) {
  Json found = Json::array();
  for (std::size_t k = 0; k < r.found.size(); ++k)
    found.push_back({{"labels", r.found[k]}, {"dim", r.dims[k]}});
  return {{"bound", r.bound}, {"found", found}, {"candidates_checked", r.candidates_checked}};
}

Json dims_report() {
  const RootDatum& d = f4();
  Json out;
  for (int i = 0; i < 4; ++i)
    out["w" + std::to_string(i + 1)] = weyl_dim(d.fundamental_weights[i]);
  const auto long_roots = std::count_if(d.roots.begin(), d.roots.end(),
                                        [](const Root& r) { return r.long_root; });
  out["roots"] = d.roots.size();
  out["long_roots"] = long_roots;
  out["rank"] = d.rank();
  out["dimension"] = d.dimension();
  out["parabolic"] = to_json(parabolic_dims({4}));
  out["small_irreps"] = to_json(unique_small_irrep_check());
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace octf4
