#include "octf4/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "octf4/random.hpp"

namespace octf4 {

namespace {

double mag(const ComplexOctonion& x) { return x.magnitude(); }

struct MaxTracker {
  std::map<std::string, double> worst;
  void add(const std::string& key, double v) {
    auto [it, inserted] = worst.emplace(key, v);
    if (!inserted) it->second = std::max(it->second, v);
  }
  double max() const {
    double m = 0.0;
    for (const auto& [k, v] : worst) m = std::max(m, v);
    return m;
  }
  Json to_json() const { return Json(worst); }
};

}  // namespace

SuiteReport verify_identities(int n, std::uint64_t seed, double bound) {
  Rng rng(seed);
  MaxTracker t;
  for (int k = 0; k < n; ++k) {
    const ComplexOctonion x = rng.octonion(), y = rng.octonion(), z = rng.octonion(),
                          u = rng.octonion();
    const double mx = mag(x), my = mag(y), mz = mag(z), mu = mag(u);
    // <xy, z> = <y, conj(x) z>
    t.add("adjoint", std::abs(bilinear(x * y, z) - bilinear(y, conj(x) * z)) / (mx * my * mz));
    // x (conj(x) y) = N(x) y
    t.add("composition", mag(x * (conj(x) * y) - norm(x) * y) / (mx * mx * my));
    // u (conj(x) y) + x (conj(u) y) = <u, x> y
    t.add("polarized_composition",
          mag(u * (conj(x) * y) + x * (conj(u) * y) - bilinear(u, x) * y) / (mu * mx * my));
    // u (conj(x) (u y)) = ((u conj(x)) u) y
    t.add("moufang",
          mag(u * (conj(x) * (u * y)) - ((u * conj(x)) * u) * y) / (mu * mu * mx * my));
    t.add("left_alternative", mag(x * (x * y) - (x * x) * y) / (mx * mx * my));
    t.add("right_alternative", mag((y * x) * x - y * (x * x)) / (mx * mx * my));
    t.add("flexible", mag((x * y) * x - x * (y * x)) / (mx * mx * my));
    t.add("norm_multiplicative", std::abs(norm(x * y) - norm(x) * norm(y)) / (mx * mx * my * my));
    // Artin: the subalgebra generated by two elements is associative.
    const ComplexOctonion w = x * y + y;
    t.add("artin", mag(associator(x, w, y)) / (mx * mag(w) * my));
  }
  SuiteReport r{"identities", t.max() < bound, {}};
  r.details = {{"samples", n}, {"seed", seed}, {"bound", bound}, {"max_relative", t.to_json()},
               {"max", t.max()}};
  return r;
}

SuiteReport verify_automorphism(int n, std::uint64_t seed, double bound) {
  Rng rng(seed);
  MaxTracker t;
  const Tolerances tol;
  int cone_failures = 0;
  for (int k = 0; k < n; ++k) {
    const SpinGenerator g = random_letter(rng);
    const HermMat3 a = rng.herm(), b = rng.herm();
    const double ab = frobenius(a) * frobenius(b);
    const std::string kind = kind_name(g);
    t.add("product/" + kind,
          frobenius(act(g, jordan_product(a, b)) - jordan_product(act(g, a), act(g, b))) / ab);
    t.add("trace/" + kind, std::abs(trace(act(g, a)) - trace(a)) / frobenius(a));

    // Words through the dense realization.
    GeneratorWord w;
    for (int l = 0; l < 5; ++l) w.push_back(random_letter(rng));
    const F4Element f = realize(w, tol.classify);
    t.add("product/word", frobenius(f(jordan_product(a, b)) - jordan_product(f(a), f(b))) / ab);
    t.add("trace/word", std::abs(trace(f(a)) - trace(a)) / frobenius(a));
    t.add("word_vs_letters", frobenius(f(a) - act(w, a)) / frobenius(a));

    // The cone is stable.
    const HermMat3 c = act(w, canonical_form());
    if (!cone_membership(c, tol.classify).member) ++cone_failures;
  }
  SuiteReport r{"automorphism", t.max() < bound && cone_failures == 0, {}};
  r.details = {{"samples", n},          {"seed", seed},        {"bound", bound},
               {"max_relative", t.to_json()}, {"max", t.max()}, {"cone_failures", cone_failures}};
  return r;
}

SuiteReport verify_oracle(int n, std::uint64_t seed, double bound) {
  Rng rng(seed);
  double agree = 0.0, gap = 0.0, herm = 0.0;
  for (int k = 0; k < n; ++k) {
    const Spin9Letter l = random_spin9(rng);
    const HermMat3 a = rng.herm();
    const OracleResult o = conjugation_oracle(l.r, l.u, a, 1e-9);
    const double s = frobenius(a);
    agree = std::max(agree, frobenius(realize(SpinGenerator{l}, 1e-9)(a) - o.value) / s);
    gap = std::max(gap, o.bracketing_gap / s);
    herm = std::max(herm, o.hermiticity_defect / s);
  }
  SuiteReport r{"oracle", agree < bound && gap < bound, {}};
  r.details = {{"samples", n},       {"seed", seed},     {"bound", bound},
               {"max_disagreement", agree}, {"max_bracketing_gap", gap},
               {"max_hermiticity_defect", herm}};
  return r;
}

SuiteReport verify_orbit(int n, std::uint64_t seed, const Tolerances& tol) {
  // One tenth of the samples each aimed at the isotropic and zero branches.
  const int targeted = std::max(1, n / 10);
  const int general = std::max(0, n - 2 * targeted);
  std::vector<HermMat3> samples = sample_orbit(seed, general);
  for (Branch b : {Branch::isotropic_nonzero_vector, Branch::zero_vector}) {
    const auto more = sample_branch(seed + 1 + static_cast<int>(b), targeted, b);
    samples.insert(samples.end(), more.begin(), more.end());
  }

  std::map<std::string, int> branches;
  int failures = 0, verify_failures = 0, lemma_failures = 0, step_failures = 0;
  double max_rel = 0.0, max_abs = 0.0, max_word = 0.0;
  Json first_failure;
  for (const auto& a : samples) {
    const Classification c = classify(a, tol);
    ++branches[branch_name(c.branch)];
    if (!c.consistent()) ++lemma_failures;
    try {
      const ReductionTrace t = reduce_to_canonical(a, tol);
      const TraceCheck check = verify_trace(t, tol);
      if (!check.ok) ++verify_failures;
      const double s = std::max(1.0, std::abs(t.scale) * frobenius(a));
      max_rel = std::max(max_rel, check.target_residual / s);
      max_abs = std::max(max_abs, check.target_residual);
      max_word = std::max(max_word, check.word_residual / s);
      // After h1: x3 = 0 and exactly one of N(x1), N(x2) vanishes.
      for (const auto& st : t.steps) {
        if (st.label.rfind("h1", 0) != 0) continue;
        const double m = frobenius(st.matrix);
        const bool n1 = std::abs(norm(st.matrix.x1)) <= tol.classify * m * m;
        const bool n2 = std::abs(norm(st.matrix.x2)) <= tol.classify * m * m;
        if (st.matrix.x3.magnitude() > tol.classify * m || n1 == n2) ++step_failures;
      }
    } catch (const ReductionError& e) {
      ++failures;
      if (first_failure.is_null()) first_failure = {{"error", e.what()}, {"input", to_json(a)}};
    }
  }
  SuiteReport r{"orbit",
                failures == 0 && verify_failures == 0 && lemma_failures == 0 &&
                    step_failures == 0 && static_cast<int>(branches.size()) == 3,
                {}};
  r.details = {{"samples", samples.size()},
               {"seed", seed},
               {"branches", branches},
               {"reduction_failures", failures},
               {"reverify_failures", verify_failures},
               {"lemma_failures", lemma_failures},
               {"proof_step_failures", step_failures},
               {"max_residual", max_rel},
               {"max_absolute_residual", max_abs},
               {"max_word_residual", max_word},
               {"bound", tol.accept}};
  if (!first_failure.is_null()) r.details["first_failure"] = first_failure;
  return r;
}

SuiteReport verify_real(int n, std::uint64_t seed, const Tolerances& tol) {
  const auto samples = sample_real_orbit(seed, n);
  int failures = 0, complex_letters = 0;
  double max_rel = 0.0, max_abs = 0.0;
  for (const auto& x : samples) {
    try {
      const ReductionTrace t = reduce_real(x, tol);
      const TraceCheck check = verify_trace(t, tol);
      if (!check.ok) ++failures;
      const double s = std::max(1.0, frobenius(t.input));
      max_rel = std::max(max_rel, check.target_residual / s);
      max_abs = std::max(max_abs, check.target_residual);
      for (const auto& g : t.word) {
        const Json j = to_json(g);
        // Every [re, im] pair must have im == 0.
        std::function<bool(const Json&)> real = [&](const Json& v) -> bool {
          if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return v[1].get<double>() == 0.0;
          if (v.is_array() || v.is_object()) {
            for (const auto& e : v)
              if (!real(e)) return false;
          }
          return true;
        };
        if (!real(j)) ++complex_letters;
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  SuiteReport r{"real", failures == 0 && complex_letters == 0, {}};
  r.details = {{"samples", n},           {"seed", seed},
               {"failures", failures},   {"complex_letters", complex_letters},
               {"max_residual", max_rel}, {"max_absolute_residual", max_abs},
               {"bound", tol.accept}};
  return r;
}

SuiteReport verify_tangent(int n, std::uint64_t seed, const Tolerances& tol) {
  const auto samples = sample_orbit(seed, n);
  std::map<int, int> dims;
  double min_gap = std::numeric_limits<double>::infinity(), max_res = 0.0;
  for (const auto& a : samples) {
    const KernelResult k = differential_kernel(a, tol.classify);
    ++dims[k.dimension];
    min_gap = std::min(min_gap, k.gap_ratio);
    max_res = std::max(max_res, k.max_residual);
  }
  Json dj = Json::object();
  for (const auto& [d, c] : dims) dj[std::to_string(d)] = c;
  SuiteReport r{"tangent", dims.size() == 1 && dims.begin()->first == 16 && min_gap > 1e3, {}};
  r.details = {{"samples", n},       {"seed", seed},           {"dimensions", dj},
               {"min_gap_ratio", min_gap}, {"max_kernel_residual", max_res}};
  return r;
}

SuiteReport verify_rootdata() {
  const Json d = dims_report();
  const bool ok = d["w1"] == 52 && d["w2"] == 1274 && d["w3"] == 273 && d["w4"] == 26 &&
                  d["roots"] == 48 && d["long_roots"] == 24 &&
                  d["parabolic"]["nilradical_dim"] == 15 &&
                  d["parabolic"]["parabolic_dim"] == 37 &&
                  d["small_irreps"]["found"].size() == 1;
  return {"rootdata", ok, d};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "automorphism", "oracle", "orbit",
                                              "real",       "tangent",      "rootdata"};
  return names;
}

SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed, const Config& cfg) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "sample count must be positive");
  if (name == "identities") return verify_identities(n, seed);
  if (name == "automorphism") return verify_automorphism(n, seed);
  if (name == "oracle") return verify_oracle(n, seed);
  if (name == "orbit") return verify_orbit(n, seed, cfg.tol);
  if (name == "real") return verify_real(n, seed, cfg.tol);
  if (name == "tangent") return verify_tangent(n, seed, cfg.tol);
  if (name == "rootdata") return verify_rootdata();
  throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace octf4
