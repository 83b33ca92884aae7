// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "octf4/json_io.hpp"
#include "octf4/verify.hpp"

using namespace octf4;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = o.ok;
  if (time_limit > 0 && secs >= time_limit) {
    ok = false;
    o.detail += "; over time limit " + std::to_string(time_limit) + " s";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::printf("%s %d %s: %s [%s]\n", ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
              timing);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  const Tolerances tol;  // classify 1e-7, accept 1e-8

  criterion(1, "representation dimensions", 1.0, [] {
    const Json d = dims_report();
    const bool ok = d["w4"] == 26 && d["w1"] == 52 && d["w3"] == 273 && d["w2"] == 1274;
    return Outcome{ok, "w4=" + d["w4"].dump() + " w1=" + d["w1"].dump() + " w3=" +
                           d["w3"].dump() + " w2=" + d["w2"].dump()};
  });

  criterion(2, "parabolic bookkeeping for sigma={alpha4}", 0, [&] {
    const ParabolicReport p = parabolic_dims({4});
    const KernelResult k = differential_kernel(canonical_form(), tol.classify);
    const bool ok = p.nilradical_dim == 15 && p.parabolic_dim == 37 &&
                    p.parabolic_dim == 52 - p.nilradical_dim && k.dimension - 1 == p.nilradical_dim;
    return Outcome{ok, "nilradical " + std::to_string(p.nilradical_dim) + ", parabolic " +
                           std::to_string(p.parabolic_dim) + ", cone dimension " +
                           std::to_string(k.dimension) + " - 1"};
  });

  criterion(3, "octonion identities on 10^4 samples", 5.0, [] {
    const SuiteReport r = verify_identities(10000, kSeed, 1e-10);
    return Outcome{r.passed, "max relative residual " + num(r.details["max"].get<double>()) +
                                 " (bound 1e-10)"};
  });

  criterion(4, "letters preserve the Jordan product and trace", 0, [] {
    const SuiteReport r = verify_automorphism(1000, kSeed, 1e-9);
    return Outcome{r.passed, "max relative defect " + num(r.details["max"].get<double>()) +
                                 " (bound 1e-9), cone failures " +
                                 r.details["cone_failures"].dump()};
  });

  criterion(5, "Spin9 letters match the conjugation oracle", 0, [] {
    const SuiteReport r = verify_oracle(1000, kSeed, 1e-9);
    return Outcome{r.passed,
                   "max disagreement " + num(r.details["max_disagreement"].get<double>()) +
                       ", bracketing gap " + num(r.details["max_bracketing_gap"].get<double>()) +
                       " (bound 1e-9)"};
  });

  Json orbit_details;
  criterion(6, "transitivity on 10^3 orbit samples", 60.0, [&] {
    const SuiteReport r = verify_orbit(1000, kSeed, tol);
    orbit_details = r.details;
    const Json& d = r.details;
    const bool ok = d["reduction_failures"] == 0 && d["reverify_failures"] == 0 &&
                    d["branches"].size() == 3 && d["max_residual"].get<double>() < 1e-8 &&
                    d["proof_step_failures"] == 0;
    return Outcome{ok, "branches " + d["branches"].dump() + ", max residual " +
                           num(d["max_residual"].get<double>()) +
                           " relative to max(1,|A|) (bound 1e-8), reverify failures " +
                           d["reverify_failures"].dump()};
  });

  criterion(7, "isotropy criteria agree on all orbit samples", 0, [&] {
    if (orbit_details.is_null()) orbit_details = verify_orbit(1000, kSeed, tol).details;
    const int bad = orbit_details["lemma_failures"].get<int>();
    return Outcome{bad == 0, std::to_string(bad) + " disagreements among " +
                                 orbit_details["samples"].dump() + " samples"};
  });

  criterion(8, "tangent dimension at 20 orbit points", 0, [&] {
    const SuiteReport r = verify_tangent(20, kSeed, tol);
    return Outcome{r.passed, "dimensions " + r.details["dimensions"].dump() + ", min gap ratio " +
                                 num(r.details["min_gap_ratio"].get<double>()) + " (need > 1e3)"};
  });

  criterion(9, "real form reduction on 10^3 samples", 0, [&] {
    const SuiteReport r = verify_real(1000, kSeed, tol);
    const Json& d = r.details;
    const bool ok = r.passed && d["max_residual"].get<double>() < 1e-8;
    return Outcome{ok, "max residual " + num(d["max_residual"].get<double>()) +
                           " (bound 1e-8), failures " + d["failures"].dump() +
                           ", complex letters " + d["complex_letters"].dump()};
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
