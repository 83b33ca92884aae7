#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octf4/config.hpp"
#include "octf4/json_io.hpp"

namespace octf4 {

struct SuiteReport {
  std::string name;
  bool passed = false;
  Json details;
};

/// Octonion identities on n random samples; max relative residual per identity.
SuiteReport verify_identities(int n, std::uint64_t seed, double bound = 1e-10);
/// Jordan product and trace preserved by n random letters and n words of length 5.
SuiteReport verify_automorphism(int n, std::uint64_t seed, double bound = 1e-9);
/// Letter realization against the matrix conjugation G A G^-1, both bracketings.
SuiteReport verify_oracle(int n, std::uint64_t seed, double bound = 1e-9);
/// Reduction of n orbit samples, a share of them aimed at each branch.
SuiteReport verify_orbit(int n, std::uint64_t seed, const Tolerances& tol);
/// Reduction of n real orbit samples with real letters.
SuiteReport verify_real(int n, std::uint64_t seed, const Tolerances& tol);
/// Kernel dimension of B -> A o B at n orbit points.
SuiteReport verify_tangent(int n, std::uint64_t seed, const Tolerances& tol);
/// Root counts, fundamental dimensions and the p4 bookkeeping.
SuiteReport verify_rootdata();

const std::vector<std::string>& suite_names();
/// Dispatch by name; throws Error(invalid_argument) for an unknown suite.
SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed, const Config& cfg);

}  // namespace octf4
