#pragma once

#include <cstdint>

namespace octf4 {

struct Tolerances {
  double abs = 1e-9;
  double rel = 1e-9;
  // Branch decisions and cone membership; looser than `accept` so that
  // classification does not flap near the isotropic boundary.
  double classify = 1e-7;
  // Final residual of a reduction against the canonical form.
  double accept = 1e-8;
};

struct Config {
  Tolerances tol;
  std::uint64_t seed = 7;
  int samples = 100;

  /// Throws octf4::Error if a tolerance is non-positive or classify < accept.
  void validate() const;
};

}  // namespace octf4
