#pragma once

#include <cstdint>
#include <random>

#include "octf4/jordan.hpp"
#include "octf4/octonion.hpp"
#include "octf4/spin.hpp"

namespace octf4 {

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is
/// fixed by the C++ standard; doubles are formed from the top 53 bits so the
/// stream is identical on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(uniform() * n); }
  bool coin() { return (engine_() >> 63) != 0; }

  Complex complex(double scale = 1.0) {
    const double re = uniform(-scale, scale);
    return {re, uniform(-scale, scale)};
  }
  ComplexOctonion octonion(double scale = 1.0);
  ComplexOctonion real_octonion(double scale = 1.0);
  HermMat3 herm(double scale = 1.0);

 private:
  std::mt19937_64 engine_;
};

/// Random complex octonion with N(u) = 1.
ComplexOctonion random_unit_octonion(Rng& rng);
/// Random real octonion with N(u) = 1.
ComplexOctonion random_real_unit_octonion(Rng& rng);
/// Random isotropic complex octonion (N = 0), nonzero.
ComplexOctonion random_isotropic_octonion(Rng& rng);

Spin9Letter random_spin9(Rng& rng, double scale = 0.35);
Spin8Letter random_spin8(Rng& rng);
/// Signed permutation matrix.
Orth3Letter random_signed_permutation(Rng& rng);
/// Cayley transform (I + K)(I - K)^-1 of a random complex skew K.
Orth3Letter random_orth3(Rng& rng, double scale = 0.4);

Spin9Letter random_real_spin9(Rng& rng, double scale = 0.5);
Spin8Letter random_real_spin8(Rng& rng);
/// Real O(1,2) letter: a boost in the (1,2) or (1,3) plane, possibly
/// composed with the (23) swap and sign flips.
Orth12Letter random_real_orth12(Rng& rng, double max_rapidity = 0.5);

/// Random letter of any complex kind.
SpinGenerator random_letter(Rng& rng);
/// Random letter of any real kind.
SpinGenerator random_real_letter(Rng& rng);

}  // namespace octf4
