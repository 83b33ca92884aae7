#include "octf4/random.hpp"

#include <Eigen/LU>

namespace octf4 {

ComplexOctonion Rng::octonion(double scale) {
  ComplexOctonion o;
  for (int k = 0; k < 8; ++k) o[k] = complex(scale);
  return o;
}

ComplexOctonion Rng::real_octonion(double scale) {
  ComplexOctonion o;
  for (int k = 0; k < 8; ++k) o[k] = uniform(-scale, scale);
  return o;
}

HermMat3 Rng::herm(double scale) {
  HermMat3 a;
  for (auto& d : a.diag) d = complex(scale);
  a.x1 = octonion(scale);
  a.x2 = octonion(scale);
  a.x3 = octonion(scale);
  return a;
}

ComplexOctonion random_unit_octonion(Rng& rng) {
  for (;;) {
    const ComplexOctonion y = rng.octonion();
    const Complex n = norm(y);
    // Keep away from the isotropic cone so the normalization stays tame.
    if (std::abs(n) < 0.25 * y.magnitude2()) continue;
    return (1.0 / std::sqrt(n)) * y;
  }
}

ComplexOctonion random_real_unit_octonion(Rng& rng) {
  for (;;) {
    const ComplexOctonion y = rng.real_octonion();
    const double n = norm(y).real();
    if (n < 0.05) continue;
    return (1.0 / std::sqrt(n)) * y;
  }
}

ComplexOctonion random_isotropic_octonion(Rng& rng) {
  // p + i q with |p| = |q| and p orthogonal to q.
  for (;;) {
    ComplexOctonion p = rng.real_octonion(), q = rng.real_octonion();
    const double pp = norm(p).real();
    if (pp < 0.05) continue;
    q -= (norm(q + p).real() - norm(q).real() - pp) / (2.0 * pp) * p;
    const double qq = norm(q).real();
    if (qq < 0.05 * pp) continue;
    q *= std::sqrt(pp / qq);
    return p + Complex(0.0, 1.0) * q;
  }
}

Spin9Letter random_spin9(Rng& rng, double scale) {
  return spin9_from(rng.octonion(scale), rng.coin());
}

Spin8Letter random_spin8(Rng& rng) {
  const ComplexOctonion u = random_unit_octonion(rng);
  return {u, random_unit_octonion(rng)};
}

Orth3Letter random_signed_permutation(Rng& rng) {
  std::array<int, 3> perm{0, 1, 2};
  for (int k = 2; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  for (int k = 0; k < 3; ++k) m(k, perm[k]) = rng.coin() ? 1.0 : -1.0;
  return {m};
}

Orth3Letter random_orth3(Rng& rng, double scale) {
  Eigen::Matrix3cd k = Eigen::Matrix3cd::Zero();
  k(0, 1) = rng.complex(scale);
  k(0, 2) = rng.complex(scale);
  k(1, 2) = rng.complex(scale);
  k(1, 0) = -k(0, 1);
  k(2, 0) = -k(0, 2);
  k(2, 1) = -k(1, 2);
  const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
  return {(id + k) * (id - k).inverse()};
}

Spin9Letter random_real_spin9(Rng& rng, double scale) {
  for (;;) {
    const ComplexOctonion u = rng.real_octonion(scale);
    if (norm(u).real() >= 0.95) continue;
    return spin9_from(u, rng.coin());
  }
}

Spin8Letter random_real_spin8(Rng& rng) {
  const ComplexOctonion u = random_real_unit_octonion(rng);
  return {u, random_real_unit_octonion(rng)};
}

Orth12Letter random_real_orth12(Rng& rng, double max_rapidity) {
  const double phi = rng.uniform(-max_rapidity, max_rapidity);
  const int plane = 1 + rng.below(2);
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(0, 0) = std::cosh(phi);
  m(plane, plane) = std::cosh(phi);
  m(0, plane) = std::sinh(phi);
  m(plane, 0) = std::sinh(phi);
  if (rng.coin()) {
    Eigen::Matrix3cd swap23 = Eigen::Matrix3cd::Zero();
    swap23(0, 0) = 1.0;
    swap23(1, 2) = 1.0;
    swap23(2, 1) = 1.0;
    m = swap23 * m;
  }
  for (int k = 0; k < 3; ++k)
    if (rng.coin()) m.row(k) *= -1.0;
  return {m};
}

SpinGenerator random_letter(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return random_spin9(rng);
    case 1: return random_spin8(rng);
    case 2: return random_signed_permutation(rng);
    default: return random_orth3(rng);
  }
}

SpinGenerator random_real_letter(Rng& rng) {
  switch (rng.below(3)) {
    case 0: return random_real_spin9(rng);
    case 1: return random_real_spin8(rng);
    default: return random_real_orth12(rng);
  }
}

}  // namespace octf4
