#include <gtest/gtest.h>

#include "octf4/jordan.hpp"
#include "octf4/normalize.hpp"
#include "octf4/random.hpp"

using namespace octf4;

TEST(Jordan, CoordinatesRoundTrip) {
  Rng rng(1);
  const HermMat3 a = rng.herm();
  EXPECT_EQ(from_coords(to_coords(a)), a);
  EXPECT_EQ(from_full(to_full(a)), a);
  EXPECT_EQ(hermiticity_defect(to_full(a)), 0.0);
}

TEST(Jordan, ProductIsCommutativeWithUnit) {
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const HermMat3 a = rng.herm(), b = rng.herm();
    EXPECT_LT(frobenius(jordan_product(a, b) - jordan_product(b, a)), 1e-13);
    EXPECT_LT(frobenius(jordan_product(HermMat3::identity(), a) - a), 1e-14);
  }
}

TEST(Jordan, TraceFormIsSymmetric) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const HermMat3 a = rng.herm(), b = rng.herm();
    EXPECT_LT(std::abs(trace(jordan_product(a, b)) - trace(jordan_product(b, a))), 1e-13);
  }
}

TEST(Jordan, MultiplicationMatrixMatchesProduct) {
  Rng rng(4);
  const HermMat3 a = rng.herm(), b = rng.herm();
  const JordanVector v = jordan_multiplication_matrix(a) * to_coords(b);
  EXPECT_LT(frobenius(from_coords(v) - jordan_product(a, b)), 1e-13);
}

TEST(Jordan, CanonicalFormIsOnTheCone) {
  const HermMat3 c = canonical_form();
  const ConeReport r = cone_membership(c, 1e-12);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.square_residual, 0.0);
  EXPECT_FALSE(cone_membership(HermMat3{}, 1e-12).member);
  EXPECT_FALSE(cone_membership(HermMat3::identity(), 1e-12).member);
}

TEST(Jordan, DecompositionOfCanonicalForm) {
  const Decomposition d = decompose(canonical_form());
  EXPECT_LT(std::abs(d.t - Complex(0, -0.5)), 1e-15);
  EXPECT_LT(std::abs(d.vector.s - Complex(0, -0.5)), 1e-15);
  EXPECT_EQ(d.trace_part, Complex(0.0));
  EXPECT_EQ(recompose(d), canonical_form());
}

// On the cone: s^2 + N(x3) = t^2, N(x1) = -2t^2 - 2ts, N(x2) = -2t^2 + 2ts.
TEST(Jordan, ConeRelationsOnOrbitSamples) {
  for (const auto& a : sample_orbit(5, 200)) {
    const Decomposition d = decompose(a);
    const Complex t = d.t, s = d.vector.s;
    const double scale = frobenius(a) * frobenius(a);
    EXPECT_LT(std::abs(d.vector.quadratic() - t * t), 1e-10 * scale);
    EXPECT_LT(std::abs(norm(d.x1) - (-2.0 * t * t - 2.0 * t * s)), 1e-10 * scale);
    EXPECT_LT(std::abs(norm(d.x2) - (-2.0 * t * t + 2.0 * t * s)), 1e-10 * scale);
  }
}

TEST(Jordan, KernelAtCanonicalForm) {
  const KernelResult k = differential_kernel(canonical_form(), 1e-9);
  EXPECT_EQ(k.dimension, 16);
  EXPECT_GT(k.gap_ratio, 1e3);
  EXPECT_LT(k.max_residual, 1e-8);
  EXPECT_EQ(k.basis.cols(), 16);
}

TEST(Jordan, KernelDimensionConstantAlongOrbit) {
  for (const auto& a : sample_orbit(9, 10)) {
    const KernelResult k = differential_kernel(a, 1e-7);
    EXPECT_EQ(k.dimension, 16);
    EXPECT_LT(k.max_residual, 1e-8);
  }
}

TEST(Jordan, KernelRejectsPointsOffTheCone) {
  try {
    differential_kernel(HermMat3::diagonal(1.0, -1.0, 0.0), 1e-9);
    FAIL() << "expected not_on_variety";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_on_variety);
  }
}
