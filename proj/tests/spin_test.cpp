#include <gtest/gtest.h>
#include <Eigen/LU>

#include "octf4/random.hpp"
#include "octf4/spin.hpp"

using namespace octf4;

namespace {

double dist(const TraceZeroHermitian2& a, const TraceZeroHermitian2& b) {
  return std::abs(a.s - b.s) + (a.x - b.x).magnitude();
}

double automorphism_defect(const F4Element& g, Rng& rng) {
  const HermMat3 a = rng.herm(), b = rng.herm();
  return frobenius(g(jordan_product(a, b)) - jordan_product(g(a), g(b))) /
         (frobenius(a) * frobenius(b));
}

}  // namespace

TEST(Spin, KappaProductIsSpin9Pair) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const Spin9Letter a = random_spin9(rng), b = random_spin9(rng);
    const TaggedSpinMatrix p = kappa({a.r, a.u}) * kappa({b.r, b.u});
    EXPECT_FALSE(p.times_i);
    const SpinMatrix expect = spin9_matrix(a.r, a.u) * spin9_matrix(-b.r, b.u);
    EXPECT_LT((p.m - expect).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Spin, Spin9VectorActionIsTwoReflections) {
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const Spin9Letter g = random_spin9(rng);
    const TraceZeroHermitian2 v{rng.complex(), rng.octonion()};
    const Vector9 expect = reflect(reflect({v.s, v.x}, {1.0, {}}), {g.r, g.u});
    EXPECT_LT(dist(xi_vector(g, v), {expect.r, expect.u}), 1e-12);
  }
}

TEST(Spin, Spin9ZeroOneSendsVectorToMinusConjugate) {
  Rng rng(3);
  const TraceZeroHermitian2 v{rng.complex(), rng.octonion()};
  const TraceZeroHermitian2 w = xi_vector(Spin9Letter{0.0, ComplexOctonion::scalar(1.0)}, v);
  EXPECT_LT(dist(w, {-v.s, -conj(v.x)}), 1e-14);
}

// The vector part transforms as x3 -> u (conj(v) x3 conj(v)) u; the version
// with an extra minus sign is not an automorphism.
TEST(Spin, Spin8VectorActionSign) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const Spin8Letter g = random_spin8(rng);
    const TraceZeroHermitian2 v{rng.complex(), rng.octonion()};
    const ComplexOctonion plus = g.u * ((conj(g.v) * v.x * conj(g.v)) * g.u);
    EXPECT_LT(dist(xi_vector(g, v), {v.s, plus}), 1e-12);

    HermMat3 a = rng.herm(), b = rng.herm();
    const auto flipped = [&](HermMat3 m) {
      HermMat3 out = act(SpinGenerator{g}, m);
      out.x3 = -(g.u * ((conj(g.v) * m.x3 * conj(g.v)) * g.u));
      return out;
    };
    EXPECT_GT(frobenius(flipped(jordan_product(a, b)) - jordan_product(flipped(a), flipped(b))),
              1e-3 * frobenius(a) * frobenius(b));
  }
}

TEST(Spin, Spin8IsCommutatorOfSpin9Letters) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const Spin8Letter g = random_spin8(rng);
    const GeneratorWord w{Spin9Letter{0.0, g.u}, Spin9Letter{0.0, -g.v}};
    const double d = (realize(SpinGenerator{g}, 1e-9).matrix() - realize(w, 1e-9).matrix())
                         .cwiseAbs()
                         .maxCoeff();
    EXPECT_LT(d, 1e-12);
  }
}

TEST(Spin, EveryLetterKindIsAnAutomorphism) {
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    const SpinGenerator g = random_letter(rng);
    EXPECT_LT(automorphism_defect(realize(g, 1e-9), rng), 1e-12) << kind_name(g);
  }
  for (int k = 0; k < 50; ++k) {
    const SpinGenerator g = random_real_letter(rng);
    EXPECT_LT(automorphism_defect(realize(g, 1e-9), rng), 1e-12) << kind_name(g);
  }
}

TEST(Spin, LettersPreserveTraceAndUnit) {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const SpinGenerator g = random_letter(rng);
    const HermMat3 a = rng.herm();
    EXPECT_LT(std::abs(trace(act(g, a)) - trace(a)), 1e-12 * frobenius(a));
    EXPECT_LT(frobenius(act(g, HermMat3::identity()) - HermMat3::identity()), 1e-12);
  }
}

TEST(Spin, WordOrderIsProductOrder) {
  Rng rng(8);
  const SpinGenerator g = random_spin9(rng), h = random_spin8(rng);
  const HermMat3 a = rng.herm();
  const HermMat3 expect = act(g, act(h, a));
  EXPECT_LT(frobenius(act(GeneratorWord{g, h}, a) - expect), 1e-12);
  EXPECT_LT(frobenius(realize(GeneratorWord{g, h}, 1e-9)(a) - expect), 1e-12);
}

TEST(Spin, ConjugationOracleAgrees) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const Spin9Letter g = random_spin9(rng);
    const HermMat3 a = rng.herm();
    const OracleResult o = conjugation_oracle(g.r, g.u, a, 1e-9);
    EXPECT_LT(frobenius(act(SpinGenerator{g}, a) - o.value), 1e-12);
    EXPECT_LT(o.bracketing_gap, 1e-12);
    EXPECT_LT(o.hermiticity_defect, 1e-12);
  }
}

TEST(Spin, ValidationRejectsBadLetters) {
  const auto expect_invalid = [](const SpinGenerator& g) {
    try {
      validate(g, 1e-9);
      FAIL() << kind_name(g) << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
  };
  expect_invalid(Spin9Letter{1.0, ComplexOctonion::scalar(1.0)});
  expect_invalid(Spin8Letter{ComplexOctonion::scalar(2.0), ComplexOctonion::scalar(1.0)});
  expect_invalid(Orth3Letter{2.0 * Eigen::Matrix3cd::Identity()});
  Eigen::Matrix3cd rot = Eigen::Matrix3cd::Identity();
  rot(0, 0) = rot(1, 1) = 0.0;
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;  // orthogonal but mixes the time axis: not in O(1,2)
  expect_invalid(Orth12Letter{rot});
  validate(GeneratorWord{Spin9Letter{0.0, ComplexOctonion::scalar(1.0)}}, 1e-12);
  try {
    validate(GeneratorWord{Spin9Letter{0.0, ComplexOctonion::scalar(1.0)},
                           Spin9Letter{0.0, ComplexOctonion::scalar(0.5)}},
             1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(Spin, RealModelConjugationUsesDiagonalTwist) {
  Rng rng(10);
  const Orth12Letter g = random_real_orth12(rng);
  Eigen::Matrix3cd d = Eigen::Matrix3cd::Identity();
  d(0, 0) = Complex(0.0, 1.0);
  EXPECT_LT((complexify_real_model(g.m) - d * g.m * d.inverse()).cwiseAbs().maxCoeff(), 1e-14);
  const Eigen::Matrix3cd c = complexify_real_model(g.m);
  EXPECT_LT((c * c.transpose() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Spin, Spin9FromChoosesUnitQuadratic) {
  Rng rng(11);
  const ComplexOctonion u = 0.3 * rng.octonion();
  for (bool neg : {false, true}) {
    const Spin9Letter l = spin9_from(u, neg);
    EXPECT_LT(std::abs(l.r * l.r + norm(l.u) - 1.0), 1e-14);
  }
}
