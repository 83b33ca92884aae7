#include <gtest/gtest.h>

#include <algorithm>

#include "octf4/normalize.hpp"
#include "octf4/random.hpp"

using namespace octf4;

namespace {

const Complex kI(0.0, 1.0);
const Tolerances kTol;

double relative(const ReductionTrace& t) {
  return verify_trace(t, kTol).target_residual / std::max(1.0, frobenius(t.input));
}

bool is_signed_permutation(const Eigen::Matrix3cd& m) {
  for (int i = 0; i < 3; ++i) {
    int nonzero = 0;
    for (int k = 0; k < 3; ++k) {
      const Complex c = m(i, k);
      if (c == Complex(0.0)) continue;
      if (c != Complex(1.0) && c != Complex(-1.0)) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Transport, UnitOctonionToScalarAxis) {
  Rng rng(1);
  const Vector9 a{0.0, random_unit_octonion(rng)}, b{1.0, {}};
  const GeneratorWord w = spin9_transport(a, b, 1e-9);
  EXPECT_LE(w.size(), 8u);
  EXPECT_LT((transport_vector(w, a) - b).magnitude(), 1e-9);
  validate(w, 1e-9);
}

TEST(Transport, RandomPairsWithEqualQuadratic) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const Vector9 a{rng.complex(), rng.octonion()};
    Vector9 b{rng.complex(), rng.octonion()};
    // Rescale b so that Q(b) = Q(a).
    b = std::sqrt(a.quadratic() / b.quadratic()) * b;
    const GeneratorWord w = spin9_transport(a, b, 1e-9);
    EXPECT_LT((transport_vector(w, a) - b).magnitude(), 1e-10 * a.magnitude() * b.magnitude());
  }
}

TEST(Transport, IsotropicVectors) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const ComplexOctonion p = random_isotropic_octonion(rng), q = random_isotropic_octonion(rng);
    const Vector9 a{0.0, p}, b{0.0, q};
    const GeneratorWord w = spin9_transport(a, b, 1e-9);
    EXPECT_LT((transport_vector(w, a) - b).magnitude(), 1e-10);
    const Vector9 target{kI * 2.0, ComplexOctonion::scalar(2.0)};
    const GeneratorWord w2 = spin9_transport(a, target, 1e-9);
    EXPECT_LT((transport_vector(w2, a) - target).magnitude(), 1e-10);
  }
}

TEST(Transport, RejectsMismatchedInput) {
  EXPECT_THROW(spin9_transport({1.0, {}}, {2.0, {}}, 1e-9), Error);
  EXPECT_THROW(spin9_transport({}, {1.0, {}}, 1e-9), Error);
  EXPECT_TRUE(spin9_transport({1.0, {}}, {1.0, {}}, 1e-9).empty());
}

TEST(Classify, BranchesOfExplicitMatrices) {
  EXPECT_EQ(classify(canonical_form(), kTol).branch, Branch::nonisotropic_vector);
  const HermMat3 p13 = congruence(permutation(0, 2), canonical_form());
  EXPECT_EQ(classify(p13, kTol).branch, Branch::isotropic_nonzero_vector);
  HermMat3 z;
  z.x1 = ComplexOctonion::unit(0) + kI * ComplexOctonion::unit(1);
  EXPECT_EQ(classify(z, kTol).branch, Branch::zero_vector);
  EXPECT_THROW(classify(HermMat3::identity(), kTol), Error);
}

TEST(Classify, CriteriaAgreeOnOrbitAndBranchSamples) {
  std::vector<HermMat3> pts = sample_orbit(3, 300);
  for (Branch b : {Branch::isotropic_nonzero_vector, Branch::zero_vector}) {
    const auto more = sample_branch(4, 50, b);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  for (const auto& a : pts) {
    const Classification c = classify(a, kTol);
    EXPECT_TRUE(c.consistent()) << branch_name(c.branch);
    EXPECT_EQ(c.vector_isotropic, c.branch != Branch::nonisotropic_vector);
  }
}

TEST(Classify, BranchNamesRoundTrip) {
  for (Branch b : {Branch::nonisotropic_vector, Branch::isotropic_nonzero_vector,
                   Branch::zero_vector})
    EXPECT_EQ(branch_from_name(branch_name(b)), b);
  EXPECT_THROW(branch_from_name("sideways"), Error);
}

TEST(Reduce, CanonicalInputGivesEmptyWord) {
  const ReductionTrace t = reduce_to_canonical(canonical_form(), kTol);
  EXPECT_TRUE(t.word.empty());
  EXPECT_EQ(t.residual, 0.0);
  EXPECT_EQ(t.final, canonical_form());
}

TEST(Reduce, PermutedCanonicalForm) {
  for (auto [i, j] : {std::pair{0, 2}, std::pair{0, 1}, std::pair{1, 2}}) {
    const HermMat3 a = congruence(permutation(i, j), canonical_form());
    const ReductionTrace t = reduce_to_canonical(a, kTol);
    EXPECT_LT(t.residual, 1e-10);
    EXPECT_TRUE(verify_trace(t, kTol).ok);
  }
}

TEST(Reduce, OrbitSamples) {
  for (const auto& a : sample_orbit(8, 200)) {
    const ReductionTrace t = reduce_to_canonical(a, kTol);
    EXPECT_LT(relative(t), 1e-8);
    const TraceCheck c = verify_trace(t, kTol);
    EXPECT_TRUE(c.ok);
    EXPECT_TRUE(c.letters_valid);
    EXPECT_LT(c.word_residual, 1e-8 * std::max(1.0, frobenius(a)));
  }
}

TEST(Reduce, TargetedBranchesFollowTheCaseAnalysis) {
  for (Branch b : {Branch::isotropic_nonzero_vector, Branch::zero_vector}) {
    for (const auto& a : sample_branch(12, 30, b)) {
      const ReductionTrace t = reduce_to_canonical(a, kTol);
      EXPECT_EQ(t.initial_branch, b);
      EXPECT_LT(relative(t), 1e-8);
      ASSERT_FALSE(t.steps.empty());
      EXPECT_EQ(t.steps.front().branch, b);
    }
  }
}

TEST(Reduce, StepInvariantsAfterH1) {
  for (const auto& a : sample_orbit(13, 100)) {
    const ReductionTrace t = reduce_to_canonical(a, kTol);
    for (const auto& s : t.steps) {
      if (s.label.rfind("h1", 0) != 0) continue;
      const double m = frobenius(s.matrix);
      EXPECT_LT(s.matrix.x3.magnitude(), 1e-9 * m);
      // (2,3) entry of the square: x1 conj(x2) type products vanish; one of
      // N(x1), N(x2) is zero and the other is not.
      const bool n1 = std::abs(norm(s.matrix.x1)) <= kTol.classify * m * m;
      const bool n2 = std::abs(norm(s.matrix.x2)) <= kTol.classify * m * m;
      EXPECT_NE(n1, n2);
      EXPECT_LT(frobenius(square(s.matrix)), 1e-9 * m * m);
    }
  }
}

TEST(Reduce, OrthogonalLettersAreDiscreteOrTheScaleConjugator) {
  for (const auto& a : sample_orbit(14, 100)) {
    const ReductionTrace t = reduce_to_canonical(a, kTol);
    for (const auto& s : t.steps)
      for (const auto& g : s.letters)
        if (const auto* o = std::get_if<Orth3Letter>(&g))
          EXPECT_TRUE(is_signed_permutation(o->m) || s.label == "w-conjugator") << s.label;
  }
}

TEST(Reduce, ScaleConjugatorIsOrthogonalAndNormalizes) {
  for (Complex w : {Complex(2.0), Complex(0.3, 0.4), Complex(-1.5, 0.2), Complex(1e-4)}) {
    const Eigen::Matrix3cd m = scale_conjugator(w);
    EXPECT_LT((m * m.transpose() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(frobenius(congruence(m, w * canonical_form()) - canonical_form()), 1e-9);
  }
}

TEST(Reduce, ScaledInputs) {
  for (Complex w : {Complex(3.0), Complex(0.0, 2.0), Complex(5e-7), Complex(1e7, 1e7)}) {
    const ReductionTrace t = reduce_to_canonical(w * canonical_form(), kTol);
    EXPECT_TRUE(verify_trace(t, kTol).ok) << w;
  }
}

TEST(Reduce, RejectsPointsOffTheCone) {
  try {
    reduce_to_canonical(HermMat3::diagonal(1.0, 2.0, 3.0), kTol);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_on_variety);
  }
}

TEST(Reduce, ResidualFailureCarriesTrace) {
  Tolerances strict = kTol;
  strict.accept = 1e-300;
  // The largest of a few samples needs a nontrivial word.
  const auto pts = sample_orbit(15, 10);
  const HermMat3 a = *std::max_element(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    return frobenius(x) < frobenius(y);
  });
  try {
    reduce_to_canonical(a, strict);
    FAIL() << "expected a residual failure";
  } catch (const ReductionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::residual_failure);
    EXPECT_FALSE(e.trace().steps.empty());
    EXPECT_GT(e.trace().residual, e.trace().bound);
  }
}

TEST(Reduce, DeterministicForFixedInput) {
  const HermMat3 a = sample_orbit(16, 1).front();
  const ReductionTrace t1 = reduce_to_canonical(a, kTol), t2 = reduce_to_canonical(a, kTol);
  EXPECT_EQ(t1.final, t2.final);
  EXPECT_EQ(t1.word.size(), t2.word.size());
}

TEST(Sampling, SeededAndOnTheCone) {
  const auto s1 = sample_orbit(21, 20), s2 = sample_orbit(21, 20), s3 = sample_orbit(22, 20);
  EXPECT_EQ(s1, s2);
  EXPECT_NE(s1, s3);
  for (const auto& a : s1) EXPECT_TRUE(cone_membership(a, kTol.classify).member);
}

TEST(Sampling, BranchSamplesHitTheirBranch) {
  for (Branch b : {Branch::nonisotropic_vector, Branch::isotropic_nonzero_vector,
                   Branch::zero_vector})
    for (const auto& a : sample_branch(23, 10, b)) EXPECT_EQ(classify(a, kTol).branch, b);
}

TEST(RealModel, EmbeddingIsAJordanHomomorphism) {
  const auto xs = sample_real_orbit(31, 20);
  Rng rng(31);
  for (const auto& x : xs) {
    RealHermMat3 y;
    for (int k = 0; k < 3; ++k) y.diag[k] = rng.uniform(-1, 1);
    for (int k = 0; k < 8; ++k) {
      y.x1[k] = rng.uniform(-1, 1);
      y.x2[k] = rng.uniform(-1, 1);
      y.x3[k] = rng.uniform(-1, 1);
    }
    // Real model product through full octonionic matrices.
    const OctMat3 xy = matmul(to_full(x), to_full(y)), yx = matmul(to_full(y), to_full(x));
    const RealHermMat3 p = extract(jordan_product(embed(x), embed(y)), 1e-9);
    const OctMat3 pf = to_full(p);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        EXPECT_LT((pf[i][k] - 0.5 * (xy[i][k] + yx[i][k])).magnitude(), 1e-12);
  }
}

TEST(RealModel, EmbedExtractRoundTrip) {
  for (const auto& x : sample_real_orbit(32, 10)) {
    const RealHermMat3 y = extract(embed(x), 1e-12);
    EXPECT_EQ(y.diag, x.diag);
    EXPECT_EQ(y.x1, x.x1);
    EXPECT_EQ(y.x3, x.x3);
  }
  HermMat3 complexish = embed(real_canonical_form());
  complexish.x3[2] = kI;
  EXPECT_THROW(extract(complexish, 1e-9), Error);
}

TEST(RealModel, CanonicalFormEmbedsOnTheCone) {
  const HermMat3 c = embed(real_canonical_form());
  EXPECT_TRUE(cone_membership(c, 1e-12).member);
  EXPECT_EQ(c.diag[0], Complex(-1.0));
  EXPECT_EQ(c.x1[0], kI);
  const ReductionTrace t = reduce_real(real_canonical_form(), kTol);
  EXPECT_EQ(t.residual, 0.0);
  EXPECT_TRUE(t.word.empty());
}

TEST(RealModel, BoostsNormalizeBothSigns) {
  for (double x : {2.0, 0.25, -3.0, -0.5}) {
    const Eigen::Matrix3cd m = real_scale_conjugator(x);
    const Eigen::Matrix3cd i1 = Eigen::Vector3cd(-1.0, 1.0, 1.0).asDiagonal();
    EXPECT_LT((m.transpose() * i1 * m - i1).cwiseAbs().maxCoeff(), 1e-12);
    RealHermMat3 start;
    const double r = std::abs(x);
    start.diag = {-r, r, 0.0};
    start.x1[0] = x;
    const HermMat3 out = act(SpinGenerator{Orth12Letter{m}}, embed(start));
    EXPECT_LT(frobenius(out - embed(real_canonical_form())), 1e-12) << x;
  }
}

TEST(RealModel, OrbitSamplesReduceWithRealLetters) {
  for (const auto& x : sample_real_orbit(33, 200)) {
    EXPECT_LT(x.diag[0], 0.0);
    const ReductionTrace t = reduce_real(x, kTol);
    EXPECT_EQ(t.model, Model::real);
    EXPECT_TRUE(verify_trace(t, kTol).ok);
    EXPECT_LT(relative(t), 1e-8);
  }
}

TEST(RealModel, OppositeSheetIsRejected) {
  RealHermMat3 x = real_canonical_form();
  x.diag = {1.0, -1.0, 0.0};
  x.x1[0] = 1.0;
  ASSERT_TRUE(cone_membership(embed(x), 1e-12).member);
  try {
    reduce_real(x, kTol);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_on_variety);
  }
}
