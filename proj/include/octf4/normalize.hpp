#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octf4/config.hpp"
#include "octf4/error.hpp"
#include "octf4/jordan.hpp"
#include "octf4/spin.hpp"

namespace octf4 {

enum class Branch { nonisotropic_vector, isotropic_nonzero_vector, zero_vector };

std::string branch_name(Branch b);
Branch branch_from_name(const std::string& name);

struct Classification {
  Branch branch = Branch::nonisotropic_vector;
  Complex t{};
  Complex vector_quadratic{};  // s^2 + N(x3)
  double scale = 0.0;          // |A|
  // The three criteria that must agree on the cone: s^2 + N(x3) ~ 0, t ~ 0,
  // N(x1) ~ 0 and N(x2) ~ 0.
  bool vector_isotropic = false;
  bool t_vanishes = false;
  bool spinor_isotropic = false;
  bool consistent() const {
    return vector_isotropic == t_vanishes && t_vanishes == spinor_isotropic;
  }
};

/// Case label of a cone element. Throws Error(not_on_variety) off the cone.
Classification classify(const HermMat3& a, const Tolerances& tol);

/// Word of Spin9 letters whose vector action maps a to b (Q(a) = Q(b), both
/// nonzero), built from at most four mirror reflections.
GeneratorWord spin9_transport(const Vector9& a, const Vector9& b, double tol);
/// Vector action of a word on C + O, read through the vector block.
Vector9 transport_vector(const GeneratorWord& w, const Vector9& v);

enum class Model { complex, real };

struct ReductionStep {
  std::string label;
  Branch branch = Branch::nonisotropic_vector;
  GeneratorWord letters;  // product order, like the full word
  HermMat3 matrix;        // state after this step
};

struct ReductionTrace {
  Model model = Model::complex;
  HermMat3 input;
  // realize(word)(scale * input) = final. Stays 1 unless the last scale was degenerate.
  Complex scale{1.0};
  Branch initial_branch = Branch::nonisotropic_vector;
  std::vector<ReductionStep> steps;  // application order
  GeneratorWord word;
  HermMat3 final;
  HermMat3 target;
  double residual = 0.0;  // |final - target|
  double bound = 0.0;     // accepted residual
};

class ReductionError : public Error {
 public:
  ReductionError(const std::string& what, ReductionTrace trace)
      : Error(ErrorCode::residual_failure, what), trace_(std::move(trace)) {}
  const ReductionTrace& trace() const { return trace_; }

 private:
  ReductionTrace trace_;
};

/// Finds g in F4 with g A = canonical_form().
ReductionTrace reduce_to_canonical(const HermMat3& a, const Tolerances& tol);

/// Orthogonal matrix carrying [[iw, w, 0], [w, -iw, 0], [0, 0, 0]] to the canonical form.
Eigen::Matrix3cd scale_conjugator(Complex w);
Eigen::Matrix3cd permutation(int i, int j);

struct TraceCheck {
  double word_residual = 0.0;    // |realize(word)(scale * input) - final|
  double target_residual = 0.0;  // |realize(word)(scale * input) - target|
  bool letters_valid = true;
  bool ok = false;
};

/// Re-verifies a trace from its input, word and target only.
TraceCheck verify_trace(const ReductionTrace& t, const Tolerances& tol);

// -- Real form ----------------------------------------------------------------

using RealOctonion = std::array<double, 8>;

/// Element of the real model
///
///   [ r1        x1        x2 ]
///   [ -conj x1  r2        x3 ]
///   [ -conj x2  conj x3   r3 ]
///
/// with real r_i and real octonions x_i (so that I1 conj(X)^T I1 = X).
struct RealHermMat3 {
  std::array<double, 3> diag{};
  RealOctonion x1{}, x2{}, x3{};
};

/// X -> D X D^-1 with D = diag(i,1,1); a Jordan algebra embedding.
HermMat3 embed(const RealHermMat3& x);
/// Inverse of embed; throws Error(invalid_argument) off the image.
RealHermMat3 extract(const HermMat3& a, double tol);
/// [[-1, 1, 0], [-1, 1, 0], [0, 0, 0]]
RealHermMat3 real_canonical_form();
/// Entries of X as a full octonionic matrix.
OctMat3 to_full(const RealHermMat3& x);

/// Boost carrying x * canonical (x > 0) or the r = -x form (x < 0) to the real canonical form.
Eigen::Matrix3cd real_scale_conjugator(double x);

/// Real analogue of reduce_to_canonical; every emitted letter has real
/// entries. Inputs on the opposite sheet of the real cone (top-left entry
/// positive, i.e. -1 times an orbit point) are rejected with not_on_variety.
ReductionTrace reduce_real(const RealHermMat3& x, const Tolerances& tol);

// -- Orbit sampling -------------------------------------------------------------

class Rng;

GeneratorWord random_word(Rng& rng, int length);
GeneratorWord random_spin_word(Rng& rng, int length);
GeneratorWord random_real_word(Rng& rng, int length);

/// n points realize(w)(canonical) for seeded random words w of the given length.
std::vector<HermMat3> sample_orbit(std::uint64_t seed, int n, int word_length = 6);
/// n orbit points whose classification is `branch`.
std::vector<HermMat3> sample_branch(std::uint64_t seed, int n, Branch branch);
/// n points of the real orbit of the real canonical form.
std::vector<RealHermMat3> sample_real_orbit(std::uint64_t seed, int n, int word_length = 6);

}  // namespace octf4
