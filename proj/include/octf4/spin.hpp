#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "octf4/error.hpp"
#include "octf4/jordan.hpp"
#include "octf4/octonion.hpp"

namespace octf4 {

/// Element (r, u) of C + O with quadratic form r^2 + N(u).
struct Vector9 {
  Complex r{};
  ComplexOctonion u;

  Complex quadratic() const { return r * r + norm(u); }
  double magnitude() const { return std::sqrt(std::norm(r) + u.magnitude2()); }

  friend Vector9 operator+(const Vector9& a, const Vector9& b) { return {a.r + b.r, a.u + b.u}; }
  friend Vector9 operator-(const Vector9& a, const Vector9& b) { return {a.r - b.r, a.u - b.u}; }
  friend Vector9 operator*(Complex c, const Vector9& a) { return {c * a.r, c * a.u}; }
};

/// Polarization of the quadratic form: <a,b> = Q(a+b) - Q(a) - Q(b).
Complex bilinear(const Vector9& a, const Vector9& b);
/// Reflection v -> v - <v,c>/Q(c) c. Requires Q(c) != 0.
Vector9 reflect(const Vector9& v, const Vector9& c);

// -- Matrices in End(O^2) (x) C --------------------------------------------

using SpinMatrix = Eigen::Matrix<Complex, 16, 16>;

/// A (x) i when times_i is set, A (x) 1 otherwise.
struct TaggedSpinMatrix {
  SpinMatrix m;
  bool times_i = false;
};
TaggedSpinMatrix operator*(const TaggedSpinMatrix& a, const TaggedSpinMatrix& b);

/// [[0, L_u], [-L_conj(u), 0]]
SpinMatrix mu(const ComplexOctonion& u);
/// [[r, L_u], [L_conj(u), -r]] (x) i
TaggedSpinMatrix kappa(const Vector9& v);
/// g_{r,u} = [[r, -L_u], [L_conj(u), r]]
SpinMatrix spin9_matrix(Complex r, const ComplexOctonion& u);
/// diag(L_u L_conj(v), L_conj(u) L_v)
SpinMatrix spin8_matrix(const ComplexOctonion& u, const ComplexOctonion& v);

// -- Generator letters -------------------------------------------------------

/// g_{r,u} with r^2 + N(u) = 1.
struct Spin9Letter {
  Complex r{};
  ComplexOctonion u;
};

/// diag(L_u L_conj(v), L_conj(u) L_v) with N(u) = N(v) = 1.
struct Spin8Letter {
  ComplexOctonion u, v;
};

/// A -> M A M^T with M M^T = I.
struct Orth3Letter {
  Eigen::Matrix3cd m;
};

/// Real O(1,2) letter (M^T I1 M = I1, I1 = diag(-1,1,1)). Acts on the real
/// model by X -> M X M^-1 and on the complex algebra through the embedding
/// X -> D X D^-1, D = diag(i,1,1).
struct Orth12Letter {
  Eigen::Matrix3cd m;
};

using SpinGenerator = std::variant<Spin9Letter, Spin8Letter, Orth3Letter, Orth12Letter>;

/// Letters in group-product order: {l1, ..., ln} is the element l1 * ... * ln,
/// so ln acts first.
using GeneratorWord = std::vector<SpinGenerator>;

std::string kind_name(const SpinGenerator& g);
bool is_spin(const SpinGenerator& g);

/// Throws Error(invalid_argument) naming the letter when its defining
/// constraint is violated by more than tol.
void validate(const SpinGenerator& g, double tol);
void validate(const GeneratorWord& w, double tol);

/// Unit letter from u with r = +-sqrt(1 - N(u)) (principal root, sign by `negate_r`).
Spin9Letter spin9_from(const ComplexOctonion& u, bool negate_r = false);

TraceZeroHermitian2 xi_vector(const SpinGenerator& g, const TraceZeroHermitian2& v);
std::pair<ComplexOctonion, ComplexOctonion> xi_spinor(const SpinGenerator& g,
                                                      const ComplexOctonion& x1,
                                                      const ComplexOctonion& x2);

/// Blockwise action of one letter.
HermMat3 act(const SpinGenerator& g, const HermMat3& a);
/// Action of a word, last letter first.
HermMat3 act(const GeneratorWord& w, const HermMat3& a);

/// Conjugation A -> M A M^T by a complex scalar 3x3 matrix.
HermMat3 congruence(const Eigen::Matrix3cd& m, const HermMat3& a);
/// D M D^-1 with D = diag(i,1,1).
Eigen::Matrix3cd complexify_real_model(const Eigen::Matrix3cd& m);

/// Dense 27x27 matrix acting on Jordan coordinates.
class F4Element {
 public:
  F4Element() : matrix_(Eigen::MatrixXcd::Identity(kJordanDim, kJordanDim)) {}
  explicit F4Element(Eigen::MatrixXcd m) : matrix_(std::move(m)) {}

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  HermMat3 operator()(const HermMat3& a) const;
  friend F4Element operator*(const F4Element& a, const F4Element& b) {
    return F4Element(a.matrix_ * b.matrix_);
  }

 private:
  Eigen::MatrixXcd matrix_;
};

F4Element realize(const SpinGenerator& g, double tol);
/// Product of the letter realizations in word order.
F4Element realize(const GeneratorWord& w, double tol);

struct OracleResult {
  HermMat3 value;            // (G A) G^-1
  HermMat3 other_bracketing;  // G (A G^-1)
  double bracketing_gap = 0.0;
  double hermiticity_defect = 0.0;
};

/// G_{r,u} A G_{r,u}^-1 with G_{r,u} = [[1,0,0],[0,r,-u],[0,conj(u),r]],
/// computed by octonionic matrix products. Throws when r^2 + N(u) != 1.
OracleResult conjugation_oracle(Complex r, const ComplexOctonion& u, const HermMat3& a,
                                double tol);

}  // namespace octf4
