#pragma once

#include <array>

#include <Eigen/Core>

#include "octf4/octonion.hpp"

namespace octf4 {

inline constexpr int kJordanDim = 27;
using JordanVector = Eigen::Matrix<Complex, kJordanDim, 1>;

/// Hermitian 3x3 matrix over the complexified octonions,
///
///   [ r1      conj(x1)  conj(x2) ]
///   [ x1      r2        x3       ]
///   [ x2      conj(x3)  r3       ]
///
/// Hermiticity is structural: only the lower-left copies are stored.
struct HermMat3 {
  std::array<Complex, 3> diag{};
  ComplexOctonion x1, x2, x3;

  static HermMat3 identity();
  static HermMat3 diagonal(Complex a, Complex b, Complex c);

  HermMat3& operator+=(const HermMat3& o);
  HermMat3& operator-=(const HermMat3& o);
  HermMat3& operator*=(Complex c);
  friend HermMat3 operator+(HermMat3 a, const HermMat3& b) { return a += b; }
  friend HermMat3 operator-(HermMat3 a, const HermMat3& b) { return a -= b; }
  friend HermMat3 operator*(Complex c, HermMat3 a) { return a *= c; }
  friend HermMat3 operator*(HermMat3 a, Complex c) { return a *= c; }
  friend bool operator==(const HermMat3&, const HermMat3&) = default;
};

/// General (not necessarily hermitian) 3x3 octonionic matrix.
using OctMat3 = std::array<std::array<ComplexOctonion, 3>, 3>;

OctMat3 to_full(const HermMat3& a);
/// Reads the hermitian coordinates from the diagonal and the lower triangle.
HermMat3 from_full(const OctMat3& m);
/// Entrywise product; each entry is sum_k m_ik n_kj with a single two-term product per summand.
OctMat3 matmul(const OctMat3& m, const OctMat3& n);
/// Largest coefficient magnitude of m - conj(m)^T.
double hermiticity_defect(const OctMat3& m);

/// Coordinates ordered r1, r2, r3, x1[0..7], x2[0..7], x3[0..7].
JordanVector to_coords(const HermMat3& a);
HermMat3 from_coords(const JordanVector& v);
HermMat3 basis_element(int k);

/// Frobenius norm over the 27 complex coordinates.
double frobenius(const HermMat3& a);

HermMat3 jordan_product(const HermMat3& a, const HermMat3& b);
HermMat3 square(const HermMat3& a);
Complex trace(const HermMat3& a);
/// 27x27 matrix of B -> A o B.
Eigen::MatrixXcd jordan_multiplication_matrix(const HermMat3& a);

/// [[s, x], [conj(x), -s]]
struct TraceZeroHermitian2 {
  Complex s{};
  ComplexOctonion x;

  Complex quadratic() const { return s * s + norm(x); }
};

/// A = diag(-2t, t, t) + spinor(x1, x2) + vector(s, x3) + trace_part * I.
struct Decomposition {
  Complex t{};
  ComplexOctonion x1, x2;
  TraceZeroHermitian2 vector;
  Complex trace_part{};
};

Decomposition decompose(const HermMat3& a);
HermMat3 recompose(const Decomposition& d);

/// [[i, 1, 0], [1, -i, 0], [0, 0, 0]]
HermMat3 canonical_form();

struct ConeReport {
  bool member = false;
  double square_residual = 0.0;  // |A^2|
  double trace_residual = 0.0;   // |tr A|
  double norm = 0.0;             // |A|
};

/// A^2 = 0, tr A = 0, A != 0, each relative to |A| with tolerance `tol`.
ConeReport cone_membership(const HermMat3& a, double tol);

struct KernelResult {
  int dimension = 0;
  Eigen::MatrixXcd basis;  // 27 x dimension, columns in Jordan coordinates
  Eigen::VectorXd singular_values;
  // Smallest retained singular value over the largest discarded one.
  double gap_ratio = 0.0;
  double max_residual = 0.0;  // max |A o K| / |K| over basis columns
};

/// Kernel of B -> A o B on the trace-free subspace. Singular values below
/// rank_tol * sigma_max count as zero. Throws Error(not_on_variety) when A
/// fails cone_membership(A, cone_tol).
KernelResult differential_kernel(const HermMat3& a, double cone_tol, double rank_tol = 1e-7);

}  // namespace octf4
