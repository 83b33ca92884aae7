#include "octf4/jordan.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "octf4/error.hpp"

namespace octf4 {

HermMat3 HermMat3::identity() { return diagonal(1.0, 1.0, 1.0); }

HermMat3 HermMat3::diagonal(Complex a, Complex b, Complex c) {
  HermMat3 m;
  m.diag = {a, b, c};
  return m;
}

HermMat3& HermMat3::operator+=(const HermMat3& o) {
  for (int k = 0; k < 3; ++k) diag[k] += o.diag[k];
  x1 += o.x1;
  x2 += o.x2;
  x3 += o.x3;
  return *this;
}

HermMat3& HermMat3::operator-=(const HermMat3& o) {
  for (int k = 0; k < 3; ++k) diag[k] -= o.diag[k];
  x1 -= o.x1;
  x2 -= o.x2;
  x3 -= o.x3;
  return *this;
}

HermMat3& HermMat3::operator*=(Complex c) {
  for (auto& d : diag) d *= c;
  x1 *= c;
  x2 *= c;
  x3 *= c;
  return *this;
}

OctMat3 to_full(const HermMat3& a) {
  OctMat3 m;
  for (int k = 0; k < 3; ++k) m[k][k] = ComplexOctonion::scalar(a.diag[k]);
  m[1][0] = a.x1;
  m[0][1] = conj(a.x1);
  m[2][0] = a.x2;
  m[0][2] = conj(a.x2);
  m[1][2] = a.x3;
  m[2][1] = conj(a.x3);
  return m;
}

HermMat3 from_full(const OctMat3& m) {
  HermMat3 a;
  for (int k = 0; k < 3; ++k) a.diag[k] = m[k][k].re();
  a.x1 = m[1][0];
  a.x2 = m[2][0];
  a.x3 = m[1][2];
  return a;
}

OctMat3 matmul(const OctMat3& m, const OctMat3& n) {
  OctMat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += m[i][k] * n[k][j];
  return out;
}

double hermiticity_defect(const OctMat3& m) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, (m[i][j] - conj(m[j][i])).magnitude());
  return worst;
}

JordanVector to_coords(const HermMat3& a) {
  JordanVector v;
  for (int k = 0; k < 3; ++k) v(k) = a.diag[k];
  for (int k = 0; k < 8; ++k) {
    v(3 + k) = a.x1[k];
    v(11 + k) = a.x2[k];
    v(19 + k) = a.x3[k];
  }
  return v;
}

HermMat3 from_coords(const JordanVector& v) {
  HermMat3 a;
  for (int k = 0; k < 3; ++k) a.diag[k] = v(k);
  for (int k = 0; k < 8; ++k) {
    a.x1[k] = v(3 + k);
    a.x2[k] = v(11 + k);
    a.x3[k] = v(19 + k);
  }
  return a;
}

HermMat3 basis_element(int k) {
  JordanVector v = JordanVector::Zero();
  v(k) = 1.0;
  return from_coords(v);
}

double frobenius(const HermMat3& a) { return to_coords(a).norm(); }

HermMat3 jordan_product(const HermMat3& a, const HermMat3& b) {
  const OctMat3 fa = to_full(a), fb = to_full(b);
  const OctMat3 ab = matmul(fa, fb), ba = matmul(fb, fa);
  HermMat3 out = from_full(ab) + from_full(ba);
  out *= 0.5;
  return out;
}

HermMat3 square(const HermMat3& a) { return jordan_product(a, a); }

Complex trace(const HermMat3& a) { return a.diag[0] + a.diag[1] + a.diag[2]; }

Eigen::MatrixXcd jordan_multiplication_matrix(const HermMat3& a) {
  Eigen::MatrixXcd m(kJordanDim, kJordanDim);
  for (int k = 0; k < kJordanDim; ++k) m.col(k) = to_coords(jordan_product(a, basis_element(k)));
  return m;
}

Decomposition decompose(const HermMat3& a) {
  Decomposition d;
  d.trace_part = trace(a) / 3.0;
  d.t = 0.5 * (a.diag[1] + a.diag[2]) - d.trace_part;
  d.vector.s = 0.5 * (a.diag[1] - a.diag[2]);
  d.vector.x = a.x3;
  d.x1 = a.x1;
  d.x2 = a.x2;
  return d;
}

HermMat3 recompose(const Decomposition& d) {
  HermMat3 a;
  a.diag = {-2.0 * d.t + d.trace_part, d.t + d.vector.s + d.trace_part,
            d.t - d.vector.s + d.trace_part};
  a.x1 = d.x1;
  a.x2 = d.x2;
  a.x3 = d.vector.x;
  return a;
}

HermMat3 canonical_form() {
  const Complex i(0.0, 1.0);
  HermMat3 c = HermMat3::diagonal(i, -i, 0.0);
  c.x1 = ComplexOctonion::scalar(1.0);
  return c;
}

ConeReport cone_membership(const HermMat3& a, double tol) {
  ConeReport r;
  r.norm = frobenius(a);
  r.square_residual = frobenius(square(a));
  r.trace_residual = std::abs(trace(a));
  r.member = r.norm > tol && r.square_residual <= tol * r.norm * r.norm &&
             r.trace_residual <= tol * r.norm;
  return r;
}

KernelResult differential_kernel(const HermMat3& a, double cone_tol, double rank_tol) {
  if (!cone_membership(a, cone_tol).member)
    throw Error(ErrorCode::not_on_variety, "differential_kernel: not on the variety");

  // Trace-free basis: diag(1,0,-1), diag(0,1,-1) and the 24 off-diagonal coordinates.
  constexpr int kTraceFree = kJordanDim - 1;
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(kJordanDim, kTraceFree);
  basis(0, 0) = 1.0;
  basis(2, 0) = -1.0;
  basis(1, 1) = 1.0;
  basis(2, 1) = -1.0;
  for (int k = 0; k < 24; ++k) basis(3 + k, 2 + k) = 1.0;

  const Eigen::MatrixXcd map = jordan_multiplication_matrix(a) * basis;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(map, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();

  KernelResult out;
  out.singular_values = sv;
  const double cutoff = rank_tol * sv(0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  out.dimension = kTraceFree - rank;

  const double smallest_kept = rank > 0 ? sv(rank - 1) : 0.0;
  const double largest_dropped = rank < sv.size() ? sv(rank) : 0.0;
  out.gap_ratio = largest_dropped > 0.0 ? smallest_kept / largest_dropped
                                        : std::numeric_limits<double>::infinity();

  out.basis = basis * svd.matrixV().rightCols(out.dimension);
  for (int c = 0; c < out.dimension; ++c) {
    const JordanVector k = out.basis.col(c);
    const double res = frobenius(jordan_product(a, from_coords(k))) / k.norm();
    out.max_residual = std::max(out.max_residual, res);
  }
  return out;
}

}  // namespace octf4
