#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace octf4 {

using Complex = std::complex<double>;
using LeftMulOperator = Eigen::Matrix<Complex, 8, 8>;

/// Element of the complexified octonions, stored as 8 complex coefficients
/// over the basis e0 = 1, e1, ..., e7 of the real octonions.
class ComplexOctonion {
 public:
  ComplexOctonion() { coeffs_.fill(Complex(0.0)); }
  explicit ComplexOctonion(const std::array<Complex, 8>& coeffs) : coeffs_(coeffs) {}

  /// The scalar c * e0.
  static ComplexOctonion scalar(Complex c);
  /// The basis element e_k, k in [0, 8).
  static ComplexOctonion unit(int k);

  Complex operator[](int k) const { return coeffs_[k]; }
  Complex& operator[](int k) { return coeffs_[k]; }
  const std::array<Complex, 8>& coeffs() const { return coeffs_; }

  /// The e0 coefficient.
  Complex re() const { return coeffs_[0]; }
  /// Sum of |c_k|^2; used only for tolerances, it is not the algebra norm.
  double magnitude2() const;
  double magnitude() const;

  ComplexOctonion& operator+=(const ComplexOctonion& o);
  ComplexOctonion& operator-=(const ComplexOctonion& o);
  ComplexOctonion& operator*=(Complex c);

  friend ComplexOctonion operator+(ComplexOctonion a, const ComplexOctonion& b) { return a += b; }
  friend ComplexOctonion operator-(ComplexOctonion a, const ComplexOctonion& b) { return a -= b; }
  friend ComplexOctonion operator-(ComplexOctonion a) { return a *= Complex(-1.0); }
  friend ComplexOctonion operator*(ComplexOctonion a, Complex c) { return a *= c; }
  friend ComplexOctonion operator*(Complex c, ComplexOctonion a) { return a *= c; }
  friend ComplexOctonion operator*(ComplexOctonion a, double c) { return a *= Complex(c); }
  friend ComplexOctonion operator*(double c, ComplexOctonion a) { return a *= Complex(c); }
  /// Octonion product.
  friend ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b);

  friend bool operator==(const ComplexOctonion&, const ComplexOctonion&) = default;

 private:
  std::array<Complex, 8> coeffs_;
};

/// Signed permutation table of the basis products: e_i e_j = sign(i,j) e_{index(i,j)}.
struct MultiplicationTable {
  std::array<std::array<int, 8>, 8> index;
  std::array<std::array<int, 8>, 8> sign;
};

/// The table produced by Cayley-Dickson doubling R -> C -> H -> O.
const MultiplicationTable& multiplication_table();

ComplexOctonion multiply(const ComplexOctonion& a, const ComplexOctonion& b);
ComplexOctonion conj(const ComplexOctonion& a);
/// Complex-valued quadratic form N(a) = a conj(a).
Complex norm(const ComplexOctonion& a);
/// <x,y> = N(x+y) - N(x) - N(y).
Complex bilinear(const ComplexOctonion& x, const ComplexOctonion& y);
/// (uv)w - u(vw)
ComplexOctonion associator(const ComplexOctonion& u, const ComplexOctonion& v,
                           const ComplexOctonion& w);
/// Matrix of v -> u v in the coordinate basis.
LeftMulOperator left_mul_matrix(const ComplexOctonion& u);

Eigen::Matrix<Complex, 8, 1> to_vector(const ComplexOctonion& a);
ComplexOctonion from_vector(const Eigen::Matrix<Complex, 8, 1>& v);

}  // namespace octf4
