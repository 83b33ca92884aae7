#include "octf4/octonion.hpp"

#include <cmath>
#include <vector>

namespace octf4 {

namespace {

using RealVec = std::vector<double>;

RealVec cd_conj(const RealVec& a) {
  RealVec r(a.size());
  r[0] = a[0];
  for (std::size_t k = 1; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), applied recursively down to R.
RealVec cd_multiply(const RealVec& x, const RealVec& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  RealVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  RealVec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  RealVec ac = cd_multiply(a, c);
  RealVec db = cd_multiply(cd_conj(d), b);
  RealVec da = cd_multiply(d, a);
  RealVec bc = cd_multiply(b, cd_conj(c));
  RealVec out(n);
  for (std::size_t k = 0; k < h; ++k) {
    out[k] = ac[k] - db[k];
    out[h + k] = da[k] + bc[k];
  }
  return out;
}

MultiplicationTable build_table() {
  MultiplicationTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      RealVec ei(8, 0.0), ej(8, 0.0);
      ei[i] = 1.0;
      ej[j] = 1.0;
      RealVec p = cd_multiply(ei, ej);
      for (int k = 0; k < 8; ++k) {
        if (p[k] != 0.0) {
          t.index[i][j] = k;
          t.sign[i][j] = p[k] > 0 ? 1 : -1;
        }
      }
    }
  }
  return t;
}

}  // namespace

const MultiplicationTable& multiplication_table() {
  static const MultiplicationTable table = build_table();
  return table;
}

ComplexOctonion ComplexOctonion::scalar(Complex c) {
  ComplexOctonion o;
  o.coeffs_[0] = c;
  return o;
}

ComplexOctonion ComplexOctonion::unit(int k) {
  ComplexOctonion o;
  o.coeffs_[k] = Complex(1.0);
  return o;
}

double ComplexOctonion::magnitude2() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double ComplexOctonion::magnitude() const { return std::sqrt(magnitude2()); }

ComplexOctonion& ComplexOctonion::operator+=(const ComplexOctonion& o) {
  for (int k = 0; k < 8; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ComplexOctonion& ComplexOctonion::operator-=(const ComplexOctonion& o) {
  for (int k = 0; k < 8; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

ComplexOctonion& ComplexOctonion::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b) {
  const auto& t = multiplication_table();
  ComplexOctonion out;
  for (int i = 0; i < 8; ++i) {
    if (a.coeffs_[i] == Complex(0.0)) continue;
    for (int j = 0; j < 8; ++j) {
      const Complex p = a.coeffs_[i] * b.coeffs_[j];
      if (t.sign[i][j] > 0)
        out.coeffs_[t.index[i][j]] += p;
      else
        out.coeffs_[t.index[i][j]] -= p;
    }
  }
  return out;
}

ComplexOctonion multiply(const ComplexOctonion& a, const ComplexOctonion& b) { return a * b; }

ComplexOctonion conj(const ComplexOctonion& a) {
  ComplexOctonion r = a;
  for (int k = 1; k < 8; ++k) r[k] = -r[k];
  return r;
}

Complex norm(const ComplexOctonion& a) {
  // The basis is orthonormal, so a conj(a) = sum of squared coefficients.
  Complex s(0.0);
  for (int k = 0; k < 8; ++k) s += a[k] * a[k];
  return s;
}

Complex bilinear(const ComplexOctonion& x, const ComplexOctonion& y) {
  Complex s(0.0);
  for (int k = 0; k < 8; ++k) s += x[k] * y[k];
  return 2.0 * s;
}

ComplexOctonion associator(const ComplexOctonion& u, const ComplexOctonion& v,
                           const ComplexOctonion& w) {
  return (u * v) * w - u * (v * w);
}

LeftMulOperator left_mul_matrix(const ComplexOctonion& u) {
  LeftMulOperator m;
  for (int j = 0; j < 8; ++j) {
    const ComplexOctonion col = u * ComplexOctonion::unit(j);
    for (int i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

Eigen::Matrix<Complex, 8, 1> to_vector(const ComplexOctonion& a) {
  Eigen::Matrix<Complex, 8, 1> v;
  for (int k = 0; k < 8; ++k) v(k) = a[k];
  return v;
}

ComplexOctonion from_vector(const Eigen::Matrix<Complex, 8, 1>& v) {
  ComplexOctonion a;
  for (int k = 0; k < 8; ++k) a[k] = v(k);
  return a;
}

}  // namespace octf4
