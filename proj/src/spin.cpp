#include "octf4/spin.hpp"

#include <sstream>

#include "octf4/error.hpp"

namespace octf4 {

namespace {

const Complex kI(0.0, 1.0);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Eigen::Matrix3cd i1() { return Eigen::Vector3cd(-1.0, 1.0, 1.0).asDiagonal(); }

bool has_imaginary_part(const Eigen::Matrix3cd& m, double tol) {
  return m.imag().cwiseAbs().maxCoeff() > tol;
}

}  // namespace

Complex bilinear(const Vector9& a, const Vector9& b) {
  return 2.0 * a.r * b.r + bilinear(a.u, b.u);
}

Vector9 reflect(const Vector9& v, const Vector9& c) {
  const Complex q = c.quadratic();
  if (q == Complex(0.0)) throw Error(ErrorCode::invalid_argument, "reflect: isotropic mirror");
  return v - (bilinear(v, c) / q) * c;
}

TaggedSpinMatrix operator*(const TaggedSpinMatrix& a, const TaggedSpinMatrix& b) {
  TaggedSpinMatrix out;
  out.m = a.m * b.m;
  out.times_i = a.times_i != b.times_i;
  if (a.times_i && b.times_i) out.m = -out.m;  // i * i = -1
  return out;
}

SpinMatrix mu(const ComplexOctonion& u) {
  SpinMatrix m = SpinMatrix::Zero();
  m.block<8, 8>(0, 8) = left_mul_matrix(u);
  m.block<8, 8>(8, 0) = -left_mul_matrix(conj(u));
  return m;
}

TaggedSpinMatrix kappa(const Vector9& v) {
  TaggedSpinMatrix k;
  k.m = SpinMatrix::Zero();
  k.m.block<8, 8>(0, 0) = v.r * LeftMulOperator::Identity();
  k.m.block<8, 8>(0, 8) = left_mul_matrix(v.u);
  k.m.block<8, 8>(8, 0) = left_mul_matrix(conj(v.u));
  k.m.block<8, 8>(8, 8) = -v.r * LeftMulOperator::Identity();
  k.times_i = true;
  return k;
}

SpinMatrix spin9_matrix(Complex r, const ComplexOctonion& u) {
  SpinMatrix m = SpinMatrix::Zero();
  m.block<8, 8>(0, 0) = r * LeftMulOperator::Identity();
  m.block<8, 8>(0, 8) = -left_mul_matrix(u);
  m.block<8, 8>(8, 0) = left_mul_matrix(conj(u));
  m.block<8, 8>(8, 8) = r * LeftMulOperator::Identity();
  return m;
}

SpinMatrix spin8_matrix(const ComplexOctonion& u, const ComplexOctonion& v) {
  SpinMatrix m = SpinMatrix::Zero();
  m.block<8, 8>(0, 0) = left_mul_matrix(u) * left_mul_matrix(conj(v));
  m.block<8, 8>(8, 8) = left_mul_matrix(conj(u)) * left_mul_matrix(v);
  return m;
}

std::string kind_name(const SpinGenerator& g) {
  return std::visit(overloaded{[](const Spin9Letter&) { return std::string("spin9"); },
                               [](const Spin8Letter&) { return std::string("spin8"); },
                               [](const Orth3Letter&) { return std::string("orth3"); },
                               [](const Orth12Letter&) { return std::string("orth12"); }},
                    g);
}

bool is_spin(const SpinGenerator& g) {
  return std::holds_alternative<Spin9Letter>(g) || std::holds_alternative<Spin8Letter>(g);
}

void validate(const SpinGenerator& g, double tol) {
  std::ostringstream why;
  std::visit(overloaded{
                 [&](const Spin9Letter& l) {
                   const double d = std::abs(l.r * l.r + norm(l.u) - 1.0);
                   if (d > tol) why << "r^2 + N(u) - 1 = " << d;
                 },
                 [&](const Spin8Letter& l) {
                   const double du = std::abs(norm(l.u) - 1.0), dv = std::abs(norm(l.v) - 1.0);
                   if (du > tol || dv > tol) why << "N(u) - 1 = " << du << ", N(v) - 1 = " << dv;
                 },
                 [&](const Orth3Letter& l) {
                   const double d =
                       (l.m * l.m.transpose() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
                   if (d > tol) why << "|M M^T - I| = " << d;
                 },
                 [&](const Orth12Letter& l) {
                   const double d = (l.m.transpose() * i1() * l.m - i1()).cwiseAbs().maxCoeff();
                   if (d > tol) why << "|M^T I1 M - I1| = " << d;
                   if (has_imaginary_part(l.m, tol)) why << " complex entries";
                 }},
             g);
  if (!why.str().empty())
    throw Error(ErrorCode::invalid_argument, kind_name(g) + " letter violates its constraint: " +
                                                 why.str());
}

void validate(const GeneratorWord& w, double tol) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    try {
      validate(w[k], tol);
    } catch (const Error& e) {
      throw Error(e.code(), "letter " + std::to_string(k) + ": " + e.what());
    }
  }
}

Spin9Letter spin9_from(const ComplexOctonion& u, bool negate_r) {
  Complex r = std::sqrt(1.0 - norm(u));
  if (negate_r) r = -r;
  return {r, u};
}

TraceZeroHermitian2 xi_vector(const SpinGenerator& g, const TraceZeroHermitian2& v) {
  if (const auto* l = std::get_if<Spin9Letter>(&g)) {
    const Complex r = l->r;
    const ComplexOctonion& u = l->u;
    TraceZeroHermitian2 out;
    out.s = v.s * (r * r - norm(u)) - r * bilinear(v.x, u);
    out.x = (2.0 * r * v.s) * u + (r * r) * v.x - (u * conj(v.x)) * u;
    return out;
  }
  if (const auto* l = std::get_if<Spin8Letter>(&g)) {
    const ComplexOctonion vb = conj(l->v);
    TraceZeroHermitian2 out;
    out.s = v.s;
    out.x = (l->u * ((vb * v.x) * vb)) * l->u;
    return out;
  }
  throw Error(ErrorCode::invalid_argument, "xi_vector: " + kind_name(g) + " is not a spin letter");
}

std::pair<ComplexOctonion, ComplexOctonion> xi_spinor(const SpinGenerator& g,
                                                      const ComplexOctonion& x1,
                                                      const ComplexOctonion& x2) {
  if (const auto* l = std::get_if<Spin9Letter>(&g))
    return {l->r * x1 - l->u * x2, conj(l->u) * x1 + l->r * x2};
  if (const auto* l = std::get_if<Spin8Letter>(&g))
    return {l->u * (conj(l->v) * x1), conj(l->u) * (l->v * x2)};
  throw Error(ErrorCode::invalid_argument, "xi_spinor: " + kind_name(g) + " is not a spin letter");
}

HermMat3 congruence(const Eigen::Matrix3cd& m, const HermMat3& a) {
  const OctMat3 full = to_full(a);
  OctMat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const Complex c = m(i, k) * m(j, l);
          if (c != Complex(0.0)) out[i][j] += c * full[k][l];
        }
  return from_full(out);
}

Eigen::Matrix3cd complexify_real_model(const Eigen::Matrix3cd& m) {
  const Eigen::Matrix3cd d = Eigen::Vector3cd(kI, 1.0, 1.0).asDiagonal();
  const Eigen::Matrix3cd dinv = Eigen::Vector3cd(-kI, 1.0, 1.0).asDiagonal();
  return d * m * dinv;
}

HermMat3 act(const SpinGenerator& g, const HermMat3& a) {
  if (const auto* l = std::get_if<Orth3Letter>(&g)) return congruence(l->m, a);
  if (const auto* l = std::get_if<Orth12Letter>(&g))
    return congruence(complexify_real_model(l->m), a);

  Decomposition d = decompose(a);
  d.vector = xi_vector(g, d.vector);
  std::tie(d.x1, d.x2) = xi_spinor(g, d.x1, d.x2);
  return recompose(d);
}

HermMat3 act(const GeneratorWord& w, const HermMat3& a) {
  HermMat3 out = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out);
  return out;
}

HermMat3 F4Element::operator()(const HermMat3& a) const {
  return from_coords(matrix_ * to_coords(a));
}

F4Element realize(const SpinGenerator& g, double tol) {
  validate(g, tol);
  Eigen::MatrixXcd m(kJordanDim, kJordanDim);
  for (int k = 0; k < kJordanDim; ++k) m.col(k) = to_coords(act(g, basis_element(k)));
  return F4Element(std::move(m));
}

F4Element realize(const GeneratorWord& w, double tol) {
  F4Element out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    try {
      out = out * realize(w[k], tol);
    } catch (const Error& e) {
      throw Error(e.code(), "letter " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

OracleResult conjugation_oracle(Complex r, const ComplexOctonion& u, const HermMat3& a,
                                double tol) {
  const double d = std::abs(r * r + norm(u) - 1.0);
  if (d > tol)
    throw Error(ErrorCode::invalid_argument,
                "conjugation_oracle: (r,u) is not of unit norm, defect " + std::to_string(d));

  const auto make_g = [&](const ComplexOctonion& w) {
    OctMat3 g;
    g[0][0] = ComplexOctonion::scalar(1.0);
    g[1][1] = ComplexOctonion::scalar(r);
    g[1][2] = -w;
    g[2][1] = conj(w);
    g[2][2] = ComplexOctonion::scalar(r);
    return g;
  };
  const OctMat3 g = make_g(u), ginv = make_g(-u);
  const OctMat3 full = to_full(a);
  const OctMat3 left = matmul(matmul(g, full), ginv);
  const OctMat3 right = matmul(g, matmul(full, ginv));

  OracleResult out;
  out.value = from_full(left);
  out.other_bracketing = from_full(right);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.bracketing_gap = std::max(out.bracketing_gap, (left[i][j] - right[i][j]).magnitude());
  out.hermiticity_defect = hermiticity_defect(left);
  return out;
}

}  // namespace octf4
