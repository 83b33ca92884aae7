#include "octf4/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "octf4/random.hpp"

namespace octf4 {

namespace {

const Complex kI(0.0, 1.0);

// Coordinate k of C + O: 0 is the scalar, 1..8 the octonion coefficients.
Complex coord(const Vector9& v, int k) { return k == 0 ? v.r : v.u[k - 1]; }
Complex& coord(Vector9& v, int k) { return k == 0 ? v.r : v.u[k - 1]; }
Vector9 basis9(int k) {
  Vector9 e;
  coord(e, k) = 1.0;
  return e;
}

Vector9 to_vector9(const TraceZeroHermitian2& v) { return {v.s, v.x}; }
TraceZeroHermitian2 to_herm2(const Vector9& v) { return {v.r, v.u}; }

using Real9 = std::array<double, 9>;

double length(const Real9& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

Vector9 lift9(const Real9& v) {
  Vector9 out;
  for (int k = 0; k < 9; ++k) coord(out, k) = v[k];
  return out;
}

// Householder mirror on coordinates first..8 sending v to a multiple of
// e_first. The sign of the target avoids cancellation; returns false when v
// already lies on the axis.
bool householder(const Real9& v, int first, Real9& mirror) {
  double tail = 0.0, n = 0.0;
  for (int k = first; k < 9; ++k) n += v[k] * v[k];
  for (int k = first + 1; k < 9; ++k) tail += v[k] * v[k];
  n = std::sqrt(n);
  if (n == 0.0 || std::sqrt(tail) <= 1e-15 * n) return false;
  mirror.fill(0.0);
  for (int k = first; k < 9; ++k) mirror[k] = v[k];
  mirror[first] += (v[first] >= 0.0 ? n : -n);
  return true;
}

Vector9 reflect_real(const Vector9& v, const Real9& m) { return reflect(v, lift9(m)); }

// Real rotation, as a list of mirrors, that brings v into span(e0, e1).
std::vector<Real9> flatten(const Vector9& v) {
  Real9 p{}, q{};
  for (int k = 0; k < 9; ++k) {
    p[k] = coord(v, k).real();
    q[k] = coord(v, k).imag();
  }
  if (length(q) > length(p)) std::swap(p, q);

  std::vector<Real9> mirrors;
  Real9 m{};
  if (householder(p, 0, m)) mirrors.push_back(m);
  Vector9 w = v;
  for (const auto& c : mirrors) w = reflect_real(w, c);
  // The dominant part now lies on e0; turn the rest of the other part onto e1.
  Real9 rest{};
  double real_len = 0.0, imag_len = 0.0;
  for (int k = 1; k < 9; ++k) {
    real_len += std::norm(coord(w, k).real());
    imag_len += std::norm(coord(w, k).imag());
  }
  for (int k = 1; k < 9; ++k)
    rest[k] = real_len >= imag_len ? coord(w, k).real() : coord(w, k).imag();
  if (householder(rest, 1, m)) mirrors.push_back(m);
  return mirrors;
}

// Reflections applied in the given order, converted to Spin9 letters. Each
// pair (first c1, then c2) is the element kappa(c2) kappa(c1) =
// g_{c2} g_{-r1,u1} after normalizing to unit vectors.
GeneratorWord word_from_reflections(const std::vector<Vector9>& mirrors) {
  GeneratorWord w;
  for (std::size_t k = 0; k + 1 < mirrors.size(); k += 2) {
    const Vector9 c1 = (1.0 / std::sqrt(mirrors[k].quadratic())) * mirrors[k];
    const Vector9 c2 = (1.0 / std::sqrt(mirrors[k + 1].quadratic())) * mirrors[k + 1];
    w.insert(w.begin(), {Spin9Letter{c2.r, c2.u}, Spin9Letter{-c1.r, c1.u}});
  }
  return w;
}

Orth3Letter swap_letter(int i, int j) { return {permutation(i, j)}; }

// Accumulates letters onto the running state and the word.
struct Reducer {
  ReductionTrace trace;
  HermMat3 current;

  void step(const std::string& label, Branch branch, GeneratorWord letters) {
    if (letters.empty()) return;
    current = act(letters, current);
    trace.word.insert(trace.word.begin(), letters.begin(), letters.end());
    trace.steps.push_back({label, branch, std::move(letters), current});
  }
};

void force_real(GeneratorWord& w) {
  for (auto& g : w) {
    std::visit(
        [](auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, Spin9Letter>) {
            l.r = l.r.real();
            for (int k = 0; k < 8; ++k) l.u[k] = l.u[k].real();
          } else if constexpr (std::is_same_v<T, Spin8Letter>) {
            for (int k = 0; k < 8; ++k) {
              l.u[k] = l.u[k].real();
              l.v[k] = l.v[k].real();
            }
          } else {
            l.m = l.m.real().template cast<Complex>();
          }
        },
        g);
  }
}

double max_imaginary(const GeneratorWord& w) {
  double worst = 0.0;
  for (const auto& g : w) {
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, Spin9Letter>) {
            worst = std::max(worst, std::abs(l.r.imag()));
            for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(l.u[k].imag()));
          } else if constexpr (std::is_same_v<T, Spin8Letter>) {
            for (int k = 0; k < 8; ++k)
              worst = std::max({worst, std::abs(l.u[k].imag()), std::abs(l.v[k].imag())});
          } else {
            worst = std::max(worst, l.m.imag().cwiseAbs().maxCoeff());
          }
        },
        g);
  }
  return worst;
}

void finish(Reducer& red, const Tolerances& tol) {
  ReductionTrace& t = red.trace;
  t.final = red.current;
  t.residual = frobenius(t.final - t.target);
  t.bound = tol.accept * std::max(1.0, std::abs(t.scale) * frobenius(t.input));
  if (!(t.residual <= t.bound))
    throw ReductionError("reduction residual " + std::to_string(t.residual) +
                             " exceeds bound " + std::to_string(t.bound),
                         t);
}

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::nonisotropic_vector: return "nonisotropic-vector";
    case Branch::isotropic_nonzero_vector: return "isotropic-nonzero-vector";
    case Branch::zero_vector: return "zero-vector";
  }
  return "unknown";
}

Branch branch_from_name(const std::string& name) {
  for (Branch b : {Branch::nonisotropic_vector, Branch::isotropic_nonzero_vector,
                   Branch::zero_vector})
    if (branch_name(b) == name) return b;
  throw Error(ErrorCode::parse_error, "unknown branch label '" + name + "'");
}

Classification classify(const HermMat3& a, const Tolerances& tol) {
  const ConeReport cone = cone_membership(a, tol.classify);
  if (!cone.member)
    throw Error(ErrorCode::not_on_variety, "classify: matrix is not on the variety");

  const Decomposition d = decompose(a);
  const double scale = cone.norm;
  const double vnorm = std::sqrt(std::norm(d.vector.s) + d.vector.x.magnitude2());

  Classification c;
  c.t = d.t;
  c.scale = scale;
  c.vector_quadratic = d.vector.quadratic();
  // On the cone t^2 = s^2 + N(x3) and N(x1) + N(x2) = -4 t^2, so t is
  // compared at the square-root scale and the two quadratic quantities at tol.
  const double root_tol = std::sqrt(tol.classify);
  c.vector_isotropic = std::abs(c.vector_quadratic) <= tol.classify * scale * scale;
  c.t_vanishes = std::abs(d.t) <= root_tol * scale;
  c.spinor_isotropic = std::max(std::abs(norm(d.x1)), std::abs(norm(d.x2))) <=
                       tol.classify * scale * scale;

  if (vnorm <= tol.classify * scale)
    c.branch = Branch::zero_vector;
  else if (c.vector_isotropic)
    c.branch = Branch::isotropic_nonzero_vector;
  else
    c.branch = Branch::nonisotropic_vector;
  return c;
}

GeneratorWord spin9_transport(const Vector9& a, const Vector9& b, double tol) {
  const double scale = std::max(a.magnitude(), b.magnitude());
  if (a.magnitude() == 0.0 || b.magnitude() == 0.0)
    throw Error(ErrorCode::invalid_argument, "spin9_transport: zero vector");
  if (std::abs(a.quadratic() - b.quadratic()) > tol * scale * scale)
    throw Error(ErrorCode::invalid_argument, "spin9_transport: quadratic forms differ");
  if ((a - b).magnitude() <= tol * scale) return {};

  // a -> a' and b -> b' in span(e0, e1) by real rotations, then a complex
  // rotation of that plane. Every mirror has Q = 1 up to scaling, so the
  // letters stay as small as the stretch from a to b allows.
  const std::vector<Real9> ra = flatten(a), rb = flatten(b);
  Vector9 a1 = a, b1 = b;
  for (const auto& m : ra) a1 = reflect_real(a1, m);
  for (const auto& m : rb) b1 = reflect_real(b1, m);

  std::vector<Vector9> mirrors;
  for (const auto& m : ra) mirrors.push_back(lift9(m));

  // Null coordinates of the plane: Q = w+ w-, and a rotation by theta
  // multiplies w+ by e^{i theta} and w- by e^{-i theta}.
  const auto plus = [](const Vector9& v) { return v.r + kI * v.u[0]; };
  const auto minus = [](const Vector9& v) { return v.r - kI * v.u[0]; };
  const bool a_plus = std::abs(plus(a1)) >= std::abs(minus(a1));
  const bool b_plus = std::abs(plus(b1)) >= std::abs(minus(b1));
  if (a_plus != b_plus && std::abs(a.quadratic()) <= tol * scale * scale) {
    // Isotropic vectors on different null lines: exchange them first.
    mirrors.push_back(basis9(1));
    a1 = reflect(a1, basis9(1));
  }
  Complex lambda;
  if (std::abs(plus(a1)) >= std::abs(minus(a1)))
    lambda = plus(b1) / plus(a1);
  else
    lambda = minus(a1) / minus(b1);
  const Complex mu = std::sqrt(lambda);
  if (std::abs(mu - 1.0) > 1e-15) {
    // R_d R_c rotates by twice the angle from c = e0 to d = (cos, sin)(theta/2).
    const Complex c = 0.5 * (mu + 1.0 / mu), s = (mu - 1.0 / mu) / (2.0 * kI);
    Vector9 d;
    d.r = c;
    d.u[0] = s;
    mirrors.push_back(basis9(0));
    mirrors.push_back(d);
  }
  for (auto it = rb.rbegin(); it != rb.rend(); ++it) mirrors.push_back(lift9(*it));
  // Spin elements are products of an even number of reflections; e8 fixes
  // everything in the plane and is inserted right after the first rotation.
  if (mirrors.size() % 2 == 1) mirrors.insert(mirrors.begin() + ra.size(), basis9(8));
  return word_from_reflections(mirrors);
}

Vector9 transport_vector(const GeneratorWord& w, const Vector9& v) {
  TraceZeroHermitian2 h = to_herm2(v);
  for (auto it = w.rbegin(); it != w.rend(); ++it) h = xi_vector(*it, h);
  return to_vector9(h);
}

Eigen::Matrix3cd permutation(int i, int j) {
  Eigen::Matrix3cd p = Eigen::Matrix3cd::Identity();
  p(i, i) = 0.0;
  p(j, j) = 0.0;
  p(i, j) = 1.0;
  p(j, i) = 1.0;
  return p;
}

Eigen::Matrix3cd scale_conjugator(Complex w) {
  const Complex sw = std::sqrt(w), s1 = std::sqrt(1.0 - w);
  Eigen::Matrix3cd m;
  m << 1.0 / sw, 0.0, -kI * s1 / sw,
       -kI * (1.0 - w) / sw, sw, -s1 / sw,
       kI * s1, s1, 1.0;
  return m;
}

ReductionTrace reduce_to_canonical(const HermMat3& a, const Tolerances& tol) {
  Reducer red;
  red.trace.model = Model::complex;
  red.trace.input = a;
  red.trace.target = canonical_form();
  red.current = a;

  Classification c = classify(a, tol);
  red.trace.initial_branch = c.branch;

  // Zero vector part -> isotropic nonzero -> nonisotropic; each pass moves one level.
  for (int pass = 0; pass < 3 && c.branch != Branch::nonisotropic_vector; ++pass) {
    const Decomposition d = decompose(red.current);
    if (c.branch == Branch::zero_vector) {
      if (d.x2.magnitude() >= d.x1.magnitude())
        red.step("zero-vector: swap (12)", c.branch, {swap_letter(0, 1)});
      else
        red.step("zero-vector: swap (13)", c.branch, {swap_letter(0, 2)});
    } else {
      const Vector9 v = to_vector9(d.vector);
      const double w = v.magnitude() / std::sqrt(2.0);
      const Vector9 target{kI * w, ComplexOctonion::scalar(w)};
      red.step("isotropic: transport to (iw, w)", c.branch,
               spin9_transport(v, target, tol.classify));
      red.step("isotropic: swap (12)", c.branch, {swap_letter(0, 1)});
    }
    c = classify(red.current, tol);
  }
  if (c.branch != Branch::nonisotropic_vector)
    throw ReductionError("case analysis did not reach a nonisotropic vector part", red.trace);

  const Branch br = Branch::nonisotropic_vector;
  {
    // h1: kill x3 by moving the vector part to (sigma, 0), sigma^2 = s^2 + N(x3).
    const Decomposition d = decompose(red.current);
    const Vector9 v = to_vector9(d.vector);
    Complex sigma = std::sqrt(v.quadratic());
    if ((sigma * std::conj(d.vector.s)).real() < 0.0) sigma = -sigma;
    red.step("h1: transport vector part to (sigma, 0)", br,
             spin9_transport(v, Vector9{sigma, {}}, tol.classify));
  }
  {
    const Decomposition d = decompose(red.current);
    if (std::abs(norm(d.x2)) > std::abs(norm(d.x1)))
      red.step("x2 branch: swap (23)", br, {swap_letter(1, 2)});
  }
  {
    // h2 = kappa(0,-1) kappa(0, x1/sqrt N(x1)) sends x1 to sqrt N(x1).
    const Decomposition d = decompose(red.current);
    const Complex w = std::sqrt(norm(d.x1));
    const double scale = frobenius(red.current);
    if ((d.x1 - ComplexOctonion::scalar(w)).magnitude() > tol.accept * scale * 1e-2) {
      const ComplexOctonion xhat = (1.0 / w) * d.x1;
      red.step("h2: spin8 sends x1 to sqrt N(x1)", br,
               {Spin8Letter{ComplexOctonion::scalar(-1.0), -xhat}});
    }
  }
  {
    const Complex w = red.current.x1.re();
    const Complex r1 = red.current.diag[0];
    if (std::abs(r1 - kI * w) > std::abs(r1 + kI * w))
      red.step("sign: swap (12)", br, {swap_letter(0, 1)});
  }
  {
    const Complex w = red.current.x1.re();
    if (std::abs(w - 1.0) > tol.abs) {
      if (std::abs(w) >= 1e-6 && std::abs(w) <= 1e6) {
        const Eigen::Matrix3cd m = scale_conjugator(w);
        const double defect =
            (m * m.transpose() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
        if (defect > tol.classify * std::max(1.0, m.cwiseAbs2().sum()))
          throw ReductionError("scale conjugator is not orthogonal, defect " +
                                   std::to_string(defect),
                               red.trace);
        red.step("w-conjugator", br, {Orth3Letter{m}});
      } else {
        red.trace.scale = 1.0 / w;
        red.current *= red.trace.scale;
        red.trace.steps.push_back({"rescale 1/w", br, {}, red.current});
      }
    }
  }
  finish(red, tol);
  return red.trace;
}

TraceCheck verify_trace(const ReductionTrace& t, const Tolerances& tol) {
  TraceCheck out;
  try {
    validate(t.word, tol.classify);
  } catch (const Error&) {
    out.letters_valid = false;
  }
  const F4Element g = realize(t.word, std::numeric_limits<double>::infinity());
  const HermMat3 image = g(t.scale * t.input);
  out.word_residual = frobenius(image - t.final);
  out.target_residual = frobenius(image - t.target);
  const double bound = tol.accept * std::max(1.0, std::abs(t.scale) * frobenius(t.input));
  out.ok = out.letters_valid && out.target_residual <= bound;
  if (t.model == Model::real) out.ok = out.ok && max_imaginary(t.word) == 0.0;
  return out;
}

// -- Real form ----------------------------------------------------------------

namespace {

ComplexOctonion lift(const RealOctonion& x) {
  ComplexOctonion o;
  for (int k = 0; k < 8; ++k) o[k] = x[k];
  return o;
}

}  // namespace

HermMat3 embed(const RealHermMat3& x) {
  HermMat3 a;
  for (int k = 0; k < 3; ++k) a.diag[k] = x.diag[k];
  a.x1 = kI * conj(lift(x.x1));
  a.x2 = kI * conj(lift(x.x2));
  a.x3 = lift(x.x3);
  return a;
}

RealHermMat3 extract(const HermMat3& a, double tol) {
  const double scale = std::max(1.0, frobenius(a));
  double worst = 0.0;
  RealHermMat3 x;
  for (int k = 0; k < 3; ++k) {
    x.diag[k] = a.diag[k].real();
    worst = std::max(worst, std::abs(a.diag[k].imag()));
  }
  const ComplexOctonion y1 = -kI * conj(a.x1), y2 = -kI * conj(a.x2);
  for (int k = 0; k < 8; ++k) {
    x.x1[k] = y1[k].real();
    x.x2[k] = y2[k].real();
    x.x3[k] = a.x3[k].real();
    worst = std::max({worst, std::abs(y1[k].imag()), std::abs(y2[k].imag()),
                      std::abs(a.x3[k].imag())});
  }
  if (worst > tol * scale)
    throw Error(ErrorCode::invalid_argument, "matrix is not in the image of the real model");
  return x;
}

RealHermMat3 real_canonical_form() {
  RealHermMat3 x;
  x.diag = {-1.0, 1.0, 0.0};
  x.x1[0] = 1.0;
  return x;
}

OctMat3 to_full(const RealHermMat3& x) {
  OctMat3 m;
  for (int k = 0; k < 3; ++k) m[k][k] = ComplexOctonion::scalar(x.diag[k]);
  m[0][1] = lift(x.x1);
  m[1][0] = -conj(lift(x.x1));
  m[0][2] = lift(x.x2);
  m[2][0] = -conj(lift(x.x2));
  m[1][2] = lift(x.x3);
  m[2][1] = conj(lift(x.x3));
  return m;
}

Eigen::Matrix3cd real_scale_conjugator(double x) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  if (x > 0.0) {
    const double k = 0.5 * std::sqrt(1.0 / x);
    m << x + 1.0, 1.0 - x, 0.0,
         1.0 - x, x + 1.0, 0.0,
         0.0, 0.0, 2.0 * std::sqrt(x);
    m *= k;
  } else {
    const double k = 0.5 * std::sqrt(-1.0 / x);
    m << x - 1.0, x + 1.0, 0.0,
         -(x + 1.0), 1.0 - x, 0.0,
         0.0, 0.0, 2.0 * std::sqrt(-x);
    m *= k;
  }
  return m;
}

ReductionTrace reduce_real(const RealHermMat3& x, const Tolerances& tol) {
  Reducer red;
  red.trace.model = Model::real;
  red.trace.input = embed(x);
  red.trace.target = embed(real_canonical_form());
  red.current = red.trace.input;

  const ConeReport cone = cone_membership(red.current, tol.classify);
  if (!cone.member)
    throw Error(ErrorCode::not_on_variety, "reduce_real: matrix is not on the real variety");
  red.trace.initial_branch = Branch::nonisotropic_vector;
  const Branch br = Branch::nonisotropic_vector;
  const double scale = cone.norm;

  const auto real_step = [&](const std::string& label, GeneratorWord w) {
    if (max_imaginary(w) > tol.classify * std::max(1.0, scale))
      throw ReductionError("real reduction produced a complex letter", red.trace);
    force_real(w);
    red.step(label, br, std::move(w));
  };

  {
    // The real form is positive definite on the vector part, so a plain
    // rotation moves it to (rho, 0).
    const Decomposition d = decompose(red.current);
    if (d.vector.x.magnitude() > tol.abs * scale) {
      const Vector9 v{d.vector.s.real(), d.vector.x};
      double rho = std::sqrt(std::max(0.0, v.quadratic().real()));
      if (d.vector.s.real() < 0.0) rho = -rho;
      real_step("h1: rotate vector part to (rho, 0)",
                spin9_transport(v, Vector9{rho, {}}, tol.classify));
    }
  }
  {
    // t^2 = s^2 now; t = -s forces x1 = 0 and is folded onto t = s.
    const Decomposition d = decompose(red.current);
    if (std::abs(d.t + d.vector.s) < std::abs(d.t - d.vector.s))
      real_step("t = -s: swap (23)", {Orth3Letter{permutation(1, 2)}});
  }
  const double t = decompose(red.current).t.real();
  if (!(t > 0.0))
    throw Error(ErrorCode::not_on_variety,
                "reduce_real: point lies on the sheet of the real cone opposite to the "
                "canonical form (top-left entry must be negative)");
  {
    // Spin8 letter sending x1 to a real number of the same sign as Re x1.
    const RealHermMat3 cur = extract(red.current, tol.classify);
    double n1 = 0.0;
    for (double c : cur.x1) n1 += c * c;
    const double target = (cur.x1[0] < 0.0 ? -1.0 : 1.0) * std::sqrt(n1);
    double off = std::abs(cur.x1[0] - target);
    for (int k = 1; k < 8; ++k) off = std::max(off, std::abs(cur.x1[k]));
    if (off > tol.abs * scale) {
      // In complex coordinates x1 = i conj(x1_real); solve conj(v) x1 = i * target.
      const ComplexOctonion x1c = red.current.x1;
      const ComplexOctonion v = (kI * target / norm(x1c)) * x1c;
      real_step("spin8: x1 to a real number",
                {Spin8Letter{ComplexOctonion::scalar(1.0), v}});
    }
  }
  {
    const RealHermMat3 cur = extract(red.current, tol.classify);
    const double xv = cur.x1[0];
    if (std::abs(xv - 1.0) > tol.abs) {
      const Eigen::Matrix3cd m = real_scale_conjugator(xv);
      const Eigen::Matrix3cd i1 = Eigen::Vector3cd(-1.0, 1.0, 1.0).asDiagonal();
      const double defect = (m.transpose() * i1 * m - i1).cwiseAbs().maxCoeff();
      if (defect > tol.classify * std::max(1.0, m.cwiseAbs2().sum()))
        throw ReductionError("real scale conjugator is not in O(1,2)", red.trace);
      real_step(xv > 0.0 ? "boost (r = x)" : "boost (r = -x)", {Orth12Letter{m}});
    }
  }
  finish(red, tol);
  return red.trace;
}

// -- Orbit sampling -------------------------------------------------------------

GeneratorWord random_word(Rng& rng, int length) {
  GeneratorWord w;
  for (int k = 0; k < length; ++k) {
    switch (rng.below(3)) {
      case 0: w.push_back(random_spin9(rng)); break;
      case 1: w.push_back(random_spin8(rng)); break;
      default: w.push_back(random_signed_permutation(rng)); break;
    }
  }
  return w;
}

GeneratorWord random_spin_word(Rng& rng, int length) {
  GeneratorWord w;
  for (int k = 0; k < length; ++k) {
    if (rng.coin())
      w.push_back(random_spin9(rng));
    else
      w.push_back(random_spin8(rng));
  }
  return w;
}

GeneratorWord random_real_word(Rng& rng, int length) {
  GeneratorWord w;
  for (int k = 0; k < length; ++k) w.push_back(random_real_letter(rng));
  return w;
}

std::vector<HermMat3> sample_orbit(std::uint64_t seed, int n, int word_length) {
  Rng rng(seed);
  std::vector<HermMat3> out;
  out.reserve(n);
  const HermMat3 c = canonical_form();
  for (int k = 0; k < n; ++k) out.push_back(act(random_word(rng, word_length), c));
  return out;
}

std::vector<HermMat3> sample_branch(std::uint64_t seed, int n, Branch branch) {
  Rng rng(seed);
  std::vector<HermMat3> out;
  out.reserve(n);
  const Tolerances tol;
  while (static_cast<int>(out.size()) < n) {
    HermMat3 base;
    switch (branch) {
      case Branch::nonisotropic_vector:
        base = canonical_form();
        break;
      case Branch::isotropic_nonzero_vector:
        // (13) swap of the canonical form: t = 0, vector part (-i, 1).
        base = congruence(permutation(0, 2), canonical_form());
        break;
      case Branch::zero_vector:
        // Only x1 is nonzero and isotropic.
        base = HermMat3{};
        base.x1 = random_isotropic_octonion(rng);
        break;
    }
    // Spin letters fix t and act linearly on the vector part, so the branch survives.
    GeneratorWord w = random_spin_word(rng, 4);
    if (branch == Branch::nonisotropic_vector) w = random_word(rng, 6);
    HermMat3 a = act(w, base);
    if (classify(a, tol).branch == branch) out.push_back(a);
  }
  return out;
}

std::vector<RealHermMat3> sample_real_orbit(std::uint64_t seed, int n, int word_length) {
  Rng rng(seed);
  std::vector<RealHermMat3> out;
  out.reserve(n);
  const HermMat3 c = embed(real_canonical_form());
  for (int k = 0; k < n; ++k) {
    GeneratorWord w = random_real_word(rng, word_length);
    out.push_back(extract(act(w, c), 1e-9));
  }
  return out;
}

}  // namespace octf4
