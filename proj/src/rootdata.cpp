#include "octf4/rootdata.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "octf4/error.hpp"

namespace octf4 {

Weight Weight::epsilon(int i) {
  Weight w;
  w.coords[i - 1] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int k = 0; k < 4; ++k) coords[k] += o.coords[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int k = 0; k < 4; ++k) coords[k] -= o.coords[k];
  return *this;
}

Weight operator*(Rational c, Weight a) {
  for (auto& x : a.coords) x *= c;
  return a;
}

Rational inner(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (int k = 0; k < 4; ++k) s += a.coords[k] * b.coords[k];
  return s;
}

Rational coroot_pairing(const Weight& lambda, const Weight& alpha) {
  return 2 * inner(lambda, alpha) / inner(alpha, alpha);
}

Weight reflect(const Weight& lambda, const Weight& alpha) {
  return lambda - coroot_pairing(lambda, alpha) * alpha;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += std::to_string(w.coords[k].numerator());
    if (w.coords[k].denominator() != 1) out += "/" + std::to_string(w.coords[k].denominator());
  }
  return out + ")";
}

int Root::height() const {
  return static_cast<int>(std::accumulate(simple_coords.begin(), simple_coords.end(),
                                          std::int64_t{0}));
}

std::vector<Root> RootDatum::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots)
    if (r.positive) out.push_back(r);
  return out;
}

std::array<Weight, 4> f4_simple_roots() {
  const Rational half(1, 2);
  return {Weight::epsilon(2) - Weight::epsilon(3), Weight::epsilon(3) - Weight::epsilon(4),
          Weight::epsilon(4),
          half * (Weight::epsilon(1) - Weight::epsilon(2) - Weight::epsilon(3) -
                  Weight::epsilon(4))};
}

namespace {

// Solves sum_i c_i alpha_i = w over Q by Gauss-Jordan elimination.
std::array<Rational, 4> simple_coordinates(const std::array<Weight, 4>& simple, const Weight& w) {
  std::array<std::array<Rational, 5>, 4> m;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) m[row][col] = simple[col].coords[row];
    m[row][4] = w.coords[row];
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (m[pivot][col].numerator() == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    const Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (int row = 0; row < 4; ++row) {
      if (row == col || m[row][col].numerator() == 0) continue;
      const Rational f = m[row][col];
      for (int k = 0; k < 5; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

RootDatum build() {
  RootDatum d;
  d.simple_roots = f4_simple_roots();

  std::set<Weight> found(d.simple_roots.begin(), d.simple_roots.end());
  std::vector<Weight> frontier(d.simple_roots.begin(), d.simple_roots.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (const auto& a : d.simple_roots) {
        const Weight r = reflect(w, a);
        if (found.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }

  for (const auto& w : found) {
    Root r;
    r.weight = w;
    const auto c = simple_coordinates(d.simple_roots, w);
    bool nonneg = true, nonpos = true;
    for (int k = 0; k < 4; ++k) {
      if (c[k].denominator() != 1)
        throw Error(ErrorCode::invalid_argument, "root with fractional simple coordinates");
      r.simple_coords[k] = c[k].numerator();
      nonneg = nonneg && r.simple_coords[k] >= 0;
      nonpos = nonpos && r.simple_coords[k] <= 0;
    }
    if (nonneg == nonpos)
      throw Error(ErrorCode::invalid_argument, "root is neither positive nor negative");
    r.positive = nonneg;
    r.long_root = inner(w, w) == Rational(2);
    d.roots.push_back(r);
  }
  std::stable_sort(d.roots.begin(), d.roots.end(), [](const Root& a, const Root& b) {
    if (a.positive != b.positive) return a.positive;
    return std::abs(a.height()) < std::abs(b.height());
  });

  const auto long_count = std::count_if(d.roots.begin(), d.roots.end(),
                                        [](const Root& r) { return r.long_root; });
  if (d.roots.size() != 48 || long_count != 24)
    throw Error(ErrorCode::invalid_argument, "F4 root system has the wrong size");

  // Fundamental weights: the dual basis of the simple coroots, solved in the
  // epsilon basis: w_i(H_aj) = delta_ij.
  for (int i = 0; i < 4; ++i) {
    std::array<std::array<Rational, 5>, 4> m;
    for (int j = 0; j < 4; ++j) {
      const Rational scale = Rational(2) / inner(d.simple_roots[j], d.simple_roots[j]);
      for (int k = 0; k < 4; ++k) m[j][k] = scale * d.simple_roots[j].coords[k];
      m[j][4] = (i == j) ? 1 : 0;
    }
    for (int col = 0; col < 4; ++col) {
      int pivot = col;
      while (m[pivot][col].numerator() == 0) ++pivot;
      std::swap(m[pivot], m[col]);
      const Rational p = m[col][col];
      for (auto& x : m[col]) x /= p;
      for (int row = 0; row < 4; ++row) {
        if (row == col || m[row][col].numerator() == 0) continue;
        const Rational f = m[row][col];
        for (int k = 0; k < 5; ++k) m[row][k] -= f * m[col][k];
      }
    }
    for (int k = 0; k < 4; ++k) d.fundamental_weights[i].coords[k] = m[k][4];
  }

  for (const auto& r : d.roots)
    if (r.positive) d.rho += r.weight;
  d.rho = Rational(1, 2) * d.rho;
  return d;
}

}  // namespace

const RootDatum& f4() {
  static const RootDatum datum = build();
  return datum;
}

std::array<Rational, 4> dynkin_labels(const Weight& lambda) {
  const auto& s = f4().simple_roots;
  return {coroot_pairing(lambda, s[0]), coroot_pairing(lambda, s[1]),
          coroot_pairing(lambda, s[2]), coroot_pairing(lambda, s[3])};
}

Weight from_dynkin_labels(const std::array<std::int64_t, 4>& labels) {
  Weight w;
  for (int i = 0; i < 4; ++i) w += Rational(labels[i]) * f4().fundamental_weights[i];
  return w;
}

std::int64_t weyl_dim(const Weight& lambda) {
  for (const Rational& l : dynkin_labels(lambda))
    if (l.denominator() != 1 || l < Rational(0))
      throw Error(ErrorCode::invalid_argument,
                  "weyl_dim: weight " + to_string(lambda) + " is not dominant integral");

  // (lambda + rho)(H_a) and rho(H_a) are positive integers for dominant lambda.
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  const Weight shifted = lambda + f4().rho;
  for (const auto& r : f4().roots) {
    if (!r.positive) continue;
    const Rational a = coroot_pairing(shifted, r.weight);
    const Rational b = coroot_pairing(f4().rho, r.weight);
    num *= cpp_int(a.numerator()) * b.denominator();
    den *= cpp_int(b.numerator()) * a.denominator();
  }
  if (num % den != 0) throw Error(ErrorCode::invalid_argument, "weyl_dim: non-integral result");
  const cpp_int dim = num / den;
  if (dim > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorCode::invalid_argument, "weyl_dim: dimension does not fit in 64 bits");
  return static_cast<std::int64_t>(dim);
}

namespace {

// Cartan type of the Dynkin subdiagram on `nodes` (1-based, connected).
// In F4 the nodes 1, 2 are long and 3, 4 short.
std::string component_type(const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  const bool has_double = std::count(nodes.begin(), nodes.end(), 2) &&
                          std::count(nodes.begin(), nodes.end(), 3);
  if (n == 4) return "F4";
  if (!has_double) return "A" + std::to_string(n);
  if (n == 2) return "B2";
  const int long_nodes = static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                                        [](int k) { return k <= 2; }));
  return (long_nodes == 2 ? "B" : "C") + std::to_string(n);
}

}  // namespace

ParabolicReport parabolic_dims(const std::vector<int>& crossed) {
  ParabolicReport rep;
  std::array<bool, 4> is_crossed{};
  for (int k : crossed) {
    if (k < 1 || k > 4)
      throw Error(ErrorCode::invalid_argument, "parabolic_dims: simple root index out of range");
    is_crossed[k - 1] = true;
  }
  for (int k = 0; k < 4; ++k)
    if (is_crossed[k]) rep.crossed.push_back(k + 1);

  int levi_roots = 0, nil_roots = 0;
  for (const auto& r : f4().roots) {
    bool on_crossed = false;
    for (int k = 0; k < 4; ++k) on_crossed = on_crossed || (is_crossed[k] && r.simple_coords[k] != 0);
    if (!on_crossed)
      ++levi_roots;
    else if (r.positive)
      ++nil_roots;
  }
  const int uncrossed = 4 - static_cast<int>(rep.crossed.size());
  rep.levi_semisimple_dim = levi_roots + uncrossed;
  rep.levi_center_dim = static_cast<int>(rep.crossed.size());
  rep.levi_dim = levi_roots + 4;
  rep.nilradical_dim = nil_roots;
  rep.parabolic_dim = rep.levi_dim + rep.nilradical_dim;

  // Components of the uncrossed part of the chain 1 - 2 => 3 - 4.
  std::vector<std::string> parts;
  std::vector<int> run;
  for (int k = 1; k <= 5; ++k) {
    if (k <= 4 && !is_crossed[k - 1]) {
      run.push_back(k);
    } else if (!run.empty()) {
      parts.push_back(component_type(run));
      run.clear();
    }
  }
  for (std::size_t k = 0; k < parts.size(); ++k) rep.levi_type += (k ? "x" : "") + parts[k];
  return rep;
}

SmallIrrepReport unique_small_irrep_check(int bound) {
  SmallIrrepReport rep;
  rep.bound = bound;
  // Weights with label sum k; stop at the first k where every weight exceeds
  // the bound, since all larger weights dominate one of them.
  for (int k = 1;; ++k) {
    bool any_small = false;
    for (std::int64_t a = 0; a <= k; ++a)
      for (std::int64_t b = 0; a + b <= k; ++b)
        for (std::int64_t c = 0; a + b + c <= k; ++c) {
          const std::array<std::int64_t, 4> labels{a, b, c, k - a - b - c};
          const std::int64_t dim = weyl_dim(from_dynkin_labels(labels));
          ++rep.candidates_checked;
          if (dim <= bound) {
            any_small = true;
            if (dim > 1) {
              rep.found.push_back(labels);
              rep.dims.push_back(dim);
            }
          }
        }
    if (!any_small) break;
  }
  return rep;
}

}  // namespace octf4
