#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace octf4 {

using Rational = boost::rational<std::int64_t>;

/// Point of the weight lattice in the epsilon basis of R^4.
struct Weight {
  std::array<Rational, 4> coords{};

  static Weight epsilon(int i);

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Rational c, Weight a);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

Rational inner(const Weight& a, const Weight& b);
/// lambda(H_alpha) = 2 <lambda, alpha> / <alpha, alpha>.
Rational coroot_pairing(const Weight& lambda, const Weight& alpha);
/// s_alpha(lambda) = lambda - lambda(H_alpha) alpha.
Weight reflect(const Weight& lambda, const Weight& alpha);
std::string to_string(const Weight& w);

struct Root {
  Weight weight;
  std::array<std::int64_t, 4> simple_coords{};  // alpha = sum c_i alpha_i
  bool positive = false;
  bool long_root = false;
  int height() const;
};

struct RootDatum {
  std::array<Weight, 4> simple_roots;
  std::vector<Root> roots;  // all 48, positive ones first, by height
  std::array<Weight, 4> fundamental_weights;
  Weight rho;

  std::vector<Root> positive_roots() const;
  int rank() const { return 4; }
  int dimension() const { return static_cast<int>(roots.size()) + rank(); }
};

/// alpha1 = e2 - e3, alpha2 = e3 - e4, alpha3 = e4, alpha4 = (e1 - e2 - e3 - e4)/2.
std::array<Weight, 4> f4_simple_roots();
/// Closes the simple roots under their reflections. Throws if the counts are off.
const RootDatum& f4();

/// Fundamental weight coordinates (l(H_a1), ..., l(H_a4)).
std::array<Rational, 4> dynkin_labels(const Weight& lambda);
Weight from_dynkin_labels(const std::array<std::int64_t, 4>& labels);

/// Weyl dimension formula. Throws Error(invalid_argument) unless lambda is dominant integral.
std::int64_t weyl_dim(const Weight& lambda);

struct ParabolicReport {
  std::vector<int> crossed;  // 1-based indices of the crossed simple roots
  int levi_dim = 0;
  int nilradical_dim = 0;
  int parabolic_dim = 0;
  int levi_semisimple_dim = 0;
  int levi_center_dim = 0;
  std::string levi_type;  // "B3", "A1xA2", ... or "" when semisimple part is trivial
};

/// The parabolic subalgebra obtained by crossing the given simple roots
/// (1-based): contains the Cartan, all positive roots and the negative roots
/// with zero coefficient on every crossed root. Crossing {4} gives p_4.
ParabolicReport parabolic_dims(const std::vector<int>& crossed);

struct SmallIrrepReport {
  int bound = 26;
  std::vector<std::array<std::int64_t, 4>> found;  // Dynkin labels with 1 < dim <= bound
  std::vector<std::int64_t> dims;
  int candidates_checked = 0;
};

/// Enumerates dominant weights whose dimension could be at most `bound`. By
/// strict monotonicity dim(l + w) > dim(l), so only weights of small label sum
/// need checking; every weight with a label sum of cutoff + 1 exceeds the bound.
SmallIrrepReport unique_small_irrep_check(int bound = 26);

}  // namespace octf4
