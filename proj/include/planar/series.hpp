#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "planar/numeric.hpp"

namespace planar {

enum class Granularity {
  integer,
  half,  ///< exponents are stored doubled, so y^{1/2} has stored exponent 1
};

struct SeriesVariable {
  std::string name;
  Granularity granularity = Granularity::integer;
  friend bool operator==(const SeriesVariable&, const SeriesVariable&) = default;
};

/// Multivariate power series with exact rational coefficients, truncated by
/// the degree of one designated variable (conventionally `x`). Exponents may
/// be negative; half-granularity variables carry half-integer exponents.
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;  ///< in granularity units, one per variable

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<SeriesVariable> vars, int x_bound, std::string_view truncation_var = "x");

  static TruncatedSeries constant(std::vector<SeriesVariable> vars, int x_bound, const Rational& c);

  const std::vector<SeriesVariable>& variables() const { return vars_; }
  int x_bound() const { return x_bound_; }
  std::size_t truncation_index() const { return trunc_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(std::string_view name) const;
  bool has_variable(std::string_view name) const;

  Rational coefficient(const Exponents& e) const;

  /// Adds c * monomial(e). Terms past the bound and zero sums are dropped.
  void add_term(const Exponents& e, const Rational& c);

  /// Same variables with no terms.
  TruncatedSeries zero_like() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_compatible(const TruncatedSeries& other) const;

  std::vector<SeriesVariable> vars_;
  int x_bound_ = 0;
  std::size_t trunc_ = 0;
  std::map<Exponents, Rational> terms_;
};

TruncatedSeries diff(const TruncatedSeries& s, std::string_view var, int times = 1);

/// Term-wise primitive; throws InvalidInput on an exponent of -1.
TruncatedSeries antidiff(const TruncatedSeries& s, std::string_view var, int times = 1);

/// Substitutes y = z^2. `z` must have integer granularity.
TruncatedSeries subst_square(const TruncatedSeries& s, std::string_view y, std::string_view z);

/// Sets `var` to one, folding its exponent away.
TruncatedSeries eval_one(const TruncatedSeries& s, std::string_view var);

/// Keeps only the terms whose exponent of `var` is an integer (even stored
/// exponent for half-granularity variables).
TruncatedSeries keep_integral_powers(const TruncatedSeries& s, std::string_view var);

/// Multiplies by var^{units} (stored granularity units).
TruncatedSeries shift(const TruncatedSeries& s, std::string_view var, int units);

/// Coefficients of x^0..x^bound; every other exponent must be zero.
std::vector<Rational> x_coefficients(const TruncatedSeries& s);

/// sum_m x^{2m+nu} / (m! (m+nu)!), i.e. I_nu(2x), in the single variable x.
TruncatedSeries bessel_series(int nu, int x_bound);

/// det(I_{|i-j|}(2x))_{i,j=1..d} by cofactor expansion.
TruncatedSeries gessel_determinant(int d, int x_bound);

/// The d = 2 determinant written with primitives in auxiliary variables a, b
/// of I_0(2x sqrt(ab)), evaluated at a = b = 1.
TruncatedSeries gessel_determinant_alt(int x_bound);

/// Number of 1-dimensional walks with m_plus up steps before m_minus down
/// steps ending at p: 1 if m_plus - m_minus = p, else 0.
int w1_prime(int m_plus, int m_minus, int p);

/// Interleaved version: binomial(m_plus + m_minus, m_plus) * w1_prime.
BigInt w1_doubleprime(int m_plus, int m_minus, int p);

enum class WalkFlavor { prime, doubleprime };

/// Inclusion-exclusion double sum over k, l and the splittings of m_plus and
/// m_minus between the two axes, expressing the number of 2-dimensional
/// 2-block walks to (p1, p2) divided by m_plus! m_minus!. The doubleprime
/// flavor substitutes the interleaved 1-dimensional counts.
Rational two_block_formula(int p1, int p2, int m_plus, int m_minus, WalkFlavor flavor);

/// Variable table x, y+, y-, z+, z-, a1, a2, b1, b2 (y's at half granularity).
std::vector<SeriesVariable> two_axis_variables();

/// Generating series of 1-dimensional walks to p with up steps weighted by
/// (y+^{1/2} x a) and down steps by (y-^{1/2} x b), exponential in both.
TruncatedSeries boundary_series(int p, std::string_view a, std::string_view b, int x_bound);

/// The same series for p in {-1, 0, 1} obtained from I_0(2x sqrt(y+^{1/2}
/// y-^{1/2} a b)) and its primitives in b (p = -1) or a (p = 1).
TruncatedSeries boundary_series_from_bessel(int p, std::string_view a, std::string_view b, int x_bound);

/// Series with the k-th a-derivative and l-th b-derivative of the boundary
/// series of p, evaluated at a = b = 1.
TruncatedSeries shifted_boundary_series(int k, int l, int p, std::string_view a,
                                        std::string_view b, int x_bound);

/// sum_{k,l} (-1)^{k+l}/(k! l!) applied term by term: k-th derivatives in a1,
/// a2 and l-th in b1, b2 at one, then k-th in y+ and l-th in y-, y = z^2,
/// 2k-fold primitive in z+ and 2l-fold in z-, and z = 1.
TruncatedSeries block_inclusion_exclusion(const TruncatedSeries& f);

/// Generating function of 2-regular multigraphs with planar matchings of size
/// at most 2: coefficient of x^{4n} is g/(2n)!^2. With `even_blocks_only`,
/// the determinant is first restricted to even step counts on each side,
/// which removes contributions at x^{4n+2}.
TruncatedSeries two_regular_generating_function(int x_bound, bool even_blocks_only = true);

}  // namespace planar
