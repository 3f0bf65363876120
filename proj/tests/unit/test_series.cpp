#include <doctest.h>

#include <random>

#include "planar/oracle.hpp"
#include "planar/series.hpp"
#include "planar/walks.hpp"

using namespace planar;

namespace {

const std::vector<SeriesVariable> kXA{{"x", Granularity::integer}, {"a", Granularity::integer}};
const std::vector<SeriesVariable> kXY{{"x", Granularity::integer}, {"y", Granularity::half}, {"z", Granularity::integer}};

TruncatedSeries poly(const std::vector<SeriesVariable>& vars, int bound,
                     std::vector<std::pair<std::vector<int>, Rational>> terms) {
  TruncatedSeries s(vars, bound);
  for (const auto& [e, c] : terms) s.add_term(e, c);
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, int bound) {
  TruncatedSeries s(kXA, bound);
  std::uniform_int_distribution<int> exp(0, bound);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int i = 0; i < 6; ++i) s.add_term({exp(rng), exp(rng)}, Rational(num(rng), den(rng)));
  return s;
}

// drops the top x power, which a truncated product cannot know after d/dx
TruncatedSeries below_top(const TruncatedSeries& s) {
  TruncatedSeries out = s.zero_like();
  for (const auto& [e, c] : s.terms())
    if (e[0] < s.x_bound()) out.add_term(e, c);
  return out;
}

Rational inv_fact(int n) { return Rational(1) / Rational(factorial(n)); }

}  // namespace

TEST_CASE("ring operations") {
  const auto one_plus = poly(kXA, 4, {{{0, 0}, 1}, {{1, 0}, 1}});
  const auto one_minus = poly(kXA, 4, {{{0, 0}, 1}, {{1, 0}, -1}});
  CHECK(one_plus * one_minus == poly(kXA, 4, {{{0, 0}, 1}, {{2, 0}, -1}}));
  CHECK(one_plus + one_plus.zero_like() == one_plus);
  CHECK((one_plus - one_plus).is_zero());
  CHECK((one_plus * Rational(0)).is_zero());

  const auto half = poly(kXY, 4, {{{1, 1, 0}, 1}});
  CHECK(half * half == poly(kXY, 4, {{{2, 2, 0}, 1}}));

  // truncation drops terms past the bound
  const auto big = poly(kXA, 3, {{{2, 0}, 1}});
  CHECK((big * big).is_zero());
  CHECK(poly(kXA, 3, {{{4, 0}, 7}}).is_zero());

  CHECK_THROWS_AS(one_plus + poly(kXY, 4, {}), InvalidInput);
  CHECK_THROWS_AS(TruncatedSeries(kXA, 3, "q"), InvalidInput);
  CHECK_THROWS_AS(TruncatedSeries(kXY, 3, "y"), InvalidInput);
  CHECK_THROWS_AS(TruncatedSeries(kXA, -1), InvalidInput);
  CHECK_THROWS_AS(poly(kXA, 3, {{{1}, 1}}), InvalidInput);
}

TEST_CASE("derivatives and primitives") {
  CHECK(diff(poly(kXA, 4, {{{2, 0}, 1}}), "x") == poly(kXA, 4, {{{1, 0}, 2}}));
  CHECK(antidiff(poly(kXY, 4, {{{0, 0, 1}, 1}}), "z") == poly(kXY, 4, {{{0, 0, 2}, Rational(1, 2)}}));
  CHECK(diff(poly(kXY, 4, {{{0, 1, 0}, 1}}), "y") == poly(kXY, 4, {{{0, -1, 0}, Rational(1, 2)}}));
  CHECK(antidiff(poly(kXY, 4, {{{0, 1, 0}, 1}}), "y") == poly(kXY, 4, {{{0, 3, 0}, Rational(2, 3)}}));
  CHECK(diff(poly(kXA, 4, {{{0, 3}, 1}}), "a", 3) == poly(kXA, 4, {{{0, 0}, 6}}));
  CHECK(antidiff(poly(kXA, 4, {{{0, 0}, 1}}), "a", 2) == poly(kXA, 4, {{{0, 2}, Rational(1, 2)}}));
  CHECK_THROWS_AS(antidiff(poly(kXA, 4, {{{0, -1}, 1}}), "a"), InvalidInput);
  CHECK_THROWS_AS(antidiff(poly(kXY, 4, {{{0, -2, 0}, 1}}), "y"), InvalidInput);
  CHECK_THROWS_AS(antidiff(poly(kXA, 4, {{{0, 0}, 1}}), "x"), InvalidInput);
}

TEST_CASE("product rule and primitive identity on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_series(rng, 5);
    const auto t = random_series(rng, 5);
    CHECK(diff(s * t, "a") == diff(s, "a") * t + s * diff(t, "a"));
    CHECK(below_top(diff(s * t, "x")) == below_top(diff(s, "x") * t + s * diff(t, "x")));
    CHECK(diff(antidiff(s, "a"), "a") == s);
    // primitive of a derivative loses exactly the a-free part
    TruncatedSeries a_free = s.zero_like();
    for (const auto& [e, c] : s.terms())
      if (e[1] == 0) a_free.add_term(e, c);
    CHECK(antidiff(diff(s, "a"), "a") == s - a_free);
  }
}

TEST_CASE("substitution and evaluation") {
  CHECK(subst_square(poly(kXY, 4, {{{0, 3, 0}, 1}}), "y", "z") == poly(kXY, 4, {{{0, 0, 3}, 1}}));
  CHECK(eval_one(poly(kXA, 4, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}}), "a") == poly(kXA, 4, {{{0, 0}, 3}}));
  const auto s = poly(kXY, 4, {{{1, 1, 0}, 2}, {{2, 4, 0}, -1}, {{0, 3, 1}, Rational(1, 3)}});
  CHECK(eval_one(eval_one(subst_square(s, "y", "z"), "z"), "y") == eval_one(eval_one(s, "y"), "z"));
  CHECK_THROWS_AS(subst_square(s, "z", "y"), InvalidInput);
  CHECK_THROWS_AS(eval_one(s, "x"), InvalidInput);
  CHECK(keep_integral_powers(s, "y") == poly(kXY, 4, {{{2, 4, 0}, -1}}));
}

TEST_CASE("Bessel series") {
  const auto i0 = x_coefficients(bessel_series(0, 6));
  CHECK(i0 == std::vector<Rational>{1, 0, 1, 0, Rational(1, 4), 0, Rational(1, 36)});
  const auto i1 = x_coefficients(bessel_series(1, 5));
  CHECK(i1 == std::vector<Rational>{0, 1, 0, Rational(1, 2), 0, Rational(1, 12)});
  for (int nu = 0; nu <= 3; ++nu) {
    const auto c = x_coefficients(bessel_series(nu, 14));
    for (int m = 0; 2 * m + nu <= 14; ++m) CHECK(c[2 * m + nu] == inv_fact(m) * inv_fact(m + nu));
  }
  CHECK_THROWS_AS(bessel_series(-1, 4), InvalidInput);
}

TEST_CASE("Bessel determinant") {
  CHECK(x_coefficients(gessel_determinant(2, 4)) == std::vector<Rational>{1, 0, 1, 0, Rational(1, 2)});
  CHECK(gessel_determinant(1, 8) == bessel_series(0, 8));
  CHECK_THROWS_AS(gessel_determinant(0, 4), InvalidInput);
  for (int d = 2; d <= 4; ++d) {
    const auto c = x_coefficients(gessel_determinant(d, 12));
    for (int m = 0; m <= 6; ++m) {
      CHECK(c[2 * m] * Rational(factorial(m)) * Rational(factorial(m)) == Rational(oracle::brute_u(m, d)));
      if (2 * m + 1 <= 12) CHECK(c[2 * m + 1] == 0);
    }
  }
}

TEST_CASE("determinant written with primitives") {
  const auto alt = x_coefficients(gessel_determinant_alt(4));
  CHECK(alt == std::vector<Rational>{1, 0, 1, 0, Rational(1, 2)});
  CHECK(gessel_determinant_alt(12) == gessel_determinant(2, 12));
}

TEST_CASE("one-dimensional walk counts") {
  CHECK(w1_prime(3, 3, 0) == 1);
  CHECK(w1_prime(3, 2, 0) == 0);
  CHECK(w1_prime(0, 0, 0) == 1);
  CHECK(w1_doubleprime(1, 1, 0) == 2);
  CHECK(w1_doubleprime(3, 2, 1) == 10);
  CHECK_THROWS_AS(w1_prime(-1, 0, -1), InvalidInput);
}

TEST_CASE("two-block walk formula") {
  CHECK(two_block_formula(0, 0, 2, 2, WalkFlavor::prime) == Rational(3, 4));
  CHECK(two_block_formula(-1, 1, 2, 2, WalkFlavor::prime) == Rational(2, 4));
  CHECK(two_block_formula(0, 0, 0, 0, WalkFlavor::prime) == 1);
  CHECK(two_block_formula(0, 0, 0, 0, WalkFlavor::doubleprime) == 1);
  CHECK_THROWS_AS(two_block_formula(0, 0, 3, 2, WalkFlavor::prime), InvalidInput);

  for (const auto& [p1, p2] : std::vector<std::pair<int, int>>{{0, 0}, {-1, 1}, {1, -1}, {2, -2}, {1, 1}}) {
    for (int mp = 0; mp <= 8; mp += 2) {
      for (int mm = 0; mm <= 8; mm += 2) {
        const Rational scaled =
            two_block_formula(p1, p2, mp, mm, WalkFlavor::prime) * Rational(factorial(mp)) * Rational(factorial(mm));
        CHECK(scaled == Rational(oracle::two_block_walks(mp, mm, p1, p2)));
        if (mp == mm)
          CHECK(scaled == Rational(count_restricted_walks(2, mp / 2, 2, {p1, p2}, BlockVariant::nonincreasing)));
      }
    }
  }
}

TEST_CASE("boundary series two ways") {
  for (int p = -1; p <= 1; ++p) {
    CHECK(boundary_series(p, "a1", "b1", 10) == boundary_series_from_bessel(p, "a1", "b1", 10));
    CHECK(boundary_series(p, "a2", "b2", 9) == boundary_series_from_bessel(p, "a2", "b2", 9));
  }
  CHECK_THROWS_AS(boundary_series_from_bessel(2, "a1", "b1", 4), InvalidInput);
}

TEST_CASE("shifted boundary series") {
  const auto vars = two_axis_variables();
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      for (int p = -1; p <= 1; ++p) {
        TruncatedSeries expected(vars, 8);
        for (int up = k; up <= 8; ++up) {
          const int down = up - p;
          if (down < l || up + down > 8) continue;
          std::vector<int> e(vars.size(), 0);
          e[0] = up + down;
          e[1] = up;
          e[2] = down;
          expected.add_term(e, inv_fact(up - k) * inv_fact(down - l));
        }
        CHECK(shifted_boundary_series(k, l, p, "a1", "b1", 8) == expected);
      }
    }
  }
}

TEST_CASE("two-regular generating function") {
  const auto c = x_coefficients(two_regular_generating_function(12));
  CHECK(c[0] == 1);
  CHECK(c[4] == Rational(1, 4));
  CHECK(c[8] == Rational(3, 576));
  for (int n = 0; n <= 3; ++n) {
    const Rational f = Rational(factorial(2 * n));
    CHECK(c[4 * n] == Rational(oracle::brute_g(n, 2, 2)) / (f * f));
  }
  for (int k = 0; k <= 12; ++k)
    if (k % 4 != 0) CHECK(c[k] == 0);
}

TEST_CASE("unrestricted determinant picks up odd step counts") {
  const auto c = x_coefficients(two_regular_generating_function(6, false));
  CHECK(c[0] == 1);
  CHECK(c[2] == 1);
  CHECK(c[4] == Rational(1, 4));
}
