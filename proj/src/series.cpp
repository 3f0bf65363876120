#include "planar/series.hpp"

#include <algorithm>
#include <string>

namespace planar {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

Rational inverse_factorial(int n) { return Rational(1) / Rational(factorial(static_cast<unsigned>(n))); }

// cofactor expansion along the first row
TruncatedSeries determinant(const std::vector<std::vector<TruncatedSeries>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  TruncatedSeries out = m[0][0].zero_like();
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<TruncatedSeries>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<TruncatedSeries> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const TruncatedSeries term = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

TruncatedSeries drop_to_x(const TruncatedSeries& s) {
  TruncatedSeries out({{"x", Granularity::integer}}, s.x_bound());
  const auto coeffs = x_coefficients(s);
  for (std::size_t e = 0; e < coeffs.size(); ++e) out.add_term({static_cast<int>(e)}, coeffs[e]);
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<SeriesVariable> vars, int x_bound,
                                 std::string_view truncation_var)
    : vars_(std::move(vars)), x_bound_(x_bound) {
  require(x_bound >= 0, "series: truncation bound must be non-negative");
  trunc_ = index_of(truncation_var);
  require(vars_[trunc_].granularity == Granularity::integer, "series: truncation variable must be integral");
}

TruncatedSeries TruncatedSeries::constant(std::vector<SeriesVariable> vars, int x_bound, const Rational& c) {
  TruncatedSeries s(std::move(vars), x_bound);
  s.add_term(Exponents(s.vars_.size(), 0), c);
  return s;
}

std::size_t TruncatedSeries::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  throw InvalidInput("series: unknown variable '" + std::string(name) + "'");
}

bool TruncatedSeries::has_variable(std::string_view name) const {
  return std::any_of(vars_.begin(), vars_.end(), [&](const auto& v) { return v.name == name; });
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const Rational& c) {
  require(e.size() == vars_.size(), "series: exponent vector has the wrong length");
  if (c == 0 || e[trunc_] > x_bound_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::zero_like() const {
  TruncatedSeries s;
  s.vars_ = vars_;
  s.x_bound_ = x_bound_;
  s.trunc_ = trunc_;
  return s;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
  require(vars_ == other.vars_ && trunc_ == other.trunc_, "series: variable tables differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other);
  x_bound_ = std::min(x_bound_, other.x_bound_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  std::erase_if(terms_, [&](const auto& t) { return t.first[trunc_] > x_bound_; });
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other);
  x_bound_ = std::min(x_bound_, other.x_bound_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  std::erase_if(terms_, [&](const auto& t) { return t.first[trunc_] > x_bound_; });
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  TruncatedSeries out = a.zero_like();
  out.x_bound_ = std::min(a.x_bound_, b.x_bound_);
  TruncatedSeries::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea[a.trunc_] + eb[a.trunc_] > out.x_bound_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSeries diff(const TruncatedSeries& s, std::string_view var, int times) {
  const std::size_t i = s.index_of(var);
  const bool half = s.variables()[i].granularity == Granularity::half;
  const int unit = half ? 2 : 1;
  TruncatedSeries cur = s;
  for (int t = 0; t < times; ++t) {
    TruncatedSeries next = cur.zero_like();
    for (const auto& [key, c] : cur.terms()) {
      auto e = key;
      const Rational power = Rational(e[i]) / unit;
      if (power == 0) continue;
      e[i] -= unit;
      next.add_term(e, c * power);
    }
    cur = std::move(next);
  }
  return cur;
}

TruncatedSeries antidiff(const TruncatedSeries& s, std::string_view var, int times) {
  const std::size_t i = s.index_of(var);
  const bool half = s.variables()[i].granularity == Granularity::half;
  const int unit = half ? 2 : 1;
  require(i != s.truncation_index(), "antidiff: cannot integrate in the truncation variable");
  TruncatedSeries cur = s;
  for (int t = 0; t < times; ++t) {
    TruncatedSeries next = cur.zero_like();
    for (const auto& [key, c] : cur.terms()) {
      auto e = key;
      e[i] += unit;
      require(e[i] != 0, "antidiff: exponent -1 has no power primitive");
      next.add_term(e, c / (Rational(e[i]) / unit));
    }
    cur = std::move(next);
  }
  return cur;
}

TruncatedSeries subst_square(const TruncatedSeries& s, std::string_view y, std::string_view z) {
  const std::size_t iy = s.index_of(y);
  const std::size_t iz = s.index_of(z);
  require(s.variables()[iz].granularity == Granularity::integer, "subst_square: target must be integral");
  const bool half = s.variables()[iy].granularity == Granularity::half;
  TruncatedSeries out = s.zero_like();
  for (const auto& [key, c] : s.terms()) {
    auto e = key;
    // y^{q} = z^{2q}; a half-granularity y stores 2q already
    e[iz] += half ? e[iy] : 2 * e[iy];
    e[iy] = 0;
    out.add_term(e, c);
  }
  return out;
}

TruncatedSeries eval_one(const TruncatedSeries& s, std::string_view var) {
  const std::size_t i = s.index_of(var);
  require(i != s.truncation_index(), "eval_one: cannot evaluate the truncation variable");
  TruncatedSeries out = s.zero_like();
  for (const auto& [key, c] : s.terms()) {
    auto e = key;
    e[i] = 0;
    out.add_term(e, c);
  }
  return out;
}

TruncatedSeries keep_integral_powers(const TruncatedSeries& s, std::string_view var) {
  const std::size_t i = s.index_of(var);
  const bool half = s.variables()[i].granularity == Granularity::half;
  TruncatedSeries out = s.zero_like();
  for (const auto& [e, c] : s.terms())
    if (!half || e[i] % 2 == 0) out.add_term(e, c);
  return out;
}

TruncatedSeries shift(const TruncatedSeries& s, std::string_view var, int units) {
  const std::size_t i = s.index_of(var);
  TruncatedSeries out = s.zero_like();
  for (const auto& [key, c] : s.terms()) {
    auto e = key;
    e[i] += units;
    out.add_term(e, c);
  }
  return out;
}

std::vector<Rational> x_coefficients(const TruncatedSeries& s) {
  const std::size_t ix = s.truncation_index();
  std::vector<Rational> out(static_cast<std::size_t>(s.x_bound()) + 1, Rational(0));
  for (const auto& [e, c] : s.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      require(i == ix || e[i] == 0, "x_coefficients: series still depends on '" + s.variables()[i].name + "'");
    require(e[ix] >= 0, "x_coefficients: negative power of x");
    out[e[ix]] += c;
  }
  return out;
}

TruncatedSeries bessel_series(int nu, int x_bound) {
  require(nu >= 0, "bessel_series: order must be non-negative");
  TruncatedSeries s({{"x", Granularity::integer}}, x_bound);
  for (int m = 0; 2 * m + nu <= x_bound; ++m) {
    s.add_term({2 * m + nu}, inverse_factorial(m) * inverse_factorial(m + nu));
  }
  return s;
}

TruncatedSeries gessel_determinant(int d, int x_bound) {
  require(d >= 1, "gessel_determinant: d must be positive");
  std::vector<std::vector<TruncatedSeries>> m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i].push_back(bessel_series(std::abs(i - j), x_bound));
  return determinant(m);
}

TruncatedSeries gessel_determinant_alt(int x_bound) {
  const std::vector<SeriesVariable> vars{{"x", Granularity::integer},
                                         {"a", Granularity::integer},
                                         {"b", Granularity::integer}};
  TruncatedSeries i0(vars, x_bound);
  for (int s = 0; 2 * s <= x_bound; ++s) {
    i0.add_term({2 * s, s, s}, inverse_factorial(s) * inverse_factorial(s));
  }
  // Each primitive picks up the x that accompanies its variable.
  const TruncatedSeries in_a = shift(antidiff(i0, "a"), "x", 1);
  const TruncatedSeries in_b = shift(antidiff(i0, "b"), "x", 1);
  TruncatedSeries det = determinant({{i0, in_a}, {in_b, i0}});
  return drop_to_x(eval_one(eval_one(det, "a"), "b"));
}

int w1_prime(int m_plus, int m_minus, int p) {
  require(m_plus >= 0 && m_minus >= 0, "w1_prime: step counts must be non-negative");
  return m_plus - m_minus == p ? 1 : 0;
}

BigInt w1_doubleprime(int m_plus, int m_minus, int p) {
  return binomial(static_cast<unsigned>(m_plus + m_minus), static_cast<unsigned>(m_plus)) *
         w1_prime(m_plus, m_minus, p);
}

Rational two_block_formula(int p1, int p2, int m_plus, int m_minus, WalkFlavor flavor) {
  require(m_plus >= 0 && m_minus >= 0 && m_plus % 2 == 0 && m_minus % 2 == 0,
          "two_block_formula: step counts must be even and non-negative");
  auto one_axis = [&](int up, int down, int p) -> Rational {
    return flavor == WalkFlavor::prime ? Rational(w1_prime(up, down, p))
                                       : Rational(w1_doubleprime(up, down, p));
  };
  Rational total = 0;
  for (int k = 0; 2 * k <= m_plus; ++k) {
    for (int l = 0; 2 * l <= m_minus; ++l) {
      Rational splits = 0;
      for (int up1 = k; up1 <= m_plus - k; ++up1) {
        const int up2 = m_plus - up1;
        for (int down1 = l; down1 <= m_minus - l; ++down1) {
          const int down2 = m_minus - down1;
          const Rational first = one_axis(up1, down1, p1);
          if (first == 0) continue;
          const Rational second = one_axis(up2, down2, p2);
          if (second == 0) continue;
          splits += first * second * inverse_factorial(up1 - k) * inverse_factorial(down1 - l) *
                    inverse_factorial(up2 - k) * inverse_factorial(down2 - l);
        }
      }
      if (splits == 0) continue;
      const Rational weight = falling_factorial(Rational(m_plus, 2), k) *
                              falling_factorial(Rational(m_minus, 2), l) /
                              (Rational(falling_factorial(m_plus, 2 * k)) *
                               Rational(falling_factorial(m_minus, 2 * l)));
      const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
      total += sign * inverse_factorial(k) * inverse_factorial(l) * weight * splits;
    }
  }
  return total;
}

std::vector<SeriesVariable> two_axis_variables() {
  return {{"x", Granularity::integer},  {"y+", Granularity::half},    {"y-", Granularity::half},
          {"z+", Granularity::integer}, {"z-", Granularity::integer}, {"a1", Granularity::integer},
          {"a2", Granularity::integer}, {"b1", Granularity::integer}, {"b2", Granularity::integer}};
}

TruncatedSeries boundary_series(int p, std::string_view a, std::string_view b, int x_bound) {
  TruncatedSeries s(two_axis_variables(), x_bound);
  const std::size_t ix = s.index_of("x");
  const std::size_t iyp = s.index_of("y+");
  const std::size_t iym = s.index_of("y-");
  const std::size_t ia = s.index_of(a);
  const std::size_t ib = s.index_of(b);
  for (int up = 0; up <= x_bound; ++up) {
    const int down = up - p;
    if (down < 0 || up + down > x_bound) continue;
    TruncatedSeries::Exponents e(s.variables().size(), 0);
    e[ix] = up + down;
    e[iyp] = up;  // (y+^{1/2})^up in half units
    e[iym] = down;
    e[ia] = up;
    e[ib] = down;
    s.add_term(e, inverse_factorial(up) * inverse_factorial(down));
  }
  return s;
}

TruncatedSeries boundary_series_from_bessel(int p, std::string_view a, std::string_view b, int x_bound) {
  require(p >= -1 && p <= 1, "boundary_series_from_bessel: p must be -1, 0 or 1");
  TruncatedSeries i0(two_axis_variables(), x_bound);
  const std::size_t ix = i0.index_of("x");
  const std::size_t iyp = i0.index_of("y+");
  const std::size_t iym = i0.index_of("y-");
  const std::size_t ia = i0.index_of(a);
  const std::size_t ib = i0.index_of(b);
  // I_0(2x sqrt(y+^{1/2} y-^{1/2} a b)) = sum_s (x^2 y+^{1/2} y-^{1/2} a b)^s / s!^2
  for (int s = 0; 2 * s <= x_bound; ++s) {
    TruncatedSeries::Exponents e(i0.variables().size(), 0);
    e[ix] = 2 * s;
    e[iyp] = s;
    e[iym] = s;
    e[ia] = s;
    e[ib] = s;
    i0.add_term(e, inverse_factorial(s) * inverse_factorial(s));
  }
  if (p == 0) return i0;
  // the primitive gains one step on its side, worth x y^{1/2}
  if (p == 1) return shift(shift(antidiff(i0, a), "x", 1), "y+", 1);
  return shift(shift(antidiff(i0, b), "x", 1), "y-", 1);
}

TruncatedSeries shifted_boundary_series(int k, int l, int p, std::string_view a,
                                        std::string_view b, int x_bound) {
  return eval_one(eval_one(diff(diff(boundary_series(p, a, b, x_bound), a, k), b, l), a), b);
}

TruncatedSeries block_inclusion_exclusion(const TruncatedSeries& f) {
  TruncatedSeries total = f.zero_like();
  const int bound = f.x_bound();
  for (int k = 0; 2 * k <= bound; ++k) {
    for (int l = 0; 2 * l <= bound; ++l) {
      TruncatedSeries t = diff(diff(f, "a1", k), "a2", k);
      t = diff(diff(t, "b1", l), "b2", l);
      if (t.is_zero()) continue;
      for (const char* v : {"a1", "a2", "b1", "b2"}) t = eval_one(t, v);
      t = diff(diff(t, "y+", k), "y-", l);
      t = subst_square(subst_square(t, "y+", "z+"), "y-", "z-");
      t = antidiff(antidiff(t, "z+", 2 * k), "z-", 2 * l);
      t = eval_one(eval_one(t, "z+"), "z-");
      const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
      total += t * (sign * inverse_factorial(k) * inverse_factorial(l));
    }
  }
  return total;
}

TruncatedSeries two_regular_generating_function(int x_bound, bool even_blocks_only) {
  require(x_bound >= 0, "two_regular_generating_function: bound must be non-negative");
  const TruncatedSeries b0_1 = boundary_series(0, "a1", "b1", x_bound);
  const TruncatedSeries b0_2 = boundary_series(0, "a2", "b2", x_bound);
  const TruncatedSeries bm_1 = boundary_series(-1, "a1", "b1", x_bound);
  const TruncatedSeries bp_2 = boundary_series(1, "a2", "b2", x_bound);
  TruncatedSeries det = b0_1 * b0_2 - bm_1 * bp_2;
  if (even_blocks_only) det = keep_integral_powers(keep_integral_powers(det, "y+"), "y-");
  return drop_to_x(block_inclusion_exclusion(det));
}

}  // namespace planar
