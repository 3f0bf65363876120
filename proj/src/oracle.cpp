#include "planar/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "planar/multigraph.hpp"
#include "planar/series.hpp"
#include "planar/tableaux.hpp"
#include "planar/walks.hpp"

namespace planar::oracle {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

int longest_increasing(const std::vector<int>& seq) {
  std::vector<int> best(seq.size(), 1);
  int out = 0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (seq[i] < seq[j]) best[j] = std::max(best[j], best[i] + 1);
    out = std::max(out, best[j]);
  }
  return out;
}

// Swap-based generation, independent of std::next_permutation.
void each_permutation(int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  std::function<void(int)> rec = [&](int pos) {
    if (pos >= m - 1) {
      visit(perm);
      return;
    }
    for (int i = pos; i < m; ++i) {
      std::swap(perm[pos], perm[i]);
      rec(pos + 1);
      std::swap(perm[pos], perm[i]);
    }
  };
  rec(0);
}

struct RawEdge {
  int u;
  int v;
};

void each_regular_matrix(int n, int r, BudgetMeter& meter,
                         const std::function<void(const std::vector<RawEdge>&)>& visit) {
  std::vector<int> col_left(n, r);
  std::vector<RawEdge> edges;
  std::function<void(int, int, int)> rec = [&](int i, int j, int row_left) {
    if (i == n) {
      meter.charge();
      visit(edges);
      return;
    }
    if (j == n) {
      if (row_left == 0) rec(i + 1, 0, r);
      return;
    }
    const int cap = std::min(row_left, col_left[j]);
    for (int k = 0; k <= cap; ++k) {
      col_left[j] -= k;
      for (int t = 0; t < k; ++t) edges.push_back({i, j});
      rec(i, j + 1, row_left - k);
      for (int t = 0; t < k; ++t) edges.pop_back();
      col_left[j] += k;
    }
  };
  rec(0, 0, r);
}

// Longest chain under pairwise compatibility; edges arrive sorted by (u, v).
int longest_chain(const std::vector<RawEdge>& edges, bool strict) {
  std::vector<int> best(edges.size(), 1);
  int out = 0;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const bool ok = strict ? edges[i].u < edges[j].u && edges[i].v < edges[j].v
                             : edges[i].u <= edges[j].u && edges[i].v <= edges[j].v;
      if (ok) best[j] = std::max(best[j], best[i] + 1);
    }
    out = std::max(out, best[j]);
  }
  return out;
}

BigInt count_bounded(int n, int r, int d, bool strict, std::uint64_t budget) {
  require(n >= 0 && r >= 0 && d >= 0, "oracle: parameters must be non-negative");
  BudgetMeter meter(budget);
  BigInt total = 0;
  each_regular_matrix(n, r, meter, [&](const std::vector<RawEdge>& edges) {
    if (longest_chain(edges, strict) <= d) ++total;
  });
  return total;
}

// Label sequences in {1, 2} of the given length made of pairs listed
// largest first, grouped by how many 1s they contain.
std::vector<BigInt> pair_sequences_by_ones(int length) {
  std::vector<BigInt> by_ones(length + 1, 0);
  for (int mask = 0; mask < (1 << length); ++mask) {
    bool ok = true;
    for (int i = 0; i + 1 < length && ok; i += 2) {
      const int first = (mask >> i) & 1 ? 2 : 1;
      const int second = (mask >> (i + 1)) & 1 ? 2 : 1;
      ok = first >= second;
    }
    if (ok) ++by_ones[length - __builtin_popcount(static_cast<unsigned>(mask))];
  }
  return by_ones;
}

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

bool nonincreasing_blocks(std::span<const int> pairing, int r, bool inverse) {
  const int m = static_cast<int>(pairing.size());
  std::vector<int> seq(pairing.begin(), pairing.end());
  if (inverse) {
    for (int i = 0; i < m; ++i) seq[pairing[i]] = i;
  }
  for (int i = 0; i + 1 < m; ++i)
    if ((i + 1) % r != 0 && seq[i] < seq[i + 1]) return false;
  return true;
}

}  // namespace

BigInt brute_u(int m, int d, std::uint64_t budget) {
  require(m >= 0 && d >= 0, "brute_u: parameters must be non-negative");
  BudgetMeter meter(budget);
  BigInt total = 0;
  if (m == 0) return 1;
  each_permutation(m, [&](const std::vector<int>& perm) {
    meter.charge();
    if (longest_increasing(perm) <= d) ++total;
  });
  return total;
}

BigInt brute_g(int n, int r, int d, std::uint64_t budget) { return count_bounded(n, r, d, true, budget); }

BigInt brute_g_hat(int n, int r, int d, std::uint64_t budget) {
  return count_bounded(n, r, d, false, budget);
}

BigInt two_block_walks(int m_plus, int m_minus, int p1, int p2) {
  require(m_plus >= 0 && m_minus >= 0 && m_plus % 2 == 0 && m_minus % 2 == 0,
          "two_block_walks: step counts must be even and non-negative");
  require(m_plus <= 20 && m_minus <= 20, "two_block_walks: step counts too large");
  const auto ups = pair_sequences_by_ones(m_plus);
  const auto downs = pair_sequences_by_ones(m_minus);
  BigInt total = 0;
  for (int up1 = 0; up1 <= m_plus; ++up1) {
    for (int down1 = 0; down1 <= m_minus; ++down1) {
      if (up1 - down1 != p1) continue;
      if ((m_plus - up1) - (m_minus - down1) != p2) continue;
      total += ups[up1] * downs[down1];
    }
  }
  return total;
}

BigInt interleaved_two_block_walks(int m_plus, int m_minus, int p1, int p2, std::uint64_t budget) {
  require(m_plus >= 0 && m_minus >= 0 && m_plus % 2 == 0 && m_minus % 2 == 0,
          "interleaved_two_block_walks: step counts must be even and non-negative");
  BudgetMeter meter(budget);
  const int length = m_plus + m_minus;
  // State: steps placed on each side, pending first label of an open pair on
  // each side (0 if none), and the current point.
  std::function<BigInt(int, int, int, int, int, int)> rec = [&](int ups, int downs, int open_up,
                                                               int open_down, int x1,
                                                               int x2) -> BigInt {
    const int left = length - ups - downs;
    if (std::abs(p1 - x1) + std::abs(p2 - x2) > left) return 0;
    if (left == 0) {
      meter.charge();
      return 1;
    }
    BigInt total = 0;
    if (ups < m_plus) {
      for (int label = 1; label <= 2; ++label) {
        if (open_up != 0 && label > open_up) continue;
        total += rec(ups + 1, downs, open_up == 0 ? label : 0, open_down, x1 + (label == 1),
                     x2 + (label == 2));
      }
    }
    if (downs < m_minus) {
      for (int label = 1; label <= 2; ++label) {
        if (open_down != 0 && label > open_down) continue;
        total += rec(ups, downs + 1, open_up, open_down == 0 ? label : 0, x1 - (label == 1),
                     x2 - (label == 2));
      }
    }
    return total;
  };
  return rec(0, 0, 0, 0, 0, 0);
}

BigInt ascending_pair_walks(int k, int l, int m_plus, int m_minus, int p1, int p2) {
  require(m_plus >= 0 && m_minus >= 0 && m_plus % 2 == 0 && m_minus % 2 == 0 && m_plus <= 12 &&
              m_minus <= 12,
          "ascending_pair_walks: step counts must be even and at most 12");
  if (k < 0 || l < 0) return 0;
  const int up_pairs = m_plus / 2;
  const int down_pairs = m_minus / 2;
  // bit i of a label mask set means label 2 at position i
  auto ascending = [](int mask, int pair) { return !((mask >> (2 * pair)) & 1) && ((mask >> (2 * pair + 1)) & 1); };
  BigInt total = 0;
  for (int kset = 0; kset < (1 << up_pairs); ++kset) {
    if (__builtin_popcount(static_cast<unsigned>(kset)) != k) continue;
    for (int lset = 0; lset < (1 << down_pairs); ++lset) {
      if (__builtin_popcount(static_cast<unsigned>(lset)) != l) continue;
      for (int up = 0; up < (1 << m_plus); ++up) {
        bool ok = true;
        for (int i = 0; i < up_pairs && ok; ++i) ok = !((kset >> i) & 1) || ascending(up, i);
        if (!ok) continue;
        const int up_twos = __builtin_popcount(static_cast<unsigned>(up));
        for (int down = 0; down < (1 << m_minus); ++down) {
          bool fine = true;
          for (int i = 0; i < down_pairs && fine; ++i) fine = !((lset >> i) & 1) || ascending(down, i);
          if (!fine) continue;
          const int down_twos = __builtin_popcount(static_cast<unsigned>(down));
          if ((m_plus - up_twos) - (m_minus - down_twos) == p1 && up_twos - down_twos == p2) ++total;
        }
      }
    }
  }
  return total;
}

void VerificationReport::add(std::string claim, std::string params,
                             std::vector<std::pair<std::string, std::string>> values) {
  ReportRow row{std::move(claim), std::move(params), std::move(values), true};
  for (const auto& [method, value] : row.values) row.pass = row.pass && value == row.values.front().second;
  rows_.push_back(std::move(row));
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return !r.pass; }));
}

void VerificationReport::corrupt_first_row() {
  if (rows_.empty() || rows_.front().values.empty()) return;
  auto& row = rows_.front();
  auto& value = row.values.front().second;
  const Rational bumped = Rational(value) + 1;
  value = to_string(bumped);
  row.pass = true;
  for (const auto& [method, v] : row.values) row.pass = row.pass && v == row.values.front().second;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& [method, value] : row.values) values.push_back({{"method", method}, {"value", value}});
    rows.push_back({{"claim", row.claim}, {"params", row.params}, {"values", values}, {"pass", row.pass}});
  }
  nlohmann::ordered_json doc = {{"passed", passed()},
                                {"rows", rows_.size()},
                                {"failures", failures()},
                                {"results", rows}};
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
  std::string out = "claim,params,method,value,pass\n";
  for (const auto& row : rows_) {
    for (const auto& [method, value] : row.values) {
      out += csv_field(row.claim) + ',' + csv_field(row.params) + ',' + csv_field(method) + ',' +
             csv_field(value) + ',' + (row.pass ? "true" : "false") + '\n';
    }
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    out << (row.pass ? "PASS " : "FAIL ") << row.claim << " [" << row.params << "]";
    for (const auto& [method, value] : row.values) out << ' ' << method << '=' << value;
    out << '\n';
  }
  out << rows_.size() << " rows, " << failures() << " failing\n";
  return out.str();
}

VerificationReport verify_all(const VerifyOptions& options) {
  require(options.max_rn >= 0 && options.max_d >= 0 && options.x_bound >= 0,
          "verify_all: bounds must be non-negative");
  const std::uint64_t budget = options.budget;
  VerificationReport report;
  auto str = [](const BigInt& v) { return to_string(v); };

  // regular multigraph counts by every method
  std::vector<std::pair<int, int>> shapes{{0, 1}};
  for (int r = 1; r <= options.max_rn; ++r)
    for (int n = 1; n * r <= options.max_rn; ++n) shapes.emplace_back(n, r);
  for (const auto& [n, r] : shapes) {
    const int rn = n * r;
    for (int d = 1; d <= std::min(options.max_d, std::max(rn, 1)); ++d) {
      const auto p = params({{"n", n}, {"r", r}, {"d", d}});
      report.add("planar-matching", p,
                 {{"brute", str(brute_g(n, r, d, budget))},
                  {"walks", str(signed_toeplitz_sum(d, n, r, BlockVariant::nonincreasing))},
                  {"tableaux", str(count_tableau_pairs(n, r, d, RowCondition::strict_descent, budget))}});
      report.add("planar-subgraph", p,
                 {{"brute", str(brute_g_hat(n, r, d, budget))},
                  {"walks", str(signed_toeplitz_sum(d, n, r, BlockVariant::increasing))},
                  {"tableaux", str(count_tableau_pairs(n, r, d, RowCondition::weak_ascent, budget))}});
      if (d <= 3) {
        report.add("chamber-walks", p,
                   {{"brute", str(brute_g(n, r, d, budget))}, {"chamber", str(count_chamber_walks(d, n, r, budget))}});
      }
    }
  }

  for (int n = 1; n <= options.max_rn; ++n) {
    const BigInt catalan = binomial(2 * n, n) / (n + 1);
    report.add("catalan", params({{"n", n}}),
               {{"closed-form", str(catalan)},
                {"brute", str(brute_g(n, 1, 2, budget))},
                {"walks", str(signed_toeplitz_sum(2, n, 1, BlockVariant::nonincreasing))}});
  }

  for (int d = 2; d <= options.max_d; ++d) {
    const auto coeffs = x_coefficients(gessel_determinant(d, options.x_bound));
    for (int m = 0; 2 * m <= options.x_bound && m <= options.max_rn; ++m) {
      const Rational scaled = coeffs[2 * m] * Rational(factorial(m)) * Rational(factorial(m));
      report.add("bessel-determinant", params({{"d", d}, {"m", m}}),
                 {{"series", to_string(scaled)}, {"brute", str(brute_u(m, d, budget))}});
    }
  }

  for (int d = 1; d <= std::min(3, options.max_d); ++d) {
    for (int m = 0; m <= options.max_rn; ++m) {
      report.add("interleaved-walks", params({{"d", d}, {"m", m}}),
                 {{"walks", str(signed_interleaved_sum(d, m))},
                  {"brute", str(binomial(2 * m, m) * brute_u(m, d, budget))}});
    }
  }

  if (options.max_d >= 2) {
    const auto coeffs = x_coefficients(two_regular_generating_function(options.x_bound));
    for (int n = 0; 4 * n <= options.x_bound && 2 * n <= options.max_rn; ++n) {
      const Rational scaled = coeffs[4 * n] * Rational(factorial(2 * n)) * Rational(factorial(2 * n));
      report.add("two-regular-series", params({{"n", n}}),
                 {{"series", to_string(scaled)}, {"brute", str(brute_g(n, 2, 2, budget))}});
    }
    const auto direct = x_coefficients(gessel_determinant(2, options.x_bound));
    const auto alt = x_coefficients(gessel_determinant_alt(options.x_bound));
    for (int k = 0; k <= options.x_bound; ++k) {
      report.add("bessel-determinant-alt", params({{"power", k}}),
                 {{"determinant", to_string(direct[k])}, {"primitives", to_string(alt[k])}});
    }
  }

  const std::vector<std::pair<int, int>> targets{{0, 0}, {-1, 1}};
  for (const auto& [p1, p2] : targets) {
    for (int mp = 0; mp <= options.max_rn; mp += 2) {
      for (int mm = 0; mm <= options.max_rn; mm += 2) {
        const Rational scale = Rational(factorial(mp)) * Rational(factorial(mm));
        const auto p = params({{"p1", p1}, {"p2", p2}, {"m+", mp}, {"m-", mm}});
        report.add("two-block-walks", p,
                   {{"formula", to_string(two_block_formula(p1, p2, mp, mm, WalkFlavor::prime) * scale)},
                    {"direct", str(two_block_walks(mp, mm, p1, p2))}});
        report.add("two-block-walks-interleaved", p,
                   {{"formula", to_string(two_block_formula(p1, p2, mp, mm, WalkFlavor::doubleprime) * scale)},
                    {"direct", str(interleaved_two_block_walks(mp, mm, p1, p2, budget))}});
      }
    }
  }

  for (const auto& [p1, p2] : targets) {
    for (int mp = 0; mp <= std::min(4, options.max_rn); mp += 2) {
      for (int mm = 0; mm <= std::min(4, options.max_rn); mm += 2) {
        BigInt alternating = 0;
        for (int k = 0; 2 * k <= mp; ++k)
          for (int l = 0; 2 * l <= mm; ++l)
            alternating += ((k + l) % 2 == 0 ? 1 : -1) * ascending_pair_walks(k, l, mp, mm, p1, p2);
        report.add("pair-inclusion-exclusion", params({{"p1", p1}, {"p2", p2}, {"m+", mp}, {"m-", mm}}),
                   {{"alternating", str(alternating)}, {"direct", str(two_block_walks(mp, mm, p1, p2))}});
      }
    }
  }

  for (const auto& [n, r] : shapes) {
    BigInt weighted = 0;
    for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) { weighted += configuration_count_of(g); },
                        {budget, {}});
    report.add("configuration-weight", params({{"n", n}, {"r", r}}),
               {{"weighted-sum", str(weighted)}, {"factorial", str(factorial(n * r))}});
  }

  for (const auto& [n, r] : shapes) {
    if (n * r > std::min(5, options.max_rn)) continue;
    BigInt total = 0;
    BigInt roundtrip = 0;
    for_each_configuration(n, r, [&](const Configuration& f) {
      ++total;
      const auto back = crossing_pairing(chain_length_walk(f)).to_configuration();
      if (back && *back == f) ++roundtrip;
    }, {budget, {}});
    report.add("chain-walk-roundtrip", params({{"n", n}, {"r", r}}),
               {{"configurations", str(total)}, {"roundtrip", str(roundtrip)}});
  }

  for (const auto& [n, r] : shapes) {
    if (n * r > std::min(4, options.max_rn)) continue;
    for (int d = 1; d <= std::min(3, options.max_d); ++d) {
      std::set<RepresentativeWalk> images;
      BigInt configurations = 0;
      for_each_configuration(n, r, [&](const Configuration& f) {
        const auto pairing = f.pairing();
        if (!nonincreasing_blocks(pairing, r, false) || !nonincreasing_blocks(pairing, r, true)) return;
        std::vector<int> seq(pairing.begin(), pairing.end());
        if (longest_increasing(seq) > d) return;
        ++configurations;
        images.insert(chain_length_walk(f, d));
      }, {budget, {}});
      std::vector<Point> endpoints;
      for (const auto& t : toeplitz_points(d)) endpoints.push_back(t.coords);
      BigInt walks = 0;
      BigInt matched = 0;
      for_each_restricted_walk(d, n, r, endpoints, BlockVariant::nonincreasing, [&](const RepresentativeWalk& w) {
        if (!check_last_appearance_order(w).satisfied) return;
        ++walks;
        if (images.contains(w)) ++matched;
      }, budget);
      report.add("walk-image", params({{"n", n}, {"r", r}, {"d", d}}),
                 {{"configurations", str(configurations)}, {"walks", str(walks)}, {"images", str(matched)}});
    }
  }

  if (options.max_d >= 2) {
    const int d = 2;
    std::vector<Point> endpoints;
    for (const auto& t : toeplitz_points(d)) endpoints.push_back(t.coords);
    for (const auto& [n, r] : shapes) {
      if (n * r > std::min(4, options.max_rn)) continue;
      BigInt violating = 0;
      BigInt good = 0;
      for_each_restricted_walk(d, n, r, endpoints, BlockVariant::nonincreasing, [&](const RepresentativeWalk& w) {
        const auto check = check_last_appearance_order(w);
        if (check.satisfied) return;
        ++violating;
        const RepresentativeWalk image = swap_violating_labels(w);
        const auto from = as_toeplitz_point(endpoint(w));
        const auto to = as_toeplitz_point(endpoint(image));
        if (!to || !is_nonincreasing_blocks(image)) return;
        int moved = 0;
        for (int k = 0; k < d; ++k) moved += from->permutation[k] != to->permutation[k];
        const auto again = check_last_appearance_order(image);
        if (to->sign == -from->sign && moved == 2 && !again.satisfied &&
            again.first_violation == check.first_violation && swap_violating_labels(image) == w)
          ++good;
      }, budget);
      report.add("violation-involution", params({{"n", n}, {"r", r}, {"d", d}}),
                 {{"violating", str(violating)}, {"involutive", str(good)}});
    }
  }

  if (options.corrupt_fixture) report.corrupt_first_row();
  return report;
}

}  // namespace planar::oracle
