#include "planar/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace planar {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Patience sorting over a sequence of keys. With `strict` the chain must be
// strictly increasing, otherwise weakly increasing.
int longest_chain(const std::vector<int>& keys, bool strict) {
  std::vector<int> tails;
  for (int k : keys) {
    auto it = strict ? std::lower_bound(tails.begin(), tails.end(), k)
                     : std::upper_bound(tails.begin(), tails.end(), k);
    if (it == tails.end()) {
      tails.push_back(k);
    } else {
      *it = k;
    }
  }
  return static_cast<int>(tails.size());
}

std::vector<int> sorted_v_keys(std::vector<Edge> edges, bool v_descending) {
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    return v_descending ? a.v > b.v : a.v < b.v;
  });
  std::vector<int> keys;
  keys.reserve(edges.size());
  for (const Edge& e : edges) keys.push_back(e.v);
  return keys;
}

}  // namespace

BipartiteMultigraph::BipartiteMultigraph(int n, int r, std::vector<std::vector<int>> mult)
    : n_(n), r_(r), mult_(std::move(mult)) {
  require(n >= 0 && r >= 0, "multigraph: n and r must be non-negative");
  require(static_cast<int>(mult_.size()) == n, "multigraph: expected n rows");
  std::vector<int> col(n, 0);
  for (const auto& row : mult_) {
    require(static_cast<int>(row.size()) == n, "multigraph: expected n columns");
    int sum = 0;
    for (int v = 0; v < n; ++v) {
      require(row[v] >= 0, "multigraph: negative multiplicity");
      sum += row[v];
      col[v] += row[v];
    }
    require(sum == r, "multigraph: row sum differs from r");
  }
  for (int c : col) require(c == r, "multigraph: column sum differs from r");
}

std::vector<Edge> BipartiteMultigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n_) * r_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      for (int t = 0; t < mult_[u][v]; ++t) out.push_back({u, v});
  return out;
}

Configuration::Configuration(int n, int r, std::vector<int> pairing)
    : n_(n), r_(r), pairing_(std::move(pairing)) {
  require(n >= 0 && r >= 0, "configuration: n and r must be non-negative");
  const int m = n * r;
  require(static_cast<int>(pairing_.size()) == m, "configuration: pairing length must be rn");
  std::vector<bool> seen(m, false);
  for (int x : pairing_) {
    require(x >= 0 && x < m && !seen[x], "configuration: pairing is not a bijection");
    seen[x] = true;
  }
}

Configuration Configuration::from_one_based(int n, int r, std::span<const int> pairing) {
  std::vector<int> p(pairing.begin(), pairing.end());
  for (int& x : p) --x;
  return Configuration(n, r, std::move(p));
}

std::vector<int> Configuration::one_based() const {
  std::vector<int> out(pairing_);
  for (int& x : out) ++x;
  return out;
}

QuasiConfiguration::QuasiConfiguration(int n, int r, std::vector<std::optional<int>> pairing)
    : n_(n), r_(r), pairing_(std::move(pairing)) {
  const int m = n * r;
  require(n >= 0 && r >= 0, "quasi configuration: n and r must be non-negative");
  require(static_cast<int>(pairing_.size()) == m, "quasi configuration: length must be rn");
  std::vector<bool> seen(m, false);
  for (const auto& x : pairing_) {
    if (!x) continue;
    require(*x >= 0 && *x < m && !seen[*x], "quasi configuration: pairing is not injective");
    seen[*x] = true;
  }
}

bool QuasiConfiguration::is_complete() const {
  return std::all_of(pairing_.begin(), pairing_.end(), [](const auto& x) { return x.has_value(); });
}

std::optional<Configuration> QuasiConfiguration::to_configuration() const {
  if (!is_complete()) return std::nullopt;
  std::vector<int> p;
  p.reserve(pairing_.size());
  for (const auto& x : pairing_) p.push_back(*x);
  return Configuration(n_, r_, std::move(p));
}

int planar_matching_size(const BipartiteMultigraph& g) {
  // Within one u the keys run downwards, so a strict chain uses each u once.
  return longest_chain(sorted_v_keys(g.edges(), true), true);
}

int planar_matching_size(const Configuration& f) {
  return longest_chain({f.pairing().begin(), f.pairing().end()}, true);
}

int planar_subgraph_size(const BipartiteMultigraph& g) {
  return longest_chain(sorted_v_keys(g.edges(), false), false);
}

int planar_subgraph_size(const Configuration& f) {
  // endpoints are never shared in a configuration
  return planar_matching_size(f);
}

std::vector<int> planar_matching_lengths_ending_at(const Configuration& f) {
  std::vector<int> tails;
  std::vector<int> out;
  out.reserve(f.size());
  for (int v : f.pairing()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    out.push_back(static_cast<int>(it - tails.begin()) + 1);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return out;
}

Configuration expand_configuration(const BipartiteMultigraph& g) {
  const int n = g.n();
  const int r = g.r();
  std::vector<int> pairing(static_cast<std::size_t>(n) * r, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int t = g.multiplicity(u, v);
      if (t == 0) continue;
      int i = 0;  // edges (u, v') with v' after v
      for (int w = v + 1; w < n; ++w) i += g.multiplicity(u, w);
      int j = 0;  // edges (u', v) with u' after u
      for (int w = u + 1; w < n; ++w) j += g.multiplicity(w, v);
      // 1-based copies: u^{i+s} pairs with v^{j+t-s+1}, s = 1..t
      for (int s = 1; s <= t; ++s) {
        pairing[u * r + (i + s - 1)] = v * r + (j + t - s);
      }
    }
  }
  return Configuration(n, r, std::move(pairing));
}

BipartiteMultigraph project(const Configuration& f) {
  const int n = f.n();
  const int r = f.r();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int i = 0; i < f.size(); ++i) ++mult[i / r][f.partner(i) / r];
  return BipartiteMultigraph(n, r, std::move(mult));
}

Configuration transpose(const Configuration& f) {
  std::vector<int> inv(f.size());
  for (int i = 0; i < f.size(); ++i) inv[f.partner(i)] = i;
  return Configuration(f.n(), f.r(), std::move(inv));
}

namespace {

class MultigraphEnumerator {
 public:
  MultigraphEnumerator(int n, int r, const std::function<void(const BipartiteMultigraph&)>& visit,
                       const EnumerationOptions& options)
      : n_(n), r_(r), visit_(visit), options_(options), meter_(options.budget),
        mult_(n, std::vector<int>(n, 0)), row_left_(n, r), col_left_(n, r) {}

  void run() {
    if (options_.shard.count == 0) throw InvalidInput("shard count must be positive");
    fill(0);
  }

 private:
  void fill(int cell) {
    if (cell == n_ * n_) {
      meter_.charge();
      if (emitted_++ % options_.shard.count == options_.shard.index) {
        visit_(BipartiteMultigraph(n_, r_, mult_));
      }
      return;
    }
    const int u = cell / n_;
    const int v = cell % n_;
    const int hi = std::min(row_left_[u], col_left_[v]);
    int lo = 0;
    // the last cell in a row or column is forced
    if (v == n_ - 1) lo = row_left_[u];
    if (u == n_ - 1) lo = std::max(lo, col_left_[v]);
    for (int x = hi; x >= lo; --x) {
      mult_[u][v] = x;
      row_left_[u] -= x;
      col_left_[v] -= x;
      fill(cell + 1);
      row_left_[u] += x;
      col_left_[v] += x;
    }
    mult_[u][v] = 0;
  }

  int n_;
  int r_;
  const std::function<void(const BipartiteMultigraph&)>& visit_;
  const EnumerationOptions& options_;
  BudgetMeter meter_;
  std::uint64_t emitted_ = 0;
  std::vector<std::vector<int>> mult_;
  std::vector<int> row_left_;
  std::vector<int> col_left_;
};

}  // namespace

void for_each_multigraph(int n, int r,
                         const std::function<void(const BipartiteMultigraph&)>& visit,
                         const EnumerationOptions& options) {
  if (n < 0 || r < 0) throw InvalidInput("enumerate_multigraphs: n and r must be non-negative");
  MultigraphEnumerator(n, r, visit, options).run();
}

std::vector<BipartiteMultigraph> enumerate_multigraphs(int n, int r,
                                                       const EnumerationOptions& options) {
  std::vector<BipartiteMultigraph> out;
  for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) { out.push_back(g); }, options);
  return out;
}

void for_each_configuration(int n, int r,
                            const std::function<void(const Configuration&)>& visit,
                            const EnumerationOptions& options) {
  if (n < 0 || r < 0) throw InvalidInput("enumerate_configurations: n and r must be non-negative");
  if (options.shard.count == 0) throw InvalidInput("shard count must be positive");
  std::vector<int> perm(static_cast<std::size_t>(n) * r);
  std::iota(perm.begin(), perm.end(), 0);
  BudgetMeter meter(options.budget);
  std::uint64_t emitted = 0;
  do {
    meter.charge();
    if (emitted++ % options.shard.count == options.shard.index) {
      visit(Configuration(n, r, perm));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

BigInt configuration_count_of(const BipartiteMultigraph& g) {
  BigInt num = 1;
  const BigInt rf = factorial(static_cast<unsigned>(g.r()));
  for (int i = 0; i < 2 * g.n(); ++i) num *= rf;
  BigInt den = 1;
  for (const auto& row : g.matrix())
    for (int t : row) den *= factorial(static_cast<unsigned>(t));
  if (num % den != 0) throw InvalidInput("configuration count is not integral");
  return num / den;
}

}  // namespace planar
