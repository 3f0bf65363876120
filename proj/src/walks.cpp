#include "planar/walks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace planar {

namespace {

constexpr std::size_t kMaxDpStates = 10'000'000;
constexpr int kMaxSignedSumDimension = 8;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

void check_labels(const std::vector<int>& labels, int d, const char* what) {
  for (int x : labels) require(x >= 1 && x <= d, std::string(what) + ": label outside 1..d");
}

std::vector<int> label_counts(const std::vector<int>& labels, int d) {
  std::vector<int> c(d, 0);
  for (int x : labels) ++c[x - 1];
  return c;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

// Counts sequences of blocks with prescribed label multiplicities. The count
// only depends on the multiset of multiplicities, so states are memoized by
// their sorted non-zero entries.
class BlockSequenceCounter {
 public:
  BlockSequenceCounter(int r, BlockVariant variant) : r_(r), variant_(variant) {}

  BigInt count(std::vector<int> counts) {
    counts.erase(std::remove(counts.begin(), counts.end(), 0), counts.end());
    std::sort(counts.begin(), counts.end(), std::greater<>());
    if (counts.empty()) return 1;
    const int total = std::accumulate(counts.begin(), counts.end(), 0);
    if (r_ == 0 || total % r_ != 0) return 0;
    if (auto it = memo_.find(counts); it != memo_.end()) return it->second;
    if (memo_.size() >= kMaxDpStates) throw BudgetExceeded("block sequence DP exceeded its state cap");
    BigInt result = 0;
    std::vector<int> rest = counts;
    take(rest, 0, r_, result);
    memo_.emplace(std::move(counts), result);
    return result;
  }

 private:
  // Removes one block (r labels) from `rest` in every admissible way.
  void take(std::vector<int>& rest, std::size_t label, int left, BigInt& acc) {
    if (left == 0) {
      acc += count(rest);
      return;
    }
    if (label == rest.size()) return;
    const int cap = variant_ == BlockVariant::increasing ? std::min(1, rest[label])
                                                         : std::min(left, rest[label]);
    for (int t = 0; t <= cap; ++t) {
      rest[label] -= t;
      take(rest, label + 1, left - t, acc);
      rest[label] += t;
    }
  }

  int r_;
  BlockVariant variant_;
  std::unordered_map<std::vector<int>, BigInt, VectorHash> memo_;
};

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, visit);
    cur.pop_back();
  }
}

// All label sequences of length rn over [d] whose blocks obey the variant,
// in lexicographic order.
std::vector<std::vector<int>> block_sequences(int d, int n, int r, BlockVariant variant,
                                              BudgetMeter& meter) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int m = n * r;
  std::function<void()> rec = [&]() {
    const int pos = static_cast<int>(cur.size());
    if (pos == m) {
      meter.charge();
      out.push_back(cur);
      return;
    }
    int lo = 1;
    int hi = d;
    if (pos % r != 0) {
      if (variant == BlockVariant::nonincreasing) {
        hi = cur.back();
      } else {
        lo = cur.back() + 1;
      }
    }
    for (int x = lo; x <= hi; ++x) {
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

bool in_chamber(const Point& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] < x[i]) return false;
  return true;
}

}  // namespace

Walk::Walk(int d, std::vector<int> steps) : d_(d), steps_(std::move(steps)) {
  require(d >= 0, "walk: dimension must be non-negative");
  for (int s : steps_) require(s != 0 && std::abs(s) <= d, "walk: step label outside 1..d");
}

RepresentativeWalk::RepresentativeWalk(int d, int n, int r, std::vector<int> up,
                                       std::vector<int> down)
    : d_(d), n_(n), r_(r), up_(std::move(up)), down_(std::move(down)) {
  require(d >= 0 && n >= 0 && r >= 0, "walk: parameters must be non-negative");
  require(static_cast<int>(up_.size()) == n * r && static_cast<int>(down_.size()) == n * r,
          "walk: both step sequences must have length rn");
  check_labels(up_, d, "walk");
  check_labels(down_, d, "walk");
}

Walk RepresentativeWalk::as_walk() const {
  std::vector<int> steps(up_);
  for (int x : down_) steps.push_back(-x);
  return Walk(d_, std::move(steps));
}

ToeplitzPoint toeplitz_point(const std::vector<int>& permutation) {
  const int d = static_cast<int>(permutation.size());
  std::vector<bool> seen(d, false);
  for (int x : permutation) {
    require(x >= 0 && x < d && !seen[x], "toeplitz_point: not a permutation");
    seen[x] = true;
  }
  ToeplitzPoint t;
  t.permutation = permutation;
  t.coords.resize(d);
  for (int k = 0; k < d; ++k) t.coords[k] = k - permutation[k];
  t.sign = permutation_sign(permutation);
  return t;
}

std::vector<ToeplitzPoint> toeplitz_points(int d) {
  require(d >= 0, "toeplitz_points: negative dimension");
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ToeplitzPoint> out;
  do {
    out.push_back(toeplitz_point(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<ToeplitzPoint> as_toeplitz_point(const Point& p) {
  const int d = static_cast<int>(p.size());
  std::vector<int> perm(d);
  std::vector<bool> seen(d, false);
  for (int k = 0; k < d; ++k) {
    const int x = k - p[k];
    if (x < 0 || x >= d || seen[x]) return std::nullopt;
    seen[x] = true;
    perm[k] = x;
  }
  return toeplitz_point(perm);
}

Point endpoint(const Walk& w) {
  Point p(w.dimension(), 0);
  for (int s : w.steps()) p[std::abs(s) - 1] += s > 0 ? 1 : -1;
  return p;
}

Point endpoint(const RepresentativeWalk& w) {
  Point p(w.dimension(), 0);
  for (int x : w.up()) ++p[x - 1];
  for (int x : w.down()) --p[x - 1];
  return p;
}

bool blocks_satisfy(const std::vector<int>& labels, int r, BlockVariant variant) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (i % static_cast<std::size_t>(r) == 0) continue;
    const bool ok = variant == BlockVariant::nonincreasing ? labels[i - 1] >= labels[i]
                                                           : labels[i - 1] < labels[i];
    if (!ok) return false;
  }
  return true;
}

bool is_nonincreasing_blocks(const RepresentativeWalk& w) {
  return blocks_satisfy(w.up(), w.r(), BlockVariant::nonincreasing) &&
         blocks_satisfy(w.down(), w.r(), BlockVariant::nonincreasing);
}

bool is_increasing_blocks(const RepresentativeWalk& w) {
  return blocks_satisfy(w.up(), w.r(), BlockVariant::increasing) &&
         blocks_satisfy(w.down(), w.r(), BlockVariant::increasing);
}

BigInt count_block_sequences(int d, int n, int r, const std::vector<int>& counts,
                             BlockVariant variant) {
  require(d >= 0 && n >= 0 && r >= 0, "count_block_sequences: parameters must be non-negative");
  require(static_cast<int>(counts.size()) == d, "count_block_sequences: need one count per label");
  int total = 0;
  for (int c : counts) {
    if (c < 0) return 0;
    total += c;
  }
  if (total != n * r) return 0;
  return BlockSequenceCounter(r, variant).count(counts);
}

BigInt count_restricted_walks(int d, int n, int r, const Point& p, BlockVariant variant) {
  require(d >= 0 && n >= 0 && r >= 0, "count_restricted_walks: parameters must be non-negative");
  require(static_cast<int>(p.size()) == d, "count_restricted_walks: endpoint dimension mismatch");
  if (std::accumulate(p.begin(), p.end(), 0) != 0) return 0;
  const int m = n * r;
  if (d == 0) return m == 0 ? 1 : 0;
  BlockSequenceCounter counter(r, variant);
  BigInt total = 0;
  std::vector<int> cur;
  compositions(m, d, cur, [&](const std::vector<int>& up) {
    std::vector<int> down(d);
    for (int k = 0; k < d; ++k) {
      down[k] = up[k] - p[k];
      if (down[k] < 0) return;
    }
    const BigInt a = counter.count(up);
    if (a == 0) return;
    total += a * counter.count(down);
  });
  return total;
}

BigInt signed_toeplitz_sum(int d, int n, int r, BlockVariant variant) {
  require(d >= 0 && n >= 0 && r >= 0, "signed_toeplitz_sum: parameters must be non-negative");
  if (d > kMaxSignedSumDimension) {
    throw BudgetExceeded("signed_toeplitz_sum: d > 8 is beyond the permutation budget");
  }
  const int m = n * r;
  if (d == 0) return m == 0 ? 1 : 0;
  BlockSequenceCounter counter(r, variant);
  BigInt total = 0;
  std::vector<int> cur;
  std::vector<int> perm(d);
  std::vector<bool> used(d, false);
  std::vector<int> down(d);
  compositions(m, d, cur, [&](const std::vector<int>& up) {
    const BigInt a = counter.count(up);
    if (a == 0) return;
    BigInt inner = 0;
    // Walk down the permutation tree; the Toeplitz coordinate k - pi(k)
    // must not exceed the up count in that direction.
    std::function<void(int)> assign = [&](int k) {
      if (k == d) {
        const BigInt b = counter.count(down);
        if (b != 0) inner += permutation_sign(perm) * b;
        return;
      }
      for (int x = 0; x < d; ++x) {
        if (used[x]) continue;
        const int c = up[k] - (k - x);
        if (c < 0) continue;
        used[x] = true;
        perm[k] = x;
        down[k] = c;
        assign(k + 1);
        used[x] = false;
      }
    };
    assign(0);
    total += a * inner;
  });
  return total;
}

BigInt signed_interleaved_sum(int d, int m) {
  require(d >= 0 && m >= 0, "signed_interleaved_sum: parameters must be non-negative");
  return binomial(2 * static_cast<unsigned>(m), static_cast<unsigned>(m)) *
         signed_toeplitz_sum(d, m, 1, BlockVariant::nonincreasing);
}

QuasiConfiguration crossing_pairing(const RepresentativeWalk& w) {
  const int m = w.length();
  std::vector<std::optional<int>> pairing(m);
  for (int k = 1; k <= w.dimension(); ++k) {
    std::vector<int> a;
    std::vector<int> b;
    for (int i = 0; i < m; ++i) {
      if (w.up()[i] == k) a.push_back(i);
      if (w.down()[i] == k) b.push_back(i);
    }
    const std::size_t t = std::min(a.size(), b.size());
    // Surplus up elements are dropped from the end, surplus down elements
    // from the front.
    const std::size_t b0 = b.size() - t;
    for (std::size_t s = 0; s < t; ++s) pairing[a[s]] = b[b0 + t - 1 - s];
  }
  return QuasiConfiguration(w.n(), w.r(), std::move(pairing));
}

RepresentativeWalk chain_length_walk(const Configuration& f, int d) {
  if (d <= 0) d = f.size();
  std::vector<int> up = planar_matching_lengths_ending_at(f);
  std::vector<int> down(f.size());
  for (int i = 0; i < f.size(); ++i) {
    require(up[i] <= d, "chain_length_walk: label exceeds the working dimension");
    down[f.partner(i)] = up[i];
  }
  return RepresentativeWalk(d, f.n(), f.r(), std::move(up), std::move(down));
}

LastAppearanceCheck check_last_appearance_order(const RepresentativeWalk& w) {
  const int m = w.length();
  const int d = w.dimension();
  // positions of each label among the down steps
  std::vector<std::vector<int>> down_pos(d + 1);
  for (int j = 0; j < m; ++j) down_pos[w.down()[j]].push_back(j);
  std::vector<int> seen(d + 2, 0);
  for (int u = 0; u < m; ++u) {
    const int a = w.up()[u];
    ++seen[a];
    if (a == 1) continue;
    const int k = seen[a];
    const int l = seen[a - 1];
    if (l == 0) return {false, u};
    const auto& lower = down_pos[a - 1];
    const auto& upper = down_pos[a];
    if (static_cast<int>(lower.size()) < l) continue;
    if (static_cast<int>(upper.size()) < k) return {false, u};
    const int p_lower = lower[lower.size() - l];
    const int p_upper = upper[upper.size() - k];
    if (!(p_lower < p_upper)) return {false, u};
  }
  return {true, std::nullopt};
}

RepresentativeWalk swap_violating_labels(const RepresentativeWalk& w) {
  const auto check = check_last_appearance_order(w);
  require(!check.satisfied, "swap_violating_labels: walk satisfies the last-appearance order");
  const int m = w.length();
  const int r = w.r();
  const int ubar = *check.first_violation;
  const int hi = w.up()[ubar];
  const int lo = hi - 1;
  int l = 0;
  for (int i = 0; i <= ubar; ++i) l += w.up()[i] == lo;
  int vbar = m;  // first unchanged down position
  if (l > 0) {
    std::vector<int> lower;
    for (int j = 0; j < m; ++j)
      if (w.down()[j] == lo) lower.push_back(j);
    vbar = lower[lower.size() - l];
  }
  auto up = w.up();
  auto down = w.down();
  // Inside each block the changed positions carrying lo or hi are
  // contiguous; give the first |#lo| of them hi and the rest lo.
  auto swap_block = [&](std::vector<int>& labels, int begin, int end) {
    std::vector<int> idx;
    int n_lo = 0;
    for (int i = begin; i < end; ++i) {
      if (labels[i] == hi || labels[i] == lo) {
        idx.push_back(i);
        n_lo += labels[i] == lo;
      }
    }
    for (std::size_t t = 0; t < idx.size(); ++t) labels[idx[t]] = static_cast<int>(t) < n_lo ? hi : lo;
  };
  for (int block = 0; block < m; block += r) {
    swap_block(up, std::max(block, ubar + 1), block + r);
    swap_block(down, block, std::min(block + r, vbar));
  }
  return RepresentativeWalk(w.dimension(), w.n(), r, std::move(up), std::move(down));
}

void for_each_restricted_walk(int d, int n, int r, const std::vector<Point>& endpoints,
                              BlockVariant variant,
                              const std::function<void(const RepresentativeWalk&)>& visit,
                              std::uint64_t budget) {
  require(d >= 0 && n >= 0 && r >= 0, "for_each_restricted_walk: parameters must be non-negative");
  for (const auto& p : endpoints) {
    require(static_cast<int>(p.size()) == d, "for_each_restricted_walk: endpoint dimension mismatch");
  }
  BudgetMeter meter(budget);
  const auto seqs = block_sequences(d, n, r, variant, meter);
  std::map<std::vector<int>, std::vector<std::size_t>> by_counts;
  for (std::size_t i = 0; i < seqs.size(); ++i) by_counts[label_counts(seqs[i], d)].push_back(i);
  for (const auto& up : seqs) {
    const auto c = label_counts(up, d);
    std::vector<std::size_t> matches;
    for (const auto& p : endpoints) {
      std::vector<int> need(d);
      for (int k = 0; k < d; ++k) need[k] = c[k] - p[k];
      if (auto it = by_counts.find(need); it != by_counts.end()) {
        matches.insert(matches.end(), it->second.begin(), it->second.end());
      }
    }
    std::sort(matches.begin(), matches.end());
    matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
    for (std::size_t j : matches) {
      meter.charge();
      visit(RepresentativeWalk(d, n, r, up, seqs[j]));
    }
  }
}

BigInt count_chamber_walks(int d, int n, int r, std::uint64_t budget) {
  require(d >= 0 && n >= 0 && r >= 0, "count_chamber_walks: parameters must be non-negative");
  if (d == 0) return n * r == 0 ? 1 : 0;
  BudgetMeter meter(budget);
  // Non-increasing blocks; reversing a block makes it non-decreasing.
  std::vector<std::vector<int>> blocks;
  {
    BudgetMeter block_meter(budget);
    blocks = block_sequences(d, 1, r, BlockVariant::nonincreasing, block_meter);
  }
  std::map<Point, BigInt> states{{Point(d, 0), BigInt(1)}};
  auto advance = [&](int direction) {
    std::map<Point, BigInt> next;
    for (const auto& [pos, ways] : states) {
      for (const auto& block : blocks) {
        meter.charge();
        Point x = pos;
        bool ok = true;
        for (int s = 0; s < r && ok; ++s) {
          // negative steps are replayed in reverse order
          const int label = direction > 0 ? block[s] : block[r - 1 - s];
          x[label - 1] += direction;
          ok = in_chamber(x);
        }
        if (ok) next[x] += ways;
      }
    }
    if (next.size() > kMaxDpStates) throw BudgetExceeded("chamber walk DP exceeded its state cap");
    states = std::move(next);
  };
  for (int i = 0; i < n; ++i) advance(+1);
  for (int i = 0; i < n; ++i) advance(-1);
  auto it = states.find(Point(d, 0));
  return it == states.end() ? BigInt(0) : it->second;
}

}  // namespace planar
