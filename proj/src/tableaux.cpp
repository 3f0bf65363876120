#include "planar/tableaux.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace planar {

struct TableauBuilder {
  static YoungTableau make(std::vector<std::vector<int>> rows) {
    YoungTableau t;
    t.rows_ = std::move(rows);
    return t;
  }
  static std::vector<std::vector<int>>& rows(YoungTableau& t) { return t.rows_; }
};

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Bumps x through `rows`, returning the box that was created.
Box bump_in(std::vector<std::vector<int>>& rows, int x) {
  for (int row = 0;; ++row) {
    if (row == static_cast<int>(rows.size())) {
      rows.push_back({x});
      return {row, 0};
    }
    auto& r = rows[row];
    auto it = std::upper_bound(r.begin(), r.end(), x);
    if (it == r.end()) {
      r.push_back(x);
      return {row, static_cast<int>(r.size()) - 1};
    }
    std::swap(x, *it);
  }
}

}  // namespace

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::set<int> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    require(!row.empty(), "tableau: empty row above a non-empty row");
    if (i > 0) require(row.size() <= rows_[i - 1].size(), "tableau: row lengths must weakly decrease");
    for (std::size_t j = 0; j < row.size(); ++j) {
      require(row[j] > 0, "tableau: entries must be positive");
      require(seen.insert(row[j]).second, "tableau: duplicate entry");
      if (j > 0) require(row[j - 1] < row[j], "tableau: rows must strictly increase");
      if (i > 0) require(rows_[i - 1][j] < row[j], "tableau: columns must strictly increase");
    }
  }
}

std::vector<int> YoungTableau::shape() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(static_cast<int>(row.size()));
  return out;
}

int YoungTableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

bool YoungTableau::contains(int value) const {
  for (const auto& row : rows_)
    if (std::binary_search(row.begin(), row.end(), value)) return true;
  return false;
}

std::vector<int> YoungTableau::row_index_by_value() const {
  const int m = size();
  std::vector<int> out(m + 1, -1);
  for (int i = 0; i < num_rows(); ++i) {
    for (int x : rows_[i]) {
      require(x >= 1 && x <= m, "tableau: entries must be exactly 1..m");
      out[x] = i;
    }
  }
  return out;
}

InsertResult row_insert(const YoungTableau& t, int x) {
  require(x > 0, "row_insert: entries must be positive");
  require(!t.contains(x), "row_insert: value already present");
  auto rows = t.rows();
  const Box box = bump_in(rows, x);
  return {TableauBuilder::make(std::move(rows)), box};
}

TableauPair rsk(std::span<const int> permutation) {
  const int m = static_cast<int>(permutation.size());
  std::vector<bool> seen(m + 1, false);
  for (int x : permutation) {
    require(x >= 1 && x <= m && !seen[x], "rsk: input is not a permutation");
    seen[x] = true;
  }
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int i = 0; i < m; ++i) {
    const Box box = bump_in(p, permutation[i]);
    if (box.row == static_cast<int>(q.size())) q.emplace_back();
    q[box.row].push_back(i + 1);
  }
  return {TableauBuilder::make(std::move(p)), TableauBuilder::make(std::move(q))};
}

TableauPair rsk(const Configuration& f) {
  const auto perm = f.one_based();
  return rsk(std::span<const int>(perm));
}

std::vector<int> inverse_rsk(const TableauPair& pair) {
  require(pair.p.shape() == pair.q.shape(), "inverse_rsk: shape mismatch");
  const int m = pair.q.size();
  // row_index_by_value validates that Q holds exactly 1..m
  (void)pair.q.row_index_by_value();
  (void)pair.p.row_index_by_value();
  auto p = pair.p.rows();
  auto q = pair.q.rows();
  std::vector<int> out(m);
  for (int k = m; k >= 1; --k) {
    int row = -1;
    for (int i = 0; i < static_cast<int>(q.size()); ++i) {
      if (!q[i].empty() && q[i].back() == k) {
        row = i;
        break;
      }
    }
    require(row >= 0, "inverse_rsk: largest recording entry is not at a corner");
    q[row].pop_back();
    int x = p[row].back();
    p[row].pop_back();
    for (int i = row - 1; i >= 0; --i) {
      auto& r = p[i];
      // largest entry smaller than x
      auto it = std::lower_bound(r.begin(), r.end(), x);
      --it;
      std::swap(x, *it);
    }
    out[k - 1] = x;
    if (q[row].empty()) {
      q.pop_back();
      p.pop_back();
    }
  }
  return out;
}

bool check_row_condition(const YoungTableau& t, int n, int r, RowCondition condition) {
  require(n >= 0 && r >= 0, "row condition: n and r must be non-negative");
  require(t.size() == n * r, "row condition: tableau must hold exactly 1..rn");
  const auto row = t.row_index_by_value();
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s < r; ++s) {
      const int lo = r * i + s;  // r(i-1)+s in 1-based block numbering
      const bool ok = condition == RowCondition::strict_descent ? row[lo] < row[lo + 1]
                                                                : row[lo + 1] <= row[lo];
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> partitions(int total, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  if (total >= 0) rec(total, max_part);
  return out;
}

void for_each_standard_tableau(const std::vector<int>& shape,
                               const std::function<void(const YoungTableau&)>& visit,
                               BudgetMeter& meter) {
  int m = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    require(shape[i] >= 0, "shape: negative part");
    if (i > 0) require(shape[i] <= shape[i - 1], "shape: parts must weakly decrease");
    m += shape[i];
  }
  std::vector<std::vector<int>> rows(shape.size());
  std::function<void(int)> place = [&](int value) {
    if (value > m) {
      meter.charge();
      visit(TableauBuilder::make(rows));
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto len = rows[i].size();
      if (static_cast<int>(len) >= shape[i]) continue;
      if (i > 0 && rows[i - 1].size() <= len) continue;
      rows[i].push_back(value);
      place(value + 1);
      rows[i].pop_back();
    }
  };
  place(1);
}

BigInt count_tableau_pairs(int n, int r, int d, RowCondition condition, std::uint64_t budget) {
  require(n >= 0 && r >= 0 && d >= 0, "count_tableau_pairs: parameters must be non-negative");
  BudgetMeter meter(budget);
  BigInt total = 0;
  for (const auto& shape : partitions(n * r, d)) {
    BigInt passing = 0;
    for_each_standard_tableau(
        shape,
        [&](const YoungTableau& t) {
          if (check_row_condition(t, n, r, condition)) ++passing;
        },
        meter);
    total += passing * passing;
  }
  return total;
}

}  // namespace planar
