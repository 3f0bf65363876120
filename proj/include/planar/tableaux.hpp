#pragma once

#include <functional>
#include <span>
#include <vector>

#include "planar/multigraph.hpp"
#include "planar/numeric.hpp"

namespace planar {

/// Cell of a Young diagram; row 0 is the top row, column 0 the leftmost.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Standard Young tableau with distinct positive entries.
class YoungTableau {
 public:
  YoungTableau() = default;

  /// Validates row/column strictness, weakly decreasing row lengths and
  /// distinctness; throws InvalidInput otherwise.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;
  int size() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  bool contains(int value) const;

  /// Row index of every value 1..m; requires the entry set to be exactly [m].
  std::vector<int> row_index_by_value() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  friend struct TableauBuilder;
  std::vector<std::vector<int>> rows_;
};

struct InsertResult {
  YoungTableau tableau;
  Box box;
};

/// Schensted row insertion T <- x. Throws InvalidInput if x is already present.
InsertResult row_insert(const YoungTableau& t, int x);

struct TableauPair {
  YoungTableau p;
  YoungTableau q;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// RSK on a permutation of 1..m given in one-line notation.
TableauPair rsk(std::span<const int> permutation);

/// RSK on the permutation determined by a configuration.
TableauPair rsk(const Configuration& f);

/// Reverse bumping. Returns the permutation of 1..m whose RSK image is `pair`.
std::vector<int> inverse_rsk(const TableauPair& pair);

enum class RowCondition {
  strict_descent,  ///< r(i-1)+s sits in a strictly higher row than r(i-1)+s+1
  weak_ascent,     ///< r(i-1)+s+1 sits in the same row as r(i-1)+s or higher
};

/// Checks the block row condition for consecutive values inside each of the
/// n blocks of r values. The entries of `t` must be exactly 1..rn.
bool check_row_condition(const YoungTableau& t, int n, int r, RowCondition condition);

inline bool check_condition_strict_descent(const YoungTableau& t, int n, int r) {
  return check_row_condition(t, n, r, RowCondition::strict_descent);
}

inline bool check_condition_weak_ascent(const YoungTableau& t, int n, int r) {
  return check_row_condition(t, n, r, RowCondition::weak_ascent);
}

/// Partitions of `total` with every part at most `max_part`, largest first.
std::vector<std::vector<int>> partitions(int total, int max_part);

/// Visits every standard Young tableau of the given shape.
void for_each_standard_tableau(const std::vector<int>& shape,
                               const std::function<void(const YoungTableau&)>& visit,
                               BudgetMeter& meter);

/// Sum over shapes of size rn with at most d columns of the squared number
/// of standard tableaux of that shape passing `condition`.
BigInt count_tableau_pairs(int n, int r, int d, RowCondition condition,
                           std::uint64_t budget = default_budget());

}  // namespace planar
