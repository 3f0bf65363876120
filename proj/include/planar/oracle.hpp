#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planar/numeric.hpp"

// Brute-force counts that deliberately avoid the library's own planar-size,
// enumeration and RSK code.
namespace planar::oracle {

/// Permutations of [m] whose longest increasing subsequence has length <= d.
BigInt brute_u(int m, int d, std::uint64_t budget = default_budget());

/// r-regular bipartite multigraphs on n + n vertices whose largest planar
/// matching has at most d edges.
BigInt brute_g(int n, int r, int d, std::uint64_t budget = default_budget());

/// Same, bounding the largest planar subgraph instead.
BigInt brute_g_hat(int n, int r, int d, std::uint64_t budget = default_budget());

/// Walks in Z^2 with m_plus positive steps followed by m_minus negative
/// steps, both sides in pairs listed largest axis first, ending at (p1, p2).
BigInt two_block_walks(int m_plus, int m_minus, int p1, int p2);

/// Same walks with positive and negative steps interleaved arbitrarily,
/// counted by enumerating every signed step sequence.
BigInt interleaved_two_block_walks(int m_plus, int m_minus, int p1, int p2,
                                   std::uint64_t budget = default_budget());

/// Sum over k-subsets K of positive pairs and l-subsets L of negative pairs
/// of the number of unconstrained walks to (p1, p2) whose pairs in K and L
/// read 1 then 2.
BigInt ascending_pair_walks(int k, int l, int m_plus, int m_minus, int p1, int p2);

struct ReportRow {
  std::string claim;
  std::string params;
  std::vector<std::pair<std::string, std::string>> values;  ///< (method, value)
  bool pass = false;
};

class VerificationReport {
 public:
  /// Appends a row; it passes iff all values are equal.
  void add(std::string claim, std::string params,
           std::vector<std::pair<std::string, std::string>> values);

  const std::vector<ReportRow>& rows() const { return rows_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// Adds one to the first value of the first row and re-evaluates it.
  void corrupt_first_row();

  std::string to_json() const;
  /// Columns claim, params, method, value, pass; one line per value.
  std::string to_csv() const;
  std::string to_text() const;

 private:
  std::vector<ReportRow> rows_;
};

struct VerifyOptions {
  int max_rn = 6;
  int max_d = 4;
  int x_bound = 8;
  bool corrupt_fixture = false;
  std::uint64_t budget = default_budget();
};

VerificationReport verify_all(const VerifyOptions& options = {});

}  // namespace planar::oracle
