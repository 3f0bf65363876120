#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "planar/multigraph.hpp"
#include "planar/numeric.hpp"

namespace planar {

using Point = std::vector<int>;

/// Lattice walk in Z^d given by signed step labels: step +k (resp. -k) moves
/// one unit up (resp. down) along axis k, with k in 1..d.
class Walk {
 public:
  Walk() = default;
  Walk(int d, std::vector<int> steps);

  int dimension() const { return d_; }
  const std::vector<int>& steps() const { return steps_; }

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  int d_ = 0;
  std::vector<int> steps_;
};

/// Walk written as all positive steps followed by all negative steps. The
/// positive labels are indexed by the ranks of U x [r] and the negative
/// labels by the ranks of V x [r], so both have length rn and come in n
/// blocks of r.
class RepresentativeWalk {
 public:
  RepresentativeWalk() = default;
  RepresentativeWalk(int d, int n, int r, std::vector<int> up, std::vector<int> down);

  int dimension() const { return d_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int length() const { return static_cast<int>(up_.size()); }
  const std::vector<int>& up() const { return up_; }
  const std::vector<int>& down() const { return down_; }

  /// Signed-step form: up labels, then negated down labels.
  Walk as_walk() const;

  friend bool operator==(const RepresentativeWalk&, const RepresentativeWalk&) = default;
  friend auto operator<=>(const RepresentativeWalk&, const RepresentativeWalk&) = default;

 private:
  int d_ = 0;
  int n_ = 0;
  int r_ = 0;
  std::vector<int> up_;
  std::vector<int> down_;
};

/// The point (1 - pi(1), ..., d - pi(d)) together with its permutation.
struct ToeplitzPoint {
  Point coords;
  std::vector<int> permutation;  ///< 0-based one-line notation
  int sign = 1;
};

ToeplitzPoint toeplitz_point(const std::vector<int>& permutation);

/// All d! Toeplitz points, permutations in lexicographic order.
std::vector<ToeplitzPoint> toeplitz_points(int d);

/// The permutation generating `p`, if `p` is a Toeplitz point.
std::optional<ToeplitzPoint> as_toeplitz_point(const Point& p);

Point endpoint(const Walk& w);
Point endpoint(const RepresentativeWalk& w);

/// Shape constraint on each block of r consecutive labels.
enum class BlockVariant {
  nonincreasing,  ///< blocks are multisets listed largest first
  increasing,     ///< blocks are r-subsets listed smallest first
};

bool blocks_satisfy(const std::vector<int>& labels, int r, BlockVariant variant);

/// Every u-block and v-block is non-increasing.
bool is_nonincreasing_blocks(const RepresentativeWalk& w);

/// Every u-block and v-block is strictly increasing.
bool is_increasing_blocks(const RepresentativeWalk& w);

/// Number of label sequences of length rn over [d], made of n blocks of the
/// given variant, in which label k occurs counts[k-1] times.
BigInt count_block_sequences(int d, int n, int r, const std::vector<int>& counts,
                             BlockVariant variant);

/// Number of representative walks with n blocks of r on each side, of the
/// given variant, from the origin to `p`.
BigInt count_restricted_walks(int d, int n, int r, const Point& p, BlockVariant variant);

/// Sum over permutations of [d] of sign times the restricted walk count to
/// the Toeplitz point. Throws BudgetExceeded for d > 8.
BigInt signed_toeplitz_sum(int d, int n, int r, BlockVariant variant);

/// The same signed sum over all interleavings of length 2m walks.
BigInt signed_interleaved_sum(int d, int m);

/// For each label k, matches the positions carrying k on both sides in the
/// crossing way: the surplus side keeps its leading (up side) or trailing
/// (down side) elements unmatched.
QuasiConfiguration crossing_pairing(const RepresentativeWalk& w);

/// Labels every element of U x [r] and V x [r] with the size of the largest
/// planar matching of `f` ending at its edge. `d` is the label bound of the
/// result and defaults to rn. Throws InvalidInput if some label exceeds d.
RepresentativeWalk chain_length_walk(const Configuration& f, int d = 0);

struct LastAppearanceCheck {
  bool satisfied = true;
  std::optional<int> first_violation;  ///< 0-based rank in U x [r]
};

/// For every up position with label a > 1, let k and l count the labels a
/// and a - 1 among the up positions up to and including it. Requires l > 0
/// and, when the l-th-to-last a - 1 among the down labels exists, that the
/// k-th-to-last a exists and comes after it.
LastAppearanceCheck check_last_appearance_order(const RepresentativeWalk& w);

/// Sign-reversing involution on nonincreasing-block walks to Toeplitz points
/// that fail the last-appearance order. Swaps the labels a and a - 1 past
/// the first violation, block by block, on the up side after the violating
/// position and on the down side before the matching a - 1. Throws
/// InvalidInput if `w` satisfies the order.
RepresentativeWalk swap_violating_labels(const RepresentativeWalk& w);

/// Visits every walk of the variant ending in one of `endpoints`, in
/// lexicographic order of (up, down).
void for_each_restricted_walk(int d, int n, int r, const std::vector<Point>& endpoints,
                              BlockVariant variant,
                              const std::function<void(const RepresentativeWalk&)>& visit,
                              std::uint64_t budget = default_budget());

/// Closed nonincreasing-block walks whose positive steps followed by the
/// reversed negative steps stay in x_1 >= x_2 >= ... >= x_d throughout.
BigInt count_chamber_walks(int d, int n, int r, std::uint64_t budget = default_budget());

}  // namespace planar
