#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "planar/numeric.hpp"

namespace planar {

/// An edge between u_{u+1} and v_{v+1}; indices are 0-based.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// r-regular bipartite multigraph on two ordered classes of n vertices each,
/// stored as an n x n multiplicity matrix. Rows index U, columns index V.
class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;

  /// Throws InvalidInput unless every row and column sums to r.
  BipartiteMultigraph(int n, int r, std::vector<std::vector<int>> mult);

  int n() const { return n_; }
  int r() const { return r_; }
  int multiplicity(int u, int v) const { return mult_[u][v]; }
  const std::vector<std::vector<int>>& matrix() const { return mult_; }

  /// Every edge repeated by its multiplicity, in row-major order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteMultigraph&,
                         const BipartiteMultigraph&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::vector<int>> mult_;
};

/// Perfect pairing of U x [r] with V x [r]. Both sides are identified with
/// [0, rn) through the lexicographic order, so u^i of vertex u has rank
/// u * r + (i - 1).
class Configuration {
 public:
  Configuration() = default;

  /// `pairing[rank of u-copy] = rank of v-copy`, 0-based. Must be a bijection.
  Configuration(int n, int r, std::vector<int> pairing);

  static Configuration from_one_based(int n, int r, std::span<const int> pairing);

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(pairing_.size()); }
  int partner(int u_rank) const { return pairing_[u_rank]; }
  std::span<const int> pairing() const { return pairing_; }

  /// The pairing as a permutation of 1..rn in one-line notation.
  std::vector<int> one_based() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<int> pairing_;
};

/// A configuration with some pairings removed.
class QuasiConfiguration {
 public:
  QuasiConfiguration() = default;

  /// Matched entries must be distinct ranks in [0, rn).
  QuasiConfiguration(int n, int r, std::vector<std::optional<int>> pairing);

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(pairing_.size()); }
  std::optional<int> partner(int u_rank) const { return pairing_[u_rank]; }
  const std::vector<std::optional<int>>& pairing() const { return pairing_; }

  bool is_complete() const;
  std::optional<Configuration> to_configuration() const;

  friend bool operator==(const QuasiConfiguration&,
                         const QuasiConfiguration&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::optional<int>> pairing_;
};

/// Largest set of pairwise noncrossing edges with distinct endpoints.
int planar_matching_size(const BipartiteMultigraph& g);
int planar_matching_size(const Configuration& f);

/// Largest noncrossing edge multiset where edges may share endpoints.
int planar_subgraph_size(const BipartiteMultigraph& g);
int planar_subgraph_size(const Configuration& f);

/// Entry i is the size of the largest planar matching of `f` that ends with
/// the edge at u-copy rank i.
std::vector<int> planar_matching_lengths_ending_at(const Configuration& f);

/// The configuration lift of `g`: at each vertex the copies are handed out
/// in decreasing order of the opposite endpoint, and the t copies of a
/// multiple edge are paired in the crossing way. Projects back onto `g`.
Configuration expand_configuration(const BipartiteMultigraph& g);

/// Forgets the copy indices.
BipartiteMultigraph project(const Configuration& f);

/// Inverse pairing (swap the roles of U and V).
Configuration transpose(const Configuration& f);

/// Round-robin partition of an enumeration stream.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

struct EnumerationOptions {
  std::uint64_t budget = default_budget();
  Shard shard{};
};

/// Emits each n x n matrix with row and column sums r exactly once, in
/// decreasing lexicographic order of the row-major entries.
void for_each_multigraph(int n, int r,
                         const std::function<void(const BipartiteMultigraph&)>& visit,
                         const EnumerationOptions& options = {});

std::vector<BipartiteMultigraph> enumerate_multigraphs(int n, int r,
                                                       const EnumerationOptions& options = {});

/// Emits all (rn)! pairings in increasing lexicographic order.
void for_each_configuration(int n, int r,
                            const std::function<void(const Configuration&)>& visit,
                            const EnumerationOptions& options = {});

/// (r!)^{2n} / prod_e mult_e!, the number of configurations projecting to g.
BigInt configuration_count_of(const BipartiteMultigraph& g);

}  // namespace planar
