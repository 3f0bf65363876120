#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "planar/multigraph.hpp"
#include "planar/oracle.hpp"

using namespace planar;

namespace {

BipartiteMultigraph identity_graph(int n, int r) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = r;
  return BipartiteMultigraph(n, r, m);
}

Configuration from_vector(int n, int r, std::vector<int> pairing) { return Configuration(n, r, std::move(pairing)); }

}  // namespace

TEST_CASE("multigraph validation") {
  CHECK_NOTHROW(BipartiteMultigraph(1, 2, {{2}}));
  CHECK_NOTHROW(BipartiteMultigraph(0, 3, {}));
  CHECK_THROWS_AS(BipartiteMultigraph(2, 2, {{2, 0}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(BipartiteMultigraph(2, 1, {{1, 0}}), InvalidInput);
  CHECK_THROWS_AS(BipartiteMultigraph(2, 0, {{1, -1}, {-1, 1}}), InvalidInput);
  CHECK_THROWS_AS(BipartiteMultigraph(-1, 1, {}), InvalidInput);
}

TEST_CASE("configuration validation") {
  CHECK_NOTHROW(from_vector(2, 1, {1, 0}));
  CHECK_THROWS_AS(from_vector(2, 1, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(from_vector(2, 1, {0}), InvalidInput);
  CHECK_THROWS_AS(from_vector(1, 2, {0, 2}), InvalidInput);
  const std::vector<int> one_based{2, 1};
  CHECK(Configuration::from_one_based(1, 2, one_based) == from_vector(1, 2, {1, 0}));
  CHECK(from_vector(1, 2, {1, 0}).one_based() == one_based);
}

TEST_CASE("quasi-configuration") {
  const QuasiConfiguration partial(1, 2, {std::nullopt, 0});
  CHECK_FALSE(partial.is_complete());
  CHECK_FALSE(partial.to_configuration().has_value());
  CHECK_THROWS_AS(QuasiConfiguration(1, 2, {0, 0}), InvalidInput);
  const QuasiConfiguration full(1, 2, {1, 0});
  REQUIRE(full.to_configuration().has_value());
  CHECK(*full.to_configuration() == from_vector(1, 2, {1, 0}));
}

TEST_CASE("planar matching size examples") {
  CHECK(planar_matching_size(BipartiteMultigraph(1, 2, {{2}})) == 1);
  CHECK(planar_matching_size(identity_graph(3, 1)) == 3);
  CHECK(planar_matching_size(BipartiteMultigraph(2, 2, {{0, 2}, {2, 0}})) == 1);
  CHECK(planar_matching_size(BipartiteMultigraph(0, 2, {})) == 0);
}

TEST_CASE("planar subgraph size examples") {
  CHECK(planar_subgraph_size(BipartiteMultigraph(1, 2, {{2}})) == 2);
  CHECK(planar_subgraph_size(BipartiteMultigraph(2, 2, {{0, 2}, {2, 0}})) == 2);
  CHECK(planar_subgraph_size(identity_graph(3, 1)) == 3);
  // a vertex fanning out to consecutive neighbours is a weak chain
  CHECK(planar_subgraph_size(BipartiteMultigraph(2, 2, {{1, 1}, {1, 1}})) == 3);
}

TEST_CASE("expansion follows the crossing rule") {
  const auto g = BipartiteMultigraph(1, 2, {{2}});
  const auto f = expand_configuration(g);
  CHECK(f.one_based() == std::vector<int>{2, 1});
  CHECK(project(f) == g);

  const auto perm = BipartiteMultigraph(3, 1, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(expand_configuration(perm).one_based() == std::vector<int>{2, 3, 1});
}

TEST_CASE("projection examples") {
  CHECK(project(from_vector(1, 2, {1, 0})) == BipartiteMultigraph(1, 2, {{2}}));
  CHECK(project(from_vector(2, 2, {0, 1, 2, 3})) == BipartiteMultigraph(2, 2, {{2, 0}, {0, 2}}));
}

TEST_CASE("transpose examples") {
  CHECK(transpose(from_vector(3, 1, {0, 1, 2})) == from_vector(3, 1, {0, 1, 2}));
  CHECK(transpose(from_vector(3, 1, {1, 2, 0})) == from_vector(3, 1, {2, 0, 1}));
}

TEST_CASE("transpose preserves planar size and is an involution") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{4, 1}, {2, 2}, {6, 1}, {3, 2}, {2, 3}}) {
    for_each_configuration(n, r, [&](const Configuration& f) {
      CHECK(transpose(transpose(f)) == f);
      CHECK(planar_matching_size(transpose(f)) == planar_matching_size(f));
    });
  }
}

TEST_CASE("expansion invariants over all 2-regular multigraphs") {
  for (int n = 0; n <= 4; ++n) {
    for_each_multigraph(n, 2, [&](const BipartiteMultigraph& g) {
      const auto f = expand_configuration(g);
      CHECK(project(f) == g);
      CHECK(planar_matching_size(f) == planar_matching_size(g));
    });
  }
}

TEST_CASE("expansion preserves planar matching size for rn <= 8") {
  for (int r = 1; r <= 8; ++r) {
    for (int n = 1; n * r <= 8; ++n) {
      for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) {
        const auto f = expand_configuration(g);
        REQUIRE(planar_matching_size(f) == planar_matching_size(g));
        // copies of one vertex: earlier copies end longer planar matchings
        const auto lengths = planar_matching_lengths_ending_at(f);
        for (int u = 0; u < n; ++u)
          for (int s = 0; s + 1 < r; ++s) REQUIRE(lengths[u * r + s] >= lengths[u * r + s + 1]);
      });
    }
  }
}

TEST_CASE("size bounds") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n * r <= 6; ++n) {
      for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) {
        const int l = planar_matching_size(g);
        const int s = planar_subgraph_size(g);
        CHECK(l <= n);
        CHECK(s <= r * n);
        CHECK(l <= s);
      });
    }
  }
}

TEST_CASE("planar sizes agree with the pairwise chain oracle") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}, {5, 1}}) {
    for (int d = 0; d <= n * r; ++d) {
      BigInt matching = 0;
      BigInt subgraph = 0;
      for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) {
        matching += planar_matching_size(g) <= d;
        subgraph += planar_subgraph_size(g) <= d;
      });
      CHECK(matching == oracle::brute_g(n, r, d));
      CHECK(subgraph == oracle::brute_g_hat(n, r, d));
    }
  }
}

TEST_CASE("multigraph enumeration examples") {
  const auto one = enumerate_multigraphs(1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == BipartiteMultigraph(1, 2, {{2}}));

  const auto two = enumerate_multigraphs(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == BipartiteMultigraph(2, 2, {{2, 0}, {0, 2}}));
  CHECK(two[1] == BipartiteMultigraph(2, 2, {{1, 1}, {1, 1}}));
  CHECK(two[2] == BipartiteMultigraph(2, 2, {{0, 2}, {2, 0}}));

  CHECK(enumerate_multigraphs(2, 1).size() == 2);
  CHECK(enumerate_multigraphs(0, 5).size() == 1);
  CHECK(enumerate_multigraphs(3, 0).size() == 1);
}

TEST_CASE("multigraph enumeration is exhaustive and duplicate free") {
  // 3x3 matrices with line sums 2: 21
  const auto all = enumerate_multigraphs(3, 2);
  CHECK(all.size() == 21);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& g : all) seen.insert(g.matrix());
  CHECK(seen.size() == all.size());
}

TEST_CASE("sharded enumeration covers the stream exactly once") {
  const auto all = enumerate_multigraphs(3, 3);
  std::vector<BipartiteMultigraph> merged;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto part = enumerate_multigraphs(3, 3, {default_budget(), {i, 3}});
    merged.insert(merged.end(), part.begin(), part.end());
  }
  CHECK(merged.size() == all.size());
  for (const auto& g : all) CHECK(std::count(merged.begin(), merged.end(), g) == 1);
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_multigraphs(3, 2, {5, {}}), BudgetExceeded);
  CHECK_THROWS_AS(for_each_configuration(3, 2, [](const Configuration&) {}, {100, {}}), BudgetExceeded);
}

TEST_CASE("configuration enumeration examples") {
  auto collect = [](int n, int r) {
    std::vector<Configuration> out;
    for_each_configuration(n, r, [&](const Configuration& f) { out.push_back(f); });
    return out;
  };
  CHECK(collect(1, 1).size() == 1);
  const auto pair = collect(1, 2);
  REQUIRE(pair.size() == 2);
  for (const auto& f : pair) CHECK(project(f) == BipartiteMultigraph(1, 2, {{2}}));
  CHECK(collect(2, 1).size() == 2);
  const auto three = collect(3, 1);
  CHECK(std::is_sorted(three.begin(), three.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.pairing().begin(), a.pairing().end(), b.pairing().begin(),
                                        b.pairing().end());
  }));
}

TEST_CASE("configuration counts") {
  CHECK(configuration_count_of(BipartiteMultigraph(1, 2, {{2}})) == 2);
  CHECK(configuration_count_of(identity_graph(4, 1)) == 1);
  for (int r = 1; r <= 6; ++r) {
    for (int n = 0; n * r <= 6; ++n) {
      BigInt total = 0;
      for_each_multigraph(n, r, [&](const BipartiteMultigraph& g) { total += configuration_count_of(g); });
      CHECK(total == factorial(n * r));
    }
  }
  // and the fibres of the projection have exactly that size
  std::map<std::vector<std::vector<int>>, BigInt> fibres;
  for_each_configuration(2, 2, [&](const Configuration& f) { fibres[project(f).matrix()] += 1; });
  for_each_multigraph(2, 2, [&](const BipartiteMultigraph& g) { CHECK(fibres[g.matrix()] == configuration_count_of(g)); });
}

TEST_CASE("monotone subsequence sanity for five vertices") {
  // every permutation of 5 has an increasing or decreasing run of length 3
  for_each_configuration(5, 1, [&](const Configuration& f) {
    std::vector<int> reversed(f.pairing().begin(), f.pairing().end());
    for (auto& v : reversed) v = 4 - v;
    const int forward = planar_matching_size(f);
    const int backward = planar_matching_size(Configuration(5, 1, reversed));
    CHECK((forward >= 3 || backward >= 3));
  });
}
