#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace linarr;
using testing_support::path3;

using Counts = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

TEST(EnumerateDistribution, Path3) {
  const ExactDistribution d = enumerate_distribution(path3());
  EXPECT_EQ(d.counts, (Counts{{2, 2}, {3, 4}}));
  EXPECT_EQ(d.total, 6u);
  EXPECT_EQ(d.mean(), ratio(8, 3));
  EXPECT_EQ(d.second_moment(), ratio(22, 3));
  EXPECT_EQ(d.variance(), ratio(2, 9));
  EXPECT_EQ(d.third_central(), ratio(-2, 27));
  EXPECT_EQ(d.d_min(), 2u);
  EXPECT_EQ(d.d_max(), 3u);
  EXPECT_EQ(d.cdf(1), 0);
  EXPECT_EQ(d.cdf(2), ratio(1, 3));
  EXPECT_EQ(d.cdf(3), 1);
}

TEST(EnumerateDistribution, CompleteGraph) {
  EXPECT_EQ(enumerate_distribution(make_special(SpecialKind::complete, 4)).counts, (Counts{{10, 24}}));
}

TEST(EnumerateDistribution, StarFromHubPositions) {
  for (std::uint64_t n = 2; n <= 7; ++n) {
    // Each hub position tau occurs in (n-1)! arrangements.
    std::map<std::uint64_t, std::uint64_t> expected;
    std::uint64_t rest = 1;
    for (std::uint64_t i = 2; i < n; ++i) rest *= i;
    for (std::uint64_t tau = 1; tau <= n; ++tau) expected[star_d_tau(n, tau)] += rest;
    const ExactDistribution d = enumerate_distribution(make_special(SpecialKind::star_tree, n));
    EXPECT_EQ(d.counts, Counts(expected.begin(), expected.end())) << n;
  }
}

TEST(EnumerateDistribution, MatchesNextPermutation) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing_support::coin_flip_graph(1 + uniform_below(rng, 7), rng);
    const auto d = enumerate_distribution(g);
    const auto b = testing_support::brute_moments(g);
    EXPECT_EQ(d.mean(), b.mean);
    EXPECT_EQ(d.second_moment(), b.second);
    EXPECT_EQ(d.d_min(), b.d_min);
    EXPECT_EQ(d.d_max(), b.d_max);
  }
}

TEST(EnumerateDistribution, Cap) {
  try {
    enumerate_distribution(make_special(SpecialKind::linear_tree, 11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  EXPECT_NO_THROW(enumerate_distribution(make_special(SpecialKind::linear_tree, 4), {.max_arrangement_n = 4}));
  EXPECT_THROW(enumerate_distribution(make_special(SpecialKind::linear_tree, 5), {.max_arrangement_n = 4}), Error);
}

TEST(EnumerateEPhi, Examples) {
  EXPECT_EQ(enumerate_e_phi(3, 1), ratio(5, 3));
  EXPECT_EQ(enumerate_e_phi(4, 0), ratio(8, 3));
  EXPECT_EQ(enumerate_e_phi(2, 2), 1);
  EXPECT_THROW(enumerate_e_phi(3, 0), Error);
  EXPECT_THROW(enumerate_e_phi(16, 0), Error);
}

TEST(EnumerateEPhi, MatchesClosedForms) {
  for (int phi = 0; phi <= 2; ++phi)
    for (std::uint64_t n = 4 - static_cast<std::uint64_t>(phi); n <= 12; ++n)
      EXPECT_EQ(enumerate_e_phi(n, phi), e_phi(n, phi)) << phi << " " << n;
}

TEST(StarDTau, Examples) {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(star_d_tau(n, 1), choose2(n));
    for (std::uint64_t tau = 1; tau <= n; ++tau) EXPECT_EQ(star_d_tau(n, tau), star_d_tau(n, n + 1 - tau));
  }
  EXPECT_EQ(star_d_tau(5, 3), 6u);
  EXPECT_THROW(star_d_tau(5, 0), Error);
  EXPECT_THROW(star_d_tau(5, 6), Error);
}

TEST(StarDTau, AveragesGiveStarMoments) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    BigInt s1 = 0, s2 = 0;
    for (std::uint64_t tau = 1; tau <= n; ++tau) {
      s1 += star_d_tau(n, tau);
      s2 += BigInt(star_d_tau(n, tau)) * star_d_tau(n, tau);
    }
    const BigInt nn = n;
    EXPECT_EQ(ratio(s1, n), ratio(nn * nn - 1, 3));
    EXPECT_EQ(ratio(s2, n), ratio((nn + 1) * (nn - 1) * (7 * nn * nn - 8), 60));
  }
}

TEST(SolveE01, Examples) {
  EXPECT_EQ(solve_e01_system(5).e1, ratio(39, 10));
  EXPECT_EQ(solve_e01_system(4).e0, ratio(8, 3));
  for (std::uint64_t n = 4; n <= 20; ++n) {
    const E01 s = solve_e01_system(n);
    EXPECT_EQ(s.e0, e_phi(n, 0));
    EXPECT_EQ(s.e1, e_phi(n, 1));
  }
  EXPECT_THROW(solve_e01_system(3), Error);
}

TEST(LabelledTrees, Counts) {
  auto count = [](std::size_t n) {
    std::uint64_t c = 0;
    for_each_labelled_tree(n, [&](const Graph&) { ++c; });
    return c;
  };
  EXPECT_EQ(count(1), 1u);
  EXPECT_EQ(count(2), 1u);
  EXPECT_EQ(count(3), 3u);
  EXPECT_EQ(count(5), 125u);
  EXPECT_THROW(count(9), Error);
}

TEST(LabelledTrees, FourVerticesDistinctStarsAndPaths) {
  std::set<std::vector<Edge>> seen;
  int stars = 0, paths = 0;
  for_each_labelled_tree(4, [&](const Graph& t) {
    seen.insert(std::vector<Edge>(t.edges().begin(), t.edges().end()));
    const auto k2 = sum_k2(t);
    if (k2 == 12) ++stars;
    if (k2 == 10) ++paths;
  });
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_EQ(stars, 4);
  EXPECT_EQ(paths, 12);
}

TEST(GnmEnumeration, Counts) {
  auto count = [](std::size_t n, std::size_t m) {
    std::set<std::vector<Edge>> seen;
    for_each_gnm_graph(n, m, [&](const Graph& g) { seen.insert({g.edges().begin(), g.edges().end()}); });
    return seen.size();
  };
  EXPECT_EQ(count(4, 2), 15u);
  EXPECT_EQ(count(4, 6), 1u);
  EXPECT_EQ(count(4, 0), 1u);
  EXPECT_EQ(count(5, 2), 45u);
  EXPECT_THROW(for_each_gnm_graph(10, 20, [](const Graph&) {}), Error);
}

TEST(GnmEnumeration, FiveTwoAverageVariance) {
  ExactScalar total = 0;
  std::uint64_t c = 0;
  for_each_gnm_graph(5, 2, [&](const Graph& g) {
    total += enumerate_distribution(g).variance();
    ++c;
  });
  EXPECT_EQ(total / c, ratio(16, 9));
}

TEST(SimpleGraphs, Count) {
  std::uint64_t c = 0;
  for_each_simple_graph(4, [&](const Graph&) { ++c; });
  EXPECT_EQ(c, 64u);
}
