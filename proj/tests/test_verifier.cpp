#include <gtest/gtest.h>

#include "support.hpp"

using namespace z3real;
namespace ts = testing_support;

TEST(Boundary, Examples) {
  const auto c2 = ts::two_cycle();
  EXPECT_EQ(boundary(c2, {1, 1}).values, (std::vector<int>{2, 1}));
  const auto tri = ts::cycle(3);
  EXPECT_EQ(boundary(tri, {1, 1, 1}).values, (std::vector<int>{0, 0, 0}));
  EXPECT_THROW(boundary(tri, {1, 1}), std::invalid_argument);
  EXPECT_THROW(boundary(tri, {1, 0, 1}), std::invalid_argument);
}

TEST(ZeroSum, Validation) {
  EXPECT_THROW(ZeroSumFunction({1, 0}), std::invalid_argument);
  EXPECT_EQ(ZeroSumFunction({4, -1, 0}).values, (std::vector<int>{1, 2, 0}));
}

TEST(Solve, Examples) {
  const auto f = solve_boundary(ts::two_cycle(), ZeroSumFunction({0, 0}));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ((*f)[0] + (*f)[1], 3);
  EXPECT_FALSE(solve_boundary(wheel(3), ZeroSumFunction({0, 0, 0, 0})).has_value());
}

TEST(Solve, EveryBoundaryOfW4) {
  const auto g = wheel(4);
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const int e = (6 - a - b - c - d) % 3;
          const ZeroSumFunction target({a, b, c, d, e});
          const auto f = solve_boundary(g, target);
          ASSERT_TRUE(f.has_value());
          ASSERT_EQ(boundary(g, *f), target);
          ++count;
        }
  EXPECT_EQ(count, 81);
}

TEST(Solve, WitnessesAreValid) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const auto g = ts::random_multigraph(rng, n, 1 + t % 9);
    std::vector<int> b(static_cast<std::size_t>(n));
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += b[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 3);
    b.back() = (300 - sum) % 3;
    const ZeroSumFunction target(b);
    const auto f = solve_boundary(g, target);
    if (f) {
      ASSERT_EQ(boundary(g, *f), target);
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(is_z3_connected(ts::two_cycle()));
  EXPECT_FALSE(is_z3_connected(wheel(3)));
  EXPECT_FALSE(is_z3_connected(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_z3_connected(wheel(4)));
  EXPECT_TRUE(is_z3_connected(build_graph(1, std::vector<Edge>{})));
  EXPECT_FALSE(is_z3_connected(build_graph(2, std::vector<Edge>{})));
}

TEST(Oracle, DisconnectedIsFalse) {
  const auto w = wheel(4);
  std::vector<Edge> edges;
  for (const auto& e : w.edges()) {
    edges.push_back(e);
    edges.push_back({e.tail + 5, e.head + 5});
  }
  EXPECT_FALSE(is_z3_connected(build_graph(10, edges)));
}

TEST(Oracle, CapAndEmpty) {
  EXPECT_THROW(is_z3_connected(wheel(14)), CapExceeded);
  EXPECT_NO_THROW(is_z3_connected(wheel(13)));
  EXPECT_THROW(is_z3_connected(wheel(5), 5), CapExceeded);
  EXPECT_THROW(is_z3_connected(Multigraph{}), std::invalid_argument);
  EXPECT_THROW(is_3_flowable(wheel(14)), CapExceeded);
}

TEST(Oracle, AgreesWithNaive) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    const int m = n == 1 ? 0 : static_cast<int>(rng() % 11);
    const auto g = ts::random_multigraph(rng, n, m);
    ASSERT_EQ(is_z3_connected(g), ts::naive_z3_connected(g)) << to_edge_list(g);
  }
}

TEST(Oracle, ReachSetNegationSymmetric) {
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    const auto g = ts::random_multigraph(rng, n, 1 + t % 8);
    const auto s = boundary_reach_set(g);
    // negate each of the n-1 explicit digits
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::size_t x = i, neg = 0, p = 1;
      for (int v = 0; v < n - 1; ++v, p *= 3, x /= 3) neg += ((3 - x % 3) % 3) * p;
      ASSERT_EQ(s[i], s[neg]);
    }
  }
}

TEST(Flow, Examples) {
  const auto tri = has_modular_3_orientation(ts::cycle(3));
  ASSERT_TRUE(tri.has_value());
  EXPECT_FALSE(has_modular_3_orientation(wheel(3)).has_value());
  EXPECT_TRUE(has_modular_3_orientation(complete_bipartite(3, 3)).has_value());
  EXPECT_TRUE(is_3_flowable(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_3_flowable(wheel(3)));
}

TEST(Flow, OrientationMatchesBruteForce) {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 6;
    const auto g = ts::random_multigraph(rng, n, static_cast<int>(rng() % 12));
    const auto o = has_modular_3_orientation(g);
    ASSERT_EQ(o.has_value(), ts::naive_modular_orientation(g));
    ASSERT_EQ(o.has_value(), is_3_flowable(g));
    if (is_z3_connected(g)) {
      ASSERT_TRUE(is_3_flowable(g));
    }
  }
}
