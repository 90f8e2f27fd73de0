#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace z3real;
namespace ts = testing_support;

namespace {

std::set<std::string> brute_classes(const DegreeSequence& seq) {
  std::set<std::string> out;
  RealizationStream s(seq);
  while (auto g = s.next()) out.insert(ts::brute_canonical(*g));
  return out;
}

}  // namespace

TEST(Hakimi, Examples) {
  const auto k4 = hakimi_realize(parse_sequence("3^4"));
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_TRUE(k4.is_simple());
  const auto tri = hakimi_realize(parse_sequence("2^3"));
  EXPECT_EQ(tri.edge_count(), 3);
  const auto seq = parse_sequence("(6,5,4^4,3)");
  const auto g = hakimi_realize(seq);
  EXPECT_TRUE(g.is_simple());
  EXPECT_EQ(degree_sequence_of(g), seq);
  EXPECT_THROW(hakimi_realize(parse_sequence("3^5")), std::invalid_argument);
}

TEST(Hakimi, AppearsInEnumerationUpTo7) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      if (!is_graphic(seq)) continue;
      const auto key = canonical_form(hakimi_realize(seq));
      bool found = false;
      RealizationStream s(seq, {std::numeric_limits<long long>::max(), true});
      while (auto g = s.next())
        if (canonical_form(*g) == key) found = true;
      ASSERT_TRUE(found) << to_string(seq);
    }
}

TEST(Enumerate, ClassCounts) {
  EXPECT_EQ(realization_classes(parse_sequence("3^4")).size(), 1u);
  EXPECT_EQ(realization_classes(parse_sequence("3^6")).size(), 2u);
  EXPECT_EQ(realization_classes(parse_sequence("2^4")).size(), 1u);
  EXPECT_EQ(realization_classes(parse_sequence("(5,3^5)")).size(), 1u);
  EXPECT_EQ(realization_classes(parse_sequence("(5^2,3^4)")).size(), 1u);
  EXPECT_EQ(realization_classes(parse_sequence("(4,3^6)")).size(), 4u);
  EXPECT_EQ(realization_classes(parse_sequence("3^8")).size(), 6u);
}

TEST(Enumerate, LabelledCounts) {
  auto count = [](const char* text) {
    RealizationStream s(parse_sequence(text));
    long long c = 0;
    while (s.next()) ++c;
    return c;
  };
  EXPECT_EQ(count("3^4"), 1);
  EXPECT_EQ(count("2^4"), 3);
  EXPECT_EQ(count("3^6"), 70);
  EXPECT_EQ(count("(4,3^6)"), 810);
}

TEST(Enumerate, SixCycleClassesAreTheKnownPair) {
  auto classes = realization_classes(parse_sequence("3^6"));
  std::set<std::string> keys;
  for (const auto& g : classes) keys.insert(ts::brute_canonical(g));
  std::set<std::string> expected{ts::brute_canonical(complete_bipartite(3, 3))};
  // triangular prism
  expected.insert(ts::brute_canonical(build_graph(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})));
  EXPECT_EQ(keys, expected);
}

TEST(Enumerate, EmissionsHaveExactDegrees) {
  for (const char* text : {"3^6", "4^6", "(5,4,4,3,3,3)", "(4^2,3^4)", "(6,5,4^4,3)"}) {
    const auto seq = parse_sequence(text);
    RealizationStream s(seq);
    while (auto g = s.next()) {
      ASSERT_TRUE(g->is_simple());
      ASSERT_EQ(degree_sequence_of(*g), seq);
    }
  }
}

TEST(Enumerate, LimitAndCap) {
  RealizationStream s(parse_sequence("3^6"), {5, false});
  int c = 0;
  while (s.next()) ++c;
  EXPECT_EQ(c, 5);
  EXPECT_THROW(RealizationStream(parse_sequence("3^14")), CapExceeded);
  EXPECT_FALSE(RealizationStream(parse_sequence("3^5")).next().has_value());
}

TEST(Canonical, MatchesBruteForceUpTo6) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      if (!is_graphic(seq)) continue;
      ASSERT_EQ(realization_classes(seq).size(), brute_classes(seq).size()) << to_string(seq);
    }
}

TEST(Canonical, MatchesBruteForceAt7) {
  for (const char* text : {"(4,3^6)", "(4^3,3^4)", "(5,4,3^5)", "2^7", "(6,3^6)", "(3^4,2^3)"}) {
    const auto seq = parse_sequence(text);
    ASSERT_EQ(realization_classes(seq).size(), brute_classes(seq).size()) << text;
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + t % 8;
    const auto g = ts::random_multigraph(rng, n, n + static_cast<int>(rng() % (2 * n)));
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({p[static_cast<std::size_t>(e.head)], p[static_cast<std::size_t>(e.tail)]});
    std::shuffle(edges.begin(), edges.end(), rng);
    ASSERT_EQ(canonical_form(g), canonical_form(build_graph(n, edges)));
  }
}

TEST(Canonical, SeparatesNonIsomorphic) {
  const auto prism = build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(canonical_form(complete_bipartite(3, 3)), canonical_form(prism));
  EXPECT_NE(canonical_form(wheel(6)), canonical_form(build_graph(7, std::vector<Edge>{})));
}

TEST(Exceptions, Verified) {
  for (const char* text : {"3^4", "(5,3^5)", "(5^2,3^4)", "3^6", "(4,3^6)"})
    EXPECT_TRUE(verify_exception(parse_sequence(text))) << text;
  EXPECT_THROW(verify_exception(parse_sequence("(4,3^4)")), std::invalid_argument);
}
