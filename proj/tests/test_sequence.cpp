#include <gtest/gtest.h>

#include "support.hpp"

using namespace z3real;
namespace ts = testing_support;

TEST(Parse, ExponentNotation) {
  EXPECT_EQ(parse_sequence("(6, 5, 4^4, 3)").degrees(), (std::vector<int>{6, 5, 4, 4, 4, 4, 3}));
  EXPECT_EQ(parse_sequence("3^4").degrees(), (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(parse_sequence(" ( 3 , 5^2 ) ").degrees(), (std::vector<int>{5, 5, 3}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_sequence("(4^0)"), ParseError);
  EXPECT_THROW(parse_sequence("()"), ParseError);
  EXPECT_THROW(parse_sequence(""), ParseError);
  EXPECT_THROW(parse_sequence("(0,3)"), ParseError);
  EXPECT_THROW(parse_sequence("(3,,3)"), ParseError);
  EXPECT_THROW(parse_sequence("(3,3"), ParseError);
  EXPECT_THROW(parse_sequence("3 3"), ParseError);
  EXPECT_THROW(parse_sequence("(-3)"), ParseError);
}

TEST(Parse, ErrorPosition) {
  try {
    parse_sequence("(3,x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Parse, RoundTrip) {
  for (const char* text : {"(6,5,4^4,3)", "(3^4)", "(5^2,3^4)", "(7)", "(9,4^5,3^5)"}) {
    EXPECT_EQ(to_string(parse_sequence(text)), text);
  }
}

TEST(Graphic, Examples) {
  EXPECT_FALSE(is_graphic(parse_sequence("3^5")));
  EXPECT_TRUE(is_graphic(parse_sequence("3^4")));
  EXPECT_TRUE(is_graphic(parse_sequence("(6,5,4^4,3)")));
  EXPECT_FALSE(is_graphic(parse_sequence("(4,1)")));
}

TEST(Graphic, AgreesWithErdosGallaiUpTo10) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n))
      ASSERT_EQ(is_graphic(DegreeSequence(d)), ts::eg_graphic(d)) << to_string(DegreeSequence(d));
}

TEST(Graphic, AgreesWithEnumerationUpTo7) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      const bool exists = all_realizations(seq, {1, false}).next().has_value();
      ASSERT_EQ(is_graphic(seq), exists) << to_string(seq);
    }
}

TEST(Residual, Examples) {
  EXPECT_EQ(residual(parse_sequence("(6,5,4^4,3)")).sequence().degrees(), (std::vector<int>{5, 4, 4, 4, 4, 3}));
  EXPECT_EQ(residual(parse_sequence("3^4")).degrees, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(residual(parse_sequence("(5,4^4,3)")).sequence().degrees(), (std::vector<int>{4, 4, 4, 3, 3}));
}

TEST(Residual, SourceMapping) {
  const auto seq = parse_sequence("(5,4^4,3)");
  const auto r = residual(seq);
  ASSERT_EQ(r.source.size(), 5u);
  for (std::size_t j = 0; j < r.source.size(); ++j) {
    const int p = r.source[j];
    EXPECT_EQ(r.degrees[j], seq[p] - (p < 3 ? 1 : 0));
  }
  EXPECT_EQ(r.decremented_positions(), (std::vector<int>{0, 1, 2}));
}

TEST(Residual, Errors) {
  EXPECT_THROW(residual(DegreeSequence({3})), std::invalid_argument);
  EXPECT_THROW(residual(DegreeSequence({3, 3})), std::invalid_argument);
}

TEST(Residual, PreservesGraphicityUpTo9) {
  for (int n = 2; n <= 9; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      const auto r = residual(seq);
      if (r.has_zero()) {
        // zero entries leave the type; graphicity of the remainder still matches
        std::vector<int> rest;
        for (int x : r.degrees)
          if (x > 0) rest.push_back(x);
        ASSERT_EQ(is_graphic(seq), rest.empty() || ts::eg_graphic(rest)) << to_string(seq);
      } else {
        ASSERT_EQ(is_graphic(seq), is_graphic(r.sequence())) << to_string(seq);
      }
    }
}

TEST(Classify, Examples) {
  auto c = classify(parse_sequence("3^4"));
  EXPECT_EQ(c.tag, ClassTag::ExceptionOddK);
  EXPECT_EQ(c.parameter, 3);
  EXPECT_EQ(classify(parse_sequence("(4,3^6)")).tag, ClassTag::ExceptionN3);
  c = classify(parse_sequence("(4,3^4)"));
  EXPECT_EQ(c.tag, ClassTag::Covered);
  EXPECT_EQ(c.route, Route::T12);
  EXPECT_EQ(classify(parse_sequence("(5,3^5)")).tag, ClassTag::ExceptionOddK);
  EXPECT_EQ(classify(parse_sequence("(5^2,3^4)")).tag, ClassTag::ExceptionOddKSquare);
  EXPECT_EQ(classify(parse_sequence("(3^6)")).tag, ClassTag::ExceptionN3);
  EXPECT_EQ(classify(parse_sequence("3^5")).tag, ClassTag::NotGraphic);
  EXPECT_EQ(classify(parse_sequence("(2,2,2)")).tag, ClassTag::OutOfCoverage);
  EXPECT_EQ(classify(parse_sequence("(4^2,3^4)")).route, Route::L41);
  EXPECT_EQ(classify(parse_sequence("(5,5,3^6)")).route, Route::T14);
  EXPECT_EQ(classify(parse_sequence("(6,4^5,3^4)")).route, Route::T15);
  EXPECT_EQ(classify(parse_sequence("3^10")).tag, ClassTag::OutOfCoverage);
}

TEST(Classify, EvenKIsNotAnException) {
  EXPECT_EQ(classify(parse_sequence("(4,3^4)")).tag, ClassTag::Covered);
  EXPECT_EQ(classify(parse_sequence("(6,3^6)")).tag, ClassTag::Covered);
  EXPECT_EQ(classify(parse_sequence("(4^2,3^3)")).tag, ClassTag::NotGraphic);
}

TEST(Classify, TotalAndConsistentUpTo10) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& d : ts::all_sequences(n, 1, n)) {
      const DegreeSequence seq(d);
      const auto c = classify(seq);
      if (!ts::eg_graphic(d)) {
        ASSERT_EQ(c.tag, ClassTag::NotGraphic);
        continue;
      }
      if (c.is_exception()) {
        ASSERT_EQ(seq.min(), 3);
        ASSERT_FALSE(c.route.has_value());
      }
      if (c.tag == ClassTag::Covered) {
        ASSERT_GE(seq.min(), 3);
        const int d1 = seq.d(1);
        switch (*c.route) {
          case Route::T12: ASSERT_EQ(d1, n - 1); break;
          case Route::L41: ASSERT_EQ(d1, n - 2); break;
          case Route::T14: ASSERT_EQ(d1, n - 3); break;
          case Route::T15: ASSERT_TRUE(d1 <= n - 4 && n >= 6 && seq.d(n - 5) >= 4); break;
        }
      }
      if (seq.min() < 3) {
        ASSERT_EQ(c.tag, ClassTag::OutOfCoverage);
      }
    }
}
