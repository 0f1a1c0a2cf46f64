#include <gtest/gtest.h>

#include "support.hpp"

using namespace russell;
using russell::testing::P;

namespace {

std::size_t error_position(const std::string& src) {
  try {
    parse(src, xyzt_context());
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << src;
  return 0;
}

Polynomial handmade(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  Polynomial f(xyzt_context());
  for (const auto& [e, c] : terms) f.add_term(Monomial(e), c);
  return f;
}

}  // namespace

TEST(Parser, RussellRelation) {
  EXPECT_EQ(P("x + x^2*y + z^3 + t^2"),
            handmade({{{1, 0, 0, 0}, 1}, {{2, 1, 0, 0}, 1}, {{0, 0, 3, 0}, 1}, {{0, 0, 0, 2}, 1}}));
}

TEST(Parser, Basics) {
  EXPECT_EQ(P("-2*t"), handmade({{{0, 0, 0, 1}, -2}}));
  EXPECT_EQ(P("(z+t)^2"), handmade({{{0, 0, 2, 0}, 1}, {{0, 0, 1, 1}, 2}, {{0, 0, 0, 2}, 1}}));
  EXPECT_EQ(P("3/6*x"), handmade({{{1, 0, 0, 0}, make_rational(1, 2)}}));
  EXPECT_EQ(P("-x^2"), handmade({{{2, 0, 0, 0}, -1}}));
  EXPECT_EQ(P("2 - -x"), handmade({{{0, 0, 0, 0}, 2}, {{1, 0, 0, 0}, 1}}));
  EXPECT_EQ(P("  x\t*\ny "), handmade({{{1, 1, 0, 0}, 1}}));
  EXPECT_TRUE(P("x - x").is_zero());
}

TEST(Parser, Errors) {
  EXPECT_EQ(error_position("x + w"), 4u);
  EXPECT_EQ(error_position("2x"), 1u);
  EXPECT_EQ(error_position("x^2^3"), 3u);
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("(x+y"), 4u);
  EXPECT_EQ(error_position("x + "), 4u);
  EXPECT_EQ(error_position("x^-1"), 0u);
  error_position("1/0");
  error_position("x^y");
  error_position("x $ y");
}

TEST(Parser, ErrorMessageCarriesPosition) {
  try {
    P("x + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
}

TEST(Parser, LaurentVariableAcceptsNegativeExponent) {
  auto ctx = VarContext::make({{"lam", true}, {"z"}});
  Polynomial f = parse("lam^-2*z + lam", ctx);
  EXPECT_NE(to_string(f).find("lam^-2*z"), std::string::npos);
  EXPECT_EQ(parse(to_string(f), ctx), f);
}

TEST(Parser, DeepNestingRejected) {
  std::string deep(1000, '(');
  deep += "x";
  deep += std::string(1000, ')');
  EXPECT_THROW(P(deep), ParseError);
}

TEST(Parser, HugeExponentRejected) { EXPECT_THROW(P("x^100000000"), ParseError); }
