#include <gtest/gtest.h>

#include "support.hpp"
#include "russell/filtration.hpp"

using namespace russell;
using namespace russell::testing;

TEST(Degree, Generators) {
  EXPECT_EQ(deg(A("x")), Degree(-1));
  EXPECT_EQ(deg(A("y")), Degree(2));
  EXPECT_EQ(deg(A("z")), Degree(0));
  EXPECT_EQ(deg(A("t")), Degree(0));
  EXPECT_EQ(deg(A("x^2*y")), Degree(0));
  EXPECT_EQ(deg(A("1")), Degree(0));
  EXPECT_TRUE(deg(A("0")).is_neg_inf());
  EXPECT_EQ(to_string(deg(A("0"))), "-inf");
}

TEST(Degree, NegInfOrdering) {
  EXPECT_LT(Degree::neg_inf(), Degree(-1000));
  EXPECT_TRUE((Degree::neg_inf() + Degree(3)).is_neg_inf());
  EXPECT_EQ(Degree(2) + Degree(-5), Degree(-3));
}

TEST(Degree, LaurentOracleMatchesIndependentExpansion) {
  for (const char* e : {"x", "y", "x^2*y", "z", "x*y", "y^3 + x", "x*y*z - t^4*y^2", "5"}) {
    RingElement a = A(e);
    auto expected = pole_order(a.poly());
    ASSERT_TRUE(expected.has_value()) << e;
    EXPECT_EQ(deg_laurent_oracle(a), Degree(*expected)) << e;
    EXPECT_EQ(deg(a), Degree(*expected)) << e;
  }
  EXPECT_EQ(*pole_order(P("y")), 2);
  EXPECT_EQ(*pole_order(P("x")), -1);
  EXPECT_EQ(*pole_order(P("-x-z^3-t^2")), 0);
  EXPECT_FALSE(pole_order(P("x+x^2*y+z^3+t^2")).has_value());
}

TEST(Degree, LaurentOracleOnlyForA) { EXPECT_THROW(deg_laurent_oracle(B("x")), AlgebraError); }

TEST(Graded, LeadingForms) {
  EXPECT_EQ(gr(A("x+y")), B("y"));
  for (const char* g : {"x", "y", "z", "t"}) EXPECT_EQ(gr(A(g)), B(g));
  EXPECT_EQ(gr(A("x+x^2*y")), B("-z^3-t^2"));
  EXPECT_THROW(gr(A("0")), AlgebraError);
  EXPECT_THROW(gr(B("x")), AlgebraError);
}

TEST(Graded, Components) {
  auto c = homogeneous_components(B("x+y"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].weight, -1);
  EXPECT_EQ(c[0].part, B("x"));
  EXPECT_EQ(c[1].weight, 2);
  EXPECT_EQ(c[1].part, B("y"));
  auto n = homogeneous_components(B("z^3+t^2"));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0].weight, 0);
  EXPECT_TRUE(homogeneous_components(B("0")).empty());
}

TEST(Graded, Homogeneity) {
  EXPECT_TRUE(is_homogeneous(B("x^2*y"), 0));
  EXPECT_TRUE(is_homogeneous(B("x*y"), 1));
  EXPECT_FALSE(is_homogeneous(B("x+y"), -1));
  EXPECT_FALSE(homogeneous_degree(B("x+y")).has_value());
  EXPECT_EQ(homogeneous_degree(B("x*y*z")), 1);
  EXPECT_EQ(component(B("x+y+x*y"), 1), B("x*y"));
}
