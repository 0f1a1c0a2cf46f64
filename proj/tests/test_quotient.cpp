#include <gtest/gtest.h>

#include "support.hpp"

using namespace russell;
using namespace russell::testing;

TEST(Quotient, NormalFormsInA) {
  EXPECT_EQ(S(A("x^2*y")), "-1*x + -1*z^3 + -1*t^2");
  EXPECT_EQ(A("x^4*y^2"), A("x^2 + 2*x*z^3 + 2*x*t^2 + z^6 + 2*z^3*t^2 + t^4"));
  EXPECT_EQ(S(A("x^4*y^2")), S(A("x^2+2*x*z^3+2*x*t^2+z^6+2*z^3*t^2+t^4")));
  EXPECT_TRUE(A("x + x^2*y + z^3 + t^2").is_zero());
}

TEST(Quotient, Multiplication) {
  EXPECT_EQ(A("x") * A("x*y"), A("-x-z^3-t^2"));
  EXPECT_EQ(S(B("x") * B("x*y")), "-1*z^3 + -1*t^2");
  EXPECT_EQ(A("x*y+z") * ring_constant(ring_a(), 1), A("x*y+z"));
}

TEST(Quotient, Equality) {
  EXPECT_TRUE(equal(A("x^2*y"), A("-x-z^3-t^2")));
  EXPECT_TRUE(equal(A("y"), A("y")));
  EXPECT_FALSE(equal(A("x"), A("y")));
}

TEST(Quotient, RingMismatchThrows) {
  EXPECT_THROW(A("x") + B("x"), AlgebraError);
  EXPECT_THROW(A("x") * B("x"), AlgebraError);
}

TEST(Quotient, OtherRings) {
  EXPECT_EQ(S(nf(ring_neil(), "z^4")), "-1*z*t^2");
  EXPECT_EQ(S(nf(ring_v(), "x^3")), "-1*x*z^3 + -1*x*t^2");
  EXPECT_THROW(ring_by_name("C"), std::invalid_argument);
  EXPECT_EQ(ring_by_name("Neil"), ring_neil());
}

TEST(Quotient, StrategiesAgree) {
  Polynomial f = P("x^5*y^3 + x^3*y^2*z - 7*x^2*y*t + y^4*x^6");
  for (RingPtr r : {ring_a(), ring_b()})
    EXPECT_EQ(r->reduce(f, ReductionStrategy::order_maximal_first),
              r->reduce(f, ReductionStrategy::leftmost_first));
}

TEST(Quotient, NormalFormAgreesWithEvaluationOnX) {
  std::mt19937_64 rng(11);
  Polynomial f = P("x^4*y^3 - 2*x^3*y*z + t^5*y^2*x^2 + 1/3");
  Polynomial g = ring_a()->reduce(f);
  for (int i = 0; i < 20; ++i) {
    auto pt = point_on(false, rng);
    EXPECT_EQ(evaluate(f, pt), evaluate(g, pt));
  }
}

TEST(Quotient, ForcedPointDraws) {
  auto p = point_from_draw(Surface::X, Rational(1), Rational(0), Rational(0));
  EXPECT_EQ(p.at("y"), -1);
  auto q = point_from_draw(Surface::X, Rational(1), Rational(-1), Rational(1));
  EXPECT_EQ(q.at("y"), -1);
  EXPECT_EQ(evaluate(P("x+x^2*y+z^3+t^2"), q), 0);
  auto w = point_from_draw(Surface::W, Rational(2), Rational(1), Rational(0));
  EXPECT_EQ(w.at("y"), make_rational(-1, 4));
  EXPECT_EQ(evaluate(P("x^2*y+z^3+t^2"), w), 0);
}

TEST(Quotient, RandomPointsLieOnSurface) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_EQ(evaluate(P("x+x^2*y+z^3+t^2"), random_point(Surface::X, seed)), 0);
    EXPECT_EQ(evaluate(P("x^2*y+z^3+t^2"), random_point(Surface::W, seed)), 0);
    EXPECT_NE(random_point(Surface::X, seed).at("x"), 0);
  }
  EXPECT_EQ(random_point(Surface::X, 5), random_point(Surface::X, 5));
}

TEST(Quotient, OracleEqual) {
  for (auto field : {OracleField::rational, OracleField::mod_p}) {
    EXPECT_TRUE(oracle_equal(A("x^2*y"), A("-x-z^3-t^2"), 50, 3, field));
    EXPECT_FALSE(oracle_equal(A("x"), A("y"), 50, 3, field));
    EXPECT_TRUE(oracle_equal(B("x*y"), B("x*y"), 10, 0, field));
  }
}
