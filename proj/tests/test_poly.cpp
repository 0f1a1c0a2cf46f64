#include <gtest/gtest.h>

#include "support.hpp"

using namespace russell;
using russell::testing::P;

namespace {
const ContextPtr kLaurent = VarContext::make({{"lam", true}, {"z"}, {"t"}});
}

TEST(Polynomial, Addition) {
  EXPECT_EQ(P("(x+y) + (-y)"), P("x"));
  EXPECT_EQ(P("z^3+t^2") + Polynomial(xyzt_context()), P("z^3+t^2"));
  EXPECT_EQ(P("z^3+t^2") + P("z^3+t^2"), P("2*z^3+2*t^2"));
  EXPECT_TRUE((P("x") - P("x")).is_zero());
}

TEST(Polynomial, Multiplication) {
  EXPECT_EQ(P("x") * P("x^2"), P("x^3"));
  EXPECT_EQ(P("z+t") * P("z-t"), P("z^2-t^2"));
  Polynomial a = parse("lam^-1", kLaurent), b = parse("lam^2", kLaurent);
  EXPECT_EQ(a * b, parse("lam", kLaurent));
}

TEST(Polynomial, NegativeExponentOnPolynomialVariableRejected) {
  Polynomial f(xyzt_context());
  EXPECT_THROW(f.add_term(Monomial(std::vector<int>{-1, 0, 0, 0}), 1), AlgebraError);
}

TEST(Polynomial, Substitute) {
  Polynomial r = P("x^2*y+z^3+t^2");
  EXPECT_EQ(substitute(r, Bindings{{"x", P("-x")}}), r);
  auto ctx = VarContext::make({{"lam", true}, {"x"}, {"y"}, {"z"}, {"t"}});
  Polynomial img = parse("-lam^2*(z^3+t^2)", ctx);
  EXPECT_EQ(substitute(P("y"), Bindings{{"y", img}}, ctx), parse("-lam^2*z^3 - lam^2*t^2", ctx));
  Bindings identity{{"x", P("x")}, {"y", P("y")}, {"z", P("z")}, {"t", P("t")}};
  EXPECT_EQ(substitute(r, identity), r);
}

TEST(Polynomial, SubstituteNegativePowerOfUnit) {
  Polynomial f = parse("lam^-2*z", kLaurent);
  Polynomial g = substitute(f, Bindings{{"lam", parse("2*lam^3", kLaurent)}}, kLaurent);
  EXPECT_EQ(g, parse("1/4*lam^-6*z", kLaurent));
}

TEST(Polynomial, Partial) {
  Polynomial r = P("x+x^2*y+z^3+t^2");
  EXPECT_EQ(partial(r, "x"), P("1+2*x*y"));
  EXPECT_EQ(partial(r, "t"), P("2*t"));
  EXPECT_TRUE(partial(P("7/3"), "z").is_zero());
}

TEST(Polynomial, Eval) {
  Polynomial r = P("x+x^2*y+z^3+t^2");
  Point<Rational> p{{"x", 1}, {"y", -1}, {"z", 0}, {"t", 0}};
  EXPECT_EQ(eval(r, p), 0);
  Point<Rational> q{{"x", make_rational(3, 2)}, {"y", 0}, {"z", 0}, {"t", 0}};
  EXPECT_EQ(eval(P("x"), q), make_rational(3, 2));
  Point<Rational> neil{{"x", 0}, {"y", 0}, {"z", -1}, {"t", 1}};
  EXPECT_EQ(eval(P("z^3+t^2"), neil), 0);
}

TEST(Polynomial, EvalLaurentAtZeroThrows) {
  Point<Rational> p{{"lam", 0}, {"z", 1}, {"t", 1}};
  EXPECT_THROW(eval(parse("lam^-1", kLaurent), p), DivisionByZero);
}

TEST(Polynomial, ContextMismatchThrows) {
  auto other = VarContext::make({{"z"}, {"t"}});
  EXPECT_THROW(P("z") + parse("z", other), AlgebraError);
}

TEST(Polynomial, PrintCanonical) {
  EXPECT_EQ(to_string(Polynomial(xyzt_context())), "0");
  EXPECT_EQ(to_string(P("-x-z^3-t^2")), "-1*x + -1*z^3 + -1*t^2");
  EXPECT_EQ(to_string(P("t^2 + 1/2*x*y - 3")), "1/2*x*y + 1*t^2 + -3");
}
