#include <gtest/gtest.h>

#include "russell/coefficient.hpp"

using namespace russell;

TEST(Rational, ReducesAndPrints) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(make_rational(1, 0), DivisionByZero); }

TEST(ModP, FieldArithmetic) {
  ModP a = ModP::from_signed(-1);
  EXPECT_EQ(a.value(), ModP::kModulus - 1);
  EXPECT_EQ(a * a, ModP(1));
  for (std::int64_t v : {2, 3, 12345, 2147483646}) {
    ModP m = ModP::from_signed(v);
    EXPECT_EQ(m * m.inverse(), ModP(1)) << v;
  }
  EXPECT_EQ(ModP(3).pow(4), ModP(81));
}

TEST(ModP, FromRationalMatchesDivision) {
  ModP q = ModP::from_rational(make_rational(3, 7));
  EXPECT_EQ(q * ModP(7), ModP(3));
  EXPECT_EQ(ModP::from_rational(make_rational(-5, 2)) * ModP(2), ModP::from_signed(-5));
}

TEST(ModP, DenominatorDivisibleByModulusThrows) {
  Rational q(1);
  q /= Rational(static_cast<long>(ModP::kModulus));
  EXPECT_THROW(ModP::from_rational(q), DivisionByZero);
  EXPECT_THROW(ModP(0).inverse(), DivisionByZero);
}
