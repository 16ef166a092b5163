#include "ohic/exactnum.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace ohic {
namespace {

TEST(Rat, Normalizes) {
  EXPECT_EQ(rat(4, 6).to_string(), "2/3");
  EXPECT_EQ(rat(-3, -9).to_string(), "1/3");
  BigRational z = rat(0, 5);
  EXPECT_EQ(z.num(), BigInt(0));
  EXPECT_EQ(z.den(), BigInt(1));
}

TEST(Rat, ZeroDenominatorThrows) { EXPECT_THROW(rat(1, 0), ArithmeticError); }

TEST(Rat, Arithmetic) {
  EXPECT_EQ(rat(1, 2) + rat(1, 3), rat(5, 6));
  EXPECT_EQ(rat(3, 4) * rat(4, 3), BigRational(1));
  EXPECT_THROW(BigRational(1) / BigRational(0), ArithmeticError);
  EXPECT_EQ(rat(1, 2) - rat(5, 6), rat(-1, 3));
}

TEST(Rat, Power) {
  EXPECT_EQ(pow(rat(2, 3), 3), rat(8, 27));
  EXPECT_EQ(pow(rat(5, 7), 0), BigRational(1));
  EXPECT_EQ(pow(rat(1, 4), -2), BigRational(16));
  EXPECT_THROW(pow(BigRational(0), -1), ArithmeticError);
  EXPECT_EQ(pow(BigRational(0), 0), BigRational(1));
}

TEST(Rat, Parse) {
  EXPECT_EQ(BigRational::parse("-6/4"), rat(-3, 2));
  EXPECT_EQ(BigRational::parse("0.125"), rat(1, 8));
  EXPECT_EQ(BigRational::parse("17"), BigRational(17));
  EXPECT_THROW(BigRational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("3/0"), ArithmeticError);
}

TEST(BigIntTest, Basics) {
  EXPECT_EQ(factorial(10), BigInt(3628800));
  EXPECT_EQ(gcd(BigInt(84), BigInt(-36)), BigInt(12));
  EXPECT_EQ(pow(BigInt(2), 100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(exact_div(BigInt(91), BigInt(7)), BigInt(13));
  EXPECT_THROW(exact_div(BigInt(91), BigInt(5)), ArithmeticError);
  EXPECT_EQ(BigInt(255).bit_length(), 8u);
  EXPECT_FALSE(pow(BigInt(2), 80).fits_long());
  EXPECT_THROW(pow(BigInt(2), 80).to_long(), std::overflow_error);
}

TEST(RatProperty, FieldLaws) {
  testing::Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    BigRational a = g.small_rat(1000), b = g.small_rat(1000), c = g.small_rat(1000);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) ASSERT_EQ(a * inverse(a), BigRational(1));
  }
}

TEST(RatProperty, RoundTripWideOperands) {
  testing::Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    BigInt p = g.big(256);
    BigInt q = g.big(256);
    if (q.is_zero()) continue;
    BigRational r = rat(p, q);
    ASSERT_EQ(r * BigRational(q), BigRational(p));
    ASSERT_GT(r.den(), BigInt(0));
    ASSERT_EQ(gcd(abs(r.num()), r.den()), BigInt(1));
  }
}

}  // namespace
}  // namespace ohic
