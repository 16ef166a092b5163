#include "ohic/sequences.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace ohic {
namespace {

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(0), BigRational(0));
  EXPECT_EQ(harmonic(4), rat(25, 12));
  EXPECT_EQ(harmonic(5), rat(137, 60));
  EXPECT_THROW(harmonic(-1), std::invalid_argument);
}

TEST(Harmonic, OddAndSecondOrder) {
  EXPECT_EQ(odd_harmonic(0), BigRational(0));
  EXPECT_EQ(odd_harmonic(2), rat(4, 3));
  EXPECT_EQ(odd_harmonic(3), rat(23, 15));
  EXPECT_EQ(harmonic2(0), BigRational(0));
  EXPECT_EQ(harmonic2(2), rat(5, 4));
  EXPECT_EQ(harmonic2(3), rat(49, 36));
  EXPECT_THROW(odd_harmonic(-2), std::invalid_argument);
  EXPECT_THROW(harmonic2(-2), std::invalid_argument);
}

TEST(Harmonic, PastTableCapacity) {
  const long n = kHarmonicTableSize + 3;
  EXPECT_EQ(harmonic(n) - harmonic(n - 1), rat(1, n));
  EXPECT_EQ(odd_harmonic(n) - odd_harmonic(n - 1), rat(1, 2 * n - 1));
  const long m = kHarmonic2TableSize + 1;
  EXPECT_EQ(harmonic2(m) - harmonic2(m - 1), rat(1, m * m));
}

TEST(Sn, Values) {
  EXPECT_EQ(s_n(0), BigRational(0));
  EXPECT_EQ(s_n(1), BigRational(0));
  EXPECT_EQ(s_n(2), BigRational(1));
  EXPECT_EQ(s_n(3), BigRational(2));
  EXPECT_THROW(s_n(-1), std::invalid_argument);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(6, 3), BigInt(20));
  EXPECT_EQ(binomial(4, 7), BigInt(0));
  EXPECT_EQ(binomial(8, 4), BigInt(70));
  EXPECT_EQ(binomial(5, -1), BigInt(0));
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Catalan, Values) {
  EXPECT_EQ(catalan(-1), rat(-1, 2));
  EXPECT_EQ(catalan(0), BigRational(1));
  EXPECT_EQ(catalan(4), BigRational(14));
  EXPECT_THROW(catalan(-2), std::invalid_argument);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(rat(7, 3), 0), BigRational(1));
  EXPECT_EQ(pochhammer(3, 2), BigRational(12));
  EXPECT_EQ(pochhammer(1, 2), BigRational(2));
  EXPECT_EQ(pochhammer(-1, 2), BigRational(0));
  EXPECT_EQ(pochhammer(rat(1, 2), 3), rat(15, 8));
}

TEST(Gibonacci, Values) {
  EXPECT_EQ(gibonacci({0, 1}, 7), BigRational(13));
  EXPECT_EQ(gibonacci({2, 1}, -3), BigRational(-4));
  EXPECT_EQ(gibonacci({0, 1}, -4), BigRational(-3));
  EXPECT_EQ(fibonacci(10), BigInt(55));
  EXPECT_EQ(lucas(-5), BigInt(-11));
  EXPECT_THROW(GibonacciParams(0, 0), std::invalid_argument);
}

TEST(Gibonacci, LargeIndexMatchesRecurrence) {
  const GibonacciParams p(rat(1, 3), rat(-2, 5));
  for (long j : {kGibonacciRecurrenceBound + 1, kGibonacciRecurrenceBound + 2, -kGibonacciRecurrenceBound - 1,
                 -kGibonacciRecurrenceBound - 2}) {
    const long s = j > 0 ? 1 : -1;
    // G_{j} = G_{j-1} + G_{j-2} in whichever direction steps back inside the bound
    if (s > 0) {
      EXPECT_EQ(gibonacci(p, j), gibonacci(p, j - 1) + gibonacci(p, j - 2)) << j;
    } else {
      EXPECT_EQ(gibonacci(p, j), gibonacci(p, j + 2) - gibonacci(p, j + 1)) << j;
    }
  }
  // F_{-k} = (-1)^{k+1} F_k
  EXPECT_EQ(fibonacci(-600), -fibonacci(600));
  EXPECT_EQ(fibonacci(-601), fibonacci(601));
}

TEST(SequenceProperty, HarmonicSplitsIntoEvenAndOdd) {
  for (long n = 0; n <= 200; ++n) {
    ASSERT_EQ(harmonic(2 * n), rat(1, 2) * harmonic(n) + odd_harmonic(n)) << n;
    if (n >= 1) ASSERT_EQ(harmonic(2 * n - 1), rat(1, 2) * harmonic(n - 1) + odd_harmonic(n)) << n;
  }
}

TEST(SequenceProperty, Differences) {
  for (long n = 1; n <= 200; ++n) {
    ASSERT_EQ(harmonic(n) - harmonic(n - 1), rat(1, n));
    ASSERT_EQ(odd_harmonic(n) - odd_harmonic(n - 1), rat(1, 2 * n - 1));
    ASSERT_EQ(harmonic2(n) - harmonic2(n - 1), rat(1, n * n));
  }
}

TEST(SequenceProperty, SnAsDoubledHarmonicSum) {
  BigRational acc;
  for (long n = 1; n <= 200; ++n) {
    acc += harmonic(n - 1) * rat(1, n);
    ASSERT_EQ(s_n(n), BigRational(2) * acc) << n;
  }
}

TEST(SequenceProperty, ReciprocalProductSum) {
  for (long n = 1; n <= 200; ++n) {
    BigRational lhs;
    for (long j = 1; j < n; ++j) lhs += rat(1, j * (n - j));
    ASSERT_EQ(lhs, BigRational(2) * harmonic(n - 1) * rat(1, n)) << n;
  }
}

TEST(SequenceProperty, CatalanTimesSuccessor) {
  for (long n = 0; n <= 200; ++n) ASSERT_EQ(catalan(n) * BigRational(n + 1), BigRational(central_binomial(n)));
}

TEST(SequenceProperty, GibonacciLinearity) {
  testing::Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    BigRational a = g.small_rat(), b = g.small_rat();
    if (a.is_zero() && b.is_zero()) continue;
    long j = g.range(-20, 20);
    ASSERT_EQ(gibonacci({a, b}, j), a * gibonacci({1, 0}, j) + b * gibonacci({0, 1}, j));
  }
}

}  // namespace
}  // namespace ohic
