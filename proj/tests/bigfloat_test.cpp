#include "ohic/bigfloat.hpp"

#include <gtest/gtest.h>

#include "ohic/sequences.hpp"
#include "test_util.hpp"

namespace ohic {
namespace {

constexpr long P = 192;

Enclosure ex(const BigRational& q, long prec = P) { return Enclosure::exact(q, prec); }

// Enclosure of mid +- rad with both given as rationals (rad rounded up).
Enclosure ball(const BigRational& mid, const BigRational& rad, long prec = P) {
  return Enclosure::exact(mid, prec).add_error(BigFloat(Enclosure::kRadiusBits, rad, MPFR_RNDU));
}

BigFloat tol(const char* s) { return BigFloat::parse(s, P); }

TEST(EnclosureArith, Basics) {
  Enclosure s = ex(1) + ex(2);
  EXPECT_TRUE(s.contains(BigRational(3)));
  EXPECT_TRUE(s.rad().is_zero());

  Enclosure p = ball(1, rat(1, 10)) * ball(1, rat(1, 10));
  EXPECT_TRUE(p.contains(rat(121, 100)));
  EXPECT_TRUE(p.contains(rat(81, 100)));

  EXPECT_THROW(ex(1) / ball(0, rat(1, 2)), DomainError);
  EXPECT_TRUE((ex(1) / ex(3)).contains(rat(1, 3)));
  EXPECT_TRUE((-ex(rat(2, 7))).contains(rat(-2, 7)));
}

TEST(EnclosureElem, Values) {
  Enclosure l = ln(ex(1));
  EXPECT_TRUE(l.contains_zero());
  EXPECT_TRUE(l.within(tol("1e-50")));

  Enclosure r = sqrt(ex(2));
  EXPECT_TRUE(r.contains(BigRational::parse("1.41421356237309504880168872420969807856967187537694")) ||
              (r - ex(BigRational::parse("1.41421356237309504880168872420969807856967187537694"))).within(tol("1e-50")));
  EXPECT_TRUE((r * r - ex(2)).within(tol("1e-55")));

  Enclosure a = arcsin(ex(1));
  Enclosure half_pi = constant(Constant::kPi, P) * ex(rat(1, 2));
  EXPECT_TRUE((a - half_pi).within(tol("1e-55")));

  EXPECT_THROW(ln(ex(0)), DomainError);
  EXPECT_THROW(ln(ball(rat(1, 10), rat(1, 5))), DomainError);
  EXPECT_THROW(sqrt(ex(-1)), DomainError);
  EXPECT_THROW(arcsin(ex(rat(3, 2))), DomainError);
  EXPECT_NO_THROW(sqrt(ex(0)));
}

TEST(EnclosureElem, ArcsinNearBoundary) {
  // arcsin(1 - h) with a radius reaching 1 uses the Hoelder bound.
  Enclosure x = ball(1 - pow(BigRational(2), -40), pow(BigRational(2), -40));
  Enclosure a = arcsin(x);
  EXPECT_TRUE(a.contains(arcsin(ex(1))));
}

TEST(Constants, GoldenRatio) {
  Enclosure alpha = constant("alpha", P);
  Enclosure ref = ex(BigRational::parse("1.6180339887498948482045868343656381177203091798058"));
  EXPECT_TRUE((alpha - ref).within(tol("1e-48")));
  Enclosure beta = constant(Constant::kBeta, P);
  EXPECT_TRUE((alpha * beta + ex(1)).within(tol("1e-55")));
  EXPECT_TRUE((alpha - beta - constant(Constant::kSqrt5, P)).within(tol("1e-55")));
  EXPECT_TRUE((ln(alpha) - constant(Constant::kLnAlpha, P)).within(tol("1e-55")));
  EXPECT_THROW(constant("tau", P), std::invalid_argument);
  EXPECT_EQ(constant_name(parse_constant("ln_alpha")), "ln_alpha");
}

TEST(Constants, SquareRelationsAtEveryPrecision) {
  for (long prec : {64L, 128L, 192L, 256L, 512L, 1024L}) {
    Enclosure a = constant(Constant::kAlpha, prec);
    Enclosure b = constant(Constant::kBeta, prec);
    EXPECT_TRUE((a * a - a - ex(1, prec)).contains_zero()) << prec;
    EXPECT_TRUE((b * b - b - ex(1, prec)).contains_zero()) << prec;
  }
}

TEST(Constants, Logs) {
  Enclosure l2 = constant(Constant::kLn2, P);
  EXPECT_TRUE((exp(l2) - ex(2)).within(tol("1e-55")));
  EXPECT_TRUE((constant(Constant::kLn5, P) - ln(ex(5))).within(tol("1e-55")));
  EXPECT_TRUE((constant(Constant::kLn3, P) - l2 - ln(ex(rat(3, 2)))).within(tol("1e-55")));
}

TEST(TailSum, Geometric) {
  auto term = [](long n) { return ex(pow(rat(1, 2), n)); };
  auto ratio = [](long) { return ex(rat(1, 2)); };
  Enclosure s = sum_with_tail_bound(term, ratio, 0, tol("1e-30"));
  EXPECT_TRUE(s.contains(BigRational(2)));
  EXPECT_TRUE(s.within(tol("2.000000000000000000000000000001")));
  EXPECT_FALSE(s.rad() > tol("1e-30"));
}

TEST(TailSum, CentralBinomialOddHarmonic) {
  // sum binom(2n,n) O_n (1/8)^n = (sqrt 2 / 2) ln 2, terms ratio < 4 * (1 + 1/(2n+1)) / 8
  auto term = [](long n) { return ex(BigRational(central_binomial(n)) * odd_harmonic(n) * pow(rat(1, 8), n)); };
  auto maj = [](long n) { return ex(BigRational(central_binomial(n)) * (odd_harmonic(n) + 1) * pow(rat(1, 8), n)); };
  auto ratio = [](long n) { return ex(rat(1, 2) * (1 + rat(1, 2 * n + 1))); };
  Enclosure s = sum_with_tail_bound(term, ratio, 0, tol("1e-32"), maj);
  Enclosure rhs = sqrt(ex(2)) * ex(rat(1, 2)) * constant(Constant::kLn2, P);
  EXPECT_TRUE((s - rhs).within(tol("1e-30")));
  EXPECT_TRUE((s - ex(BigRational::parse("0.4901290717342735"))).within(tol("1e-15")));
}

TEST(TailSum, NonconvergentThrows) {
  auto term = [](long) { return ex(1); };
  auto ratio = [](long) { return ex(1); };
  EXPECT_THROW(sum_with_tail_bound(term, ratio, 0, tol("1e-10"), {}, 500), DomainError);
}

TEST(EnclosureFormat, DigitsFollowRadius) {
  std::string s = constant(Constant::kAlpha, P).to_string();
  EXPECT_EQ(s.rfind("1.61803398874989484", 0), 0u) << s;
  EXPECT_NE(s.find("+-"), std::string::npos);
  std::string c = ball(rat(1, 3), rat(1, 1000)).to_string();
  EXPECT_EQ(c.substr(0, c.find(' ')), "0.333") << c;
}

TEST(EnclosureProperty, ArithmeticContainment) {
  testing::Gen g(41);
  for (int i = 0; i < 1000; ++i) {
    BigRational am = g.small_rat(50), bm = g.small_rat(50);
    BigRational ar = rat(g.range(0, 50), 1000), br = rat(g.range(0, 50), 1000);
    Enclosure a = ball(am, ar, 128), b = ball(bm, br, 128);
    // random points inside each interval
    BigRational x = am + ar * rat(g.range(-100, 100), 100);
    BigRational y = bm + br * rat(g.range(-100, 100), 100);
    ASSERT_TRUE((a + b).contains(x + y));
    ASSERT_TRUE((a - b).contains(x - y));
    ASSERT_TRUE((a * b).contains(x * y));
    if (b.mig().sign() > 0) ASSERT_TRUE((a / b).contains(x / y));
    ASSERT_TRUE(pow_int(a, 3).contains(pow(x, 3)));
    ASSERT_TRUE(abs(a).contains(abs(x)));
  }
}

TEST(EnclosureProperty, ElementaryContainment) {
  testing::Gen g(42);
  for (int i = 0; i < 1000; ++i) {
    BigRational m = rat(g.range(1, 4000), g.range(1, 40));
    BigRational r = m * rat(g.range(0, 30), 100);
    BigRational x = m + r * rat(g.range(-100, 100), 100);
    Enclosure e = ball(m, r, 128);
    Enclosure pt = ex(x, 256);
    // A high precision point evaluation lies inside the wide enclosure.
    ASSERT_TRUE(sqrt(e).contains(sqrt(pt))) << m << " " << r;
    ASSERT_TRUE(ln(e).contains(ln(pt))) << m << " " << r;
    long si = g.range(-99, 99);
    BigRational s = rat(si, 100);
    BigRational sr = rat(g.range(0, 99 - std::abs(si)), 100);
    Enclosure es = ball(s, sr, 128);
    BigRational sx = s + sr * rat(g.range(-100, 100), 100);
    ASSERT_TRUE(arcsin(es).contains(arcsin(ex(sx, 256)))) << s << " " << sr;
    BigRational z = rat(g.range(-300, 300), 37);
    ASSERT_TRUE(exp(ball(z, rat(1, 100), 128)).contains(exp(ex(z + rat(g.range(-10, 10), 1000), 256))));
  }
}

TEST(EnclosureProperty, ExpOfLn) {
  testing::Gen g(43);
  for (int i = 0; i < 1000; ++i) {
    BigRational x = rat(g.range(1, 1000000), g.range(1, 1000));
    ASSERT_TRUE(exp(ln(ex(x))).contains(x)) << x;
  }
}

TEST(EnclosureProperty, DoublingPrecisionNeverWidens) {
  testing::Gen g(44);
  for (int i = 0; i < 200; ++i) {
    BigRational a = rat(g.range(1, 500), g.range(1, 50));
    auto expr = [&](long p) {
      return ln(ex(a, p)) * sqrt(ex(a + 1, p)) / constant(Constant::kAlpha, p) + arcsin(ex(rat(1, 3), p));
    };
    for (long p : {64L, 128L, 256L}) {
      Enclosure lo = expr(p), hi = expr(2 * p);
      ASSERT_TRUE(hi.rad() <= lo.rad());
    }
  }
}

}  // namespace
}  // namespace ohic
