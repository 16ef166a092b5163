#include "ohic/quadrature.hpp"

#include <gtest/gtest.h>

namespace ohic {
namespace {

constexpr long P = 192;

BigFloat tol(const char* s) { return BigFloat::parse(s, P); }
Enclosure ex(const BigRational& q) { return Enclosure::exact(q, P); }

void expect_matches_rhs(const Integrand& ig) {
  Enclosure lhs = integrate(ig, P, tol("1e-35"));
  Enclosure rhs = eval(closed_form_rhs(ig), P);
  EXPECT_TRUE((lhs - rhs).within(tol("1e-25"))) << describe(ig) << ": " << lhs.to_string() << " vs " << rhs.to_string();
}

TEST(Quadrature, Lemma1Examples) {
  Enclosure v = integrate(Lemma1Integrand{2, 0}, P, tol("1e-35"));
  EXPECT_TRUE((v - ex(BigRational::parse("0.5443965225759005326251722245"))).within(tol("1e-27")));
  Enclosure z = integrate(Lemma1Integrand{1, 0}, P, tol("1e-35"));
  EXPECT_TRUE(z.within(tol("1e-30")));
  expect_matches_rhs(Lemma1Integrand{1, 2});
}

TEST(Quadrature, QuarticExample) {
  QuarticIntegrand ig{1, QuarticIntegrand::Numerator::kOne};
  Enclosure v = integrate(ig, P, tol("1e-35"));
  EXPECT_TRUE((v - ex(BigRational::parse("-0.67608478348593905459590317807"))).within(tol("1e-27")));
  expect_matches_rhs(ig);
}

TEST(Quadrature, CatalogGrid) {
  for (long n = 0; n <= 4; ++n) {
    expect_matches_rhs(Lemma1Integrand{rat(3, 2), n});
    expect_matches_rhs(Lemma1Integrand{2, n});
    expect_matches_rhs(Lemma1Integrand{pow_int(ClosedForm(Constant::kAlpha), 2), n});
  }
  for (long m : {1L, 2L}) {
    for (long n : {0L, 1L}) {
      expect_matches_rhs(FibFamilyIntegrand{FibFamilyIntegrand::Seq::kLucas, m, n});
      expect_matches_rhs(FibFamilyIntegrand{FibFamilyIntegrand::Seq::kFibonacci, m, n});
    }
    for (auto num : {QuarticIntegrand::Numerator::kTwoXSquaredPlusL, QuarticIntegrand::Numerator::kOne,
                     QuarticIntegrand::Numerator::kXSquared}) {
      expect_matches_rhs(QuarticIntegrand{m, num});
    }
  }
}

TEST(Quadrature, ClosedFormRhs) {
  Enclosure r = eval(closed_form_rhs(Lemma1Integrand{2, 1}), P);
  Enclosure want = constant(Constant::kPi, P) * (constant(Constant::kLn2, P) - ex(1)) / ex(32);
  EXPECT_TRUE((r - want).within(tol("1e-50")));

  Enclosure l = eval(closed_form_rhs(FibFamilyIntegrand{FibFamilyIntegrand::Seq::kLucas, 1, 0}), P);
  Enclosure lw = -(constant(Constant::kPi, P) * constant(Constant::kSqrt5, P) * constant(Constant::kLnAlpha, P));
  EXPECT_TRUE((l - lw).within(tol("1e-50")));

  Enclosure t = eval(closed_form_rhs(Lemma1Integrand{1, 3}), P);
  EXPECT_TRUE((t + ex(rat(23, 96)) * constant(Constant::kPi, P)).within(tol("1e-50")));

  // pi * binom(4,2) * O_2 / 2^5 = pi/4
  Enclosure q = eval(closed_form_rhs(Lemma1Integrand{1, 2}), P);
  EXPECT_TRUE((q + constant(Constant::kPi, P) / ex(4)).within(tol("1e-50")));

  // x -> 1/x turns the x^2 numerator into minus the pure one
  for (long m : {1L, 2L}) {
    Enclosure x2 = eval(closed_form_rhs(QuarticIntegrand{m, QuarticIntegrand::Numerator::kXSquared}), P);
    Enclosure one = eval(closed_form_rhs(QuarticIntegrand{m, QuarticIntegrand::Numerator::kOne}), P);
    EXPECT_TRUE((x2 + one).within(tol("1e-50")));
  }
}

TEST(Quadrature, InvalidParameters) {
  EXPECT_THROW(integrate(Lemma1Integrand{-1, 0}, P, tol("1e-30")), DomainError);
  EXPECT_THROW(integrate(Lemma1Integrand{0, 0}, P, tol("1e-30")), DomainError);
  EXPECT_THROW(integrate(Lemma1Integrand{2, -1}, P, tol("1e-30")), DomainError);
  EXPECT_THROW(integrate(FibFamilyIntegrand{FibFamilyIntegrand::Seq::kLucas, 0, 0}, P, tol("1e-30")), DomainError);
  EXPECT_THROW(integrate(QuarticIntegrand{0, QuarticIntegrand::Numerator::kOne}, P, tol("1e-30")), DomainError);
}

TEST(QuadratureProperty, LevelDifferencesShrink) {
  std::vector<Integrand> all;
  for (long n = 0; n <= 4; ++n) all.push_back(Lemma1Integrand{rat(3, 2), n});
  all.push_back(FibFamilyIntegrand{FibFamilyIntegrand::Seq::kFibonacci, 2, 1});
  all.push_back(QuarticIntegrand{2, QuarticIntegrand::Numerator::kXSquared});
  for (const auto& ig : all) {
    QuadratureResult r = integrate_detailed(ig, P, tol("1e-35"));
    ASSERT_GE(r.level_diffs.size(), 3u);
    const auto& d = r.level_diffs;
    const std::size_t k = d.size();
    EXPECT_TRUE(d[k - 1] < d[k - 2] && d[k - 2] < d[k - 3]) << describe(ig);
  }
}

TEST(QuadratureProperty, SplitPointDoesNotMatter) {
  for (const BigRational& a : {BigRational(2), rat(3, 2), BigRational(5)}) {
    QuadratureResult one = integrate_detailed(Lemma1Integrand{a, 0}, P, tol("1e-35"));
    QuadratureResult two = integrate_detailed(Lemma1Integrand{a, 0}, P, tol("1e-35"), BigRational(2));
    BigFloat r = one.value.rad();
    if (two.value.rad() > r) r = two.value.rad();
    EXPECT_TRUE((one.value - two.value).mid() <= r) << a;
    EXPECT_TRUE((two.value - one.value).mid() <= r) << a;
  }
}

}  // namespace
}  // namespace ohic
