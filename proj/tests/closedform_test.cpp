#include "ohic/closedform.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace ohic {
namespace {

constexpr long P = 192;

BigFloat tol(const char* s) { return BigFloat::parse(s, P); }
Enclosure ex(const BigRational& q, long prec = P) { return Enclosure::exact(q, prec); }

TEST(ClosedFormEval, LogOverRootTwo) {
  ClosedForm cf = -ClosedForm(Constant::kLn2) / (ClosedForm(2) * sqrt(ClosedForm(2)));
  Enclosure v = eval(cf, P);
  EXPECT_FALSE(v.rad() > tol("1e-40"));
  EXPECT_TRUE((v - ex(BigRational::parse("-0.24506453586713679792847543090880834532"))).within(tol("1e-38")));
}

TEST(ClosedFormEval, BinetFourth) {
  ClosedForm alpha(Constant::kAlpha), beta(Constant::kBeta);
  ClosedForm cf = ClosedForm(Constant::kSqrt5) * ClosedForm::fibonacci(4) - (pow_int(alpha, 4) - pow_int(beta, 4));
  EXPECT_TRUE(eval(cf, P).contains_zero());
}

TEST(ClosedFormEval, RootThreeMix) {
  ClosedForm cf = parse_closed_form("mul(div(sqrt(3),2),add(mul(sqrt(5),ln(3)),mul(2,ln(alpha))))");
  Enclosure v = eval(cf, P);
  EXPECT_TRUE((v - ex(BigRational::parse("2.960936879181381502496879440345277438592"))).within(tol("1e-38")));
}

TEST(ClosedFormEval, DomainErrorNamesNode) {
  try {
    eval(parse_closed_form("mul(2,add(1,ln(sub(1,1))))"), P);
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_EQ(e.path(), "mul[1].add[1].ln");
  }
  EXPECT_THROW(eval(parse_closed_form("ln(0)"), P), EvalError);
  EXPECT_THROW(eval(parse_closed_form("div(1,sub(alpha,alpha))"), P), EvalError);
  EXPECT_THROW(eval(parse_closed_form("arcsin(2)"), P), EvalError);
}

TEST(ClosedFormParse, RoundTrip) {
  for (const char* text : {"mul(div(sqrt(3),2),add(mul(sqrt(5),ln(3)),mul(2,ln(alpha))))",
                           "add(1,2,3/4,-5)", "pow(beta,-7)", "gibonacci(1/2,-3,12)", "neg(abs(lucas(-5)))",
                           "exp(arcsin(1/3))", "sub(ln_alpha,ln5)"}) {
    ClosedForm cf = parse_closed_form(text);
    EXPECT_EQ(cf.to_string(), text);
    EXPECT_EQ(parse_closed_form(cf.to_string()).to_string(), cf.to_string());
  }
  EXPECT_EQ(parse_closed_form(" add ( 1 , 0.5 ) ").to_string(), "add(1,1/2)");
  EXPECT_EQ(parse_closed_form("pow_int(2,3)").to_string(), "pow(2,3)");
}

TEST(ClosedFormParse, ErrorsCarryPosition) {
  auto pos_of = [](const char* text) -> long {
    try {
      parse_closed_form(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(pos_of("add(1,"), 6);
  EXPECT_EQ(pos_of("foo(1)"), 0);
  EXPECT_EQ(pos_of("add(1,2))"), 8);
  EXPECT_EQ(pos_of("mul(2,tau)"), 6);
  EXPECT_EQ(pos_of("pow(2,1/2)"), 6);
  EXPECT_EQ(pos_of("sqrt(1,2)"), 8);
  EXPECT_EQ(pos_of("add(1)"), 5);
  EXPECT_EQ(pos_of(""), 0);
  EXPECT_EQ(pos_of("gibonacci(0,0,3)"), 10);
}

TEST(Binet, Residuals) {
  EXPECT_TRUE(binet_residual(GibonacciParams::fibonacci(), 10, P).contains_zero());
  EXPECT_TRUE(binet_residual(GibonacciParams::lucas(), -5, P).contains_zero());
  EXPECT_TRUE(binet_residual({1, 3}, 6, P).contains_zero());
  EXPECT_THROW(binet_residual({1, 3}, 600, P), std::invalid_argument);
}

TEST(SqrtPower, LemmaResiduals) {
  EXPECT_TRUE(sqrt_power_identity_residual(2, 1, P).contains_zero());
  EXPECT_TRUE(sqrt_power_identity_residual(3, -1, P).contains_zero());
  EXPECT_TRUE(sqrt_power_identity_residual(4, -1, P).contains_zero());
  for (long r = 0; r <= 12; ++r) {
    EXPECT_TRUE(sqrt_power_identity_residual(r, 1, P).contains_zero()) << r;
    if (r > 0) EXPECT_TRUE(sqrt_power_identity_residual(r, -1, P).contains_zero()) << r;
  }
  EXPECT_THROW(sqrt_power_identity_residual(-2, 1, P), std::invalid_argument);
}

TEST(ClosedFormProperty, BinetEnclosesZero) {
  testing::Gen g(51);
  std::vector<GibonacciParams> kinds{GibonacciParams::fibonacci(), GibonacciParams::lucas()};
  for (int i = 0; i < 5; ++i) kinds.emplace_back(g.nonzero_rat(), g.small_rat());
  for (const auto& p : kinds) {
    for (long j = -100; j <= 100; ++j) ASSERT_TRUE(binet_residual(p, j, P).contains_zero()) << p.to_string() << " " << j;
  }
}

ClosedForm random_rational_tree(testing::Gen& g, int depth, BigRational& value) {
  if (depth == 0 || g.range(0, 3) == 0) {
    value = g.nonzero_rat(30);
    return ClosedForm(value);
  }
  BigRational a, b;
  ClosedForm l = random_rational_tree(g, depth - 1, a);
  ClosedForm r = random_rational_tree(g, depth - 1, b);
  switch (g.range(0, 4)) {
    case 0: value = a + b; return l + r;
    case 1: value = a - b; return l - r;
    case 2: value = a * b; return l * r;
    case 3:
      if (b.is_zero()) { value = a * b; return l * r; }
      value = a / b; return l / r;
    default: value = -a; return -l;
  }
}

TEST(ClosedFormProperty, RationalTreesMatchExactArithmetic) {
  testing::Gen g(52);
  for (int i = 0; i < 1000; ++i) {
    BigRational v;
    ClosedForm cf = random_rational_tree(g, 4, v);
    Enclosure e = eval(cf, P);
    ASSERT_TRUE(e.contains(v)) << cf.to_string();
    // only rounding-level inflation: a handful of ulps relative to the magnitude
    BigFloat scale(64, abs(v) + 1);
    mpfr_mul_2si(scale.get(), scale.get(), -150, MPFR_RNDU);
    ASSERT_TRUE(e.rad() <= scale) << cf.to_string();
  }
}

TEST(ClosedFormProperty, RadiusShrinksWithPrecision) {
  for (const char* text : {"mul(div(sqrt(3),2),add(mul(sqrt(5),ln(3)),mul(2,ln(alpha))))",
                           "div(neg(ln2),mul(2,sqrt(2)))", "div(mul(pi,ln_alpha),sqrt5)"}) {
    ClosedForm cf = parse_closed_form(text);
    for (long p : {64L, 128L, 256L, 512L}) ASSERT_TRUE(eval(cf, 2 * p).rad() <= eval(cf, p).rad()) << text << p;
  }
}

}  // namespace
}  // namespace ohic
