#include "ohic/quadrature.hpp"

#include <cmath>

namespace ohic {

namespace {

constexpr long kGuardBits = 32;

// ln(x) * P(x^2) / Q(x^2)^power, coefficients in increasing degree.
struct Kernel {
  std::vector<BigFloat> p;
  std::vector<BigFloat> q;
  long power = 1;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

BigFloat to_float(const BigRational& v, long w) { return BigFloat(w, v); }

Kernel make_kernel(const Integrand& ig, long w) {
  Kernel k;
  if (const auto* l1 = std::get_if<Lemma1Integrand>(&ig)) {
    require(l1->n >= 0, "lemma1 integrand needs n >= 0");
    Enclosure a = eval(l1->a, w);
    require(a.lower().sign() > 0, "lemma1 integrand needs a > 0, got " + a.to_string());
    BigFloat a2(w);
    mpfr_sqr(a2.get(), a.mid().get(), MPFR_RNDN);
    k.p = {BigFloat(w, 1)};
    k.q = {a2, BigFloat(w, 1)};
    k.power = l1->n + 1;
    return k;
  }
  auto quartic = [w](long m) {
    return std::vector<BigFloat>{BigFloat(w, 1), to_float(BigRational(lucas(4 * m)), w), BigFloat(w, 1)};
  };
  if (const auto* fam = std::get_if<FibFamilyIntegrand>(&ig)) {
    require(fam->m >= 1 && fam->n >= 0, "family integrand needs m >= 1 and n >= 0");
    const long n1 = fam->n + 1;
    for (long j = 0; j <= n1; ++j) {
      const long idx = 4 * fam->m * (n1 - j);
      BigInt s = fam->seq == FibFamilyIntegrand::Seq::kLucas ? lucas(idx) : fibonacci(idx);
      k.p.push_back(to_float(BigRational(binomial(n1, j) * s), w));
    }
    k.q = quartic(fam->m);
    k.power = n1;
    return k;
  }
  const auto& qu = std::get<QuarticIntegrand>(ig);
  require(qu.m >= 1, "quartic integrand needs m >= 1");
  switch (qu.numerator) {
    case QuarticIntegrand::Numerator::kTwoXSquaredPlusL:
      k.p = {to_float(BigRational(lucas(4 * qu.m)), w), BigFloat(w, 2)};
      break;
    case QuarticIntegrand::Numerator::kOne:
      k.p = {BigFloat(w, 1)};
      break;
    case QuarticIntegrand::Numerator::kXSquared:
      k.p = {BigFloat(w, 0), BigFloat(w, 1)};
      break;
  }
  k.q = quartic(qu.m);
  k.power = 1;
  return k;
}

// Scratch registers for one integrand evaluation.
struct Evaluator {
  const Kernel& k;
  long w;
  BigFloat y, acc, num, den, lg;

  Evaluator(const Kernel& kern, long prec) : k(kern), w(prec), y(prec), acc(prec), num(prec), den(prec), lg(prec) {}

  void horner(const std::vector<BigFloat>& c, BigFloat& out) {
    mpfr_set(out.get(), c.back().get(), MPFR_RNDN);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      mpfr_mul(out.get(), out.get(), y.get(), MPFR_RNDN);
      mpfr_add(out.get(), out.get(), c[i].get(), MPFR_RNDN);
    }
  }

  // out = ln(x) P(x^2) / Q(x^2)^power
  void f(const BigFloat& x, BigFloat& out) {
    mpfr_sqr(y.get(), x.get(), MPFR_RNDN);
    horner(k.p, num);
    horner(k.q, den);
    mpfr_pow_si(den.get(), den.get(), k.power, MPFR_RNDN);
    mpfr_log(lg.get(), x.get(), MPFR_RNDN);
    mpfr_mul(out.get(), lg.get(), num.get(), MPFR_RNDN);
    mpfr_div(out.get(), out.get(), den.get(), MPFR_RNDN);
  }
};

// Smallest t beyond which tanh-sinh weights drop under 2^-bits.
double t_limit(long bits) {
  double t = 0.5;
  while (M_PI * std::sinh(t) - std::log(M_PI * std::cosh(t)) < bits * M_LN2) t += 0.05;
  return t;
}

}  // namespace

std::string describe(const Integrand& ig) {
  if (const auto* l1 = std::get_if<Lemma1Integrand>(&ig)) {
    return "lemma1(a=" + l1->a.to_string() + ",n=" + std::to_string(l1->n) + ")";
  }
  if (const auto* fam = std::get_if<FibFamilyIntegrand>(&ig)) {
    return std::string(fam->seq == FibFamilyIntegrand::Seq::kLucas ? "fib_family_L" : "fib_family_F") +
           "(m=" + std::to_string(fam->m) + ",n=" + std::to_string(fam->n) + ")";
  }
  const auto& q = std::get<QuarticIntegrand>(ig);
  const char* num = q.numerator == QuarticIntegrand::Numerator::kTwoXSquaredPlusL ? "2x^2+L4m"
                    : q.numerator == QuarticIntegrand::Numerator::kOne            ? "1"
                                                                                  : "x^2";
  return "quartic(m=" + std::to_string(q.m) + ",numerator=" + num + ")";
}

QuadratureResult integrate_detailed(const Integrand& ig, long prec, const BigFloat& target_err,
                                    const BigRational& split) {
  require(split.sign() > 0, "split point must be positive");
  require(target_err.sign() > 0, "target error must be positive");
  const long w = prec + kGuardBits;
  const Kernel kernel = make_kernel(ig, w);
  Evaluator ev(kernel, w);
  const BigFloat c = to_float(split, w);
  const double tmax = t_limit(w + 40);

  BigFloat t(w), s(w), ch(w), e(w), u(w), one_plus(w), weight(w), x(w), g1(w), g2(w), term(w), pi(w);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigFloat total(w), abs_total(w), h(w);

  // Adds weight(t) * [f(c u) + f(c/u) / u^2] at t = k h to total.
  auto add_node = [&](long kk, int level) {
    mpfr_set_si_2exp(t.get(), kk, -level, MPFR_RNDN);
    mpfr_sinh_cosh(s.get(), ch.get(), t.get(), MPFR_RNDN);
    mpfr_mul(e.get(), s.get(), pi.get(), MPFR_RNDN);
    mpfr_neg(e.get(), e.get(), MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), MPFR_RNDN);  // E = exp(-pi sinh t)
    mpfr_add_ui(one_plus.get(), e.get(), 1, MPFR_RNDN);
    mpfr_ui_div(u.get(), 1, one_plus.get(), MPFR_RNDN);  // u = 1/(1+E)
    // weight = pi cosh t * E / (1+E)^2
    mpfr_mul(weight.get(), pi.get(), ch.get(), MPFR_RNDN);
    mpfr_mul(weight.get(), weight.get(), e.get(), MPFR_RNDN);
    mpfr_div(weight.get(), weight.get(), one_plus.get(), MPFR_RNDN);
    mpfr_div(weight.get(), weight.get(), one_plus.get(), MPFR_RNDN);
    if (mpfr_zero_p(u.get())) return;

    mpfr_mul(x.get(), c.get(), u.get(), MPFR_RNDN);
    ev.f(x, g1);
    mpfr_div(x.get(), c.get(), u.get(), MPFR_RNDN);
    ev.f(x, g2);
    mpfr_div(g2.get(), g2.get(), u.get(), MPFR_RNDN);
    mpfr_div(g2.get(), g2.get(), u.get(), MPFR_RNDN);
    mpfr_add(term.get(), g1.get(), g2.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), weight.get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
    mpfr_abs(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(abs_total.get(), abs_total.get(), term.get(), MPFR_RNDN);
  };

  QuadratureResult result{Enclosure(prec), 0, {}};
  BigFloat prev(w), cur(w), diff(w), quarter(w);
  mpfr_div_2ui(quarter.get(), target_err.get(), 2, MPFR_RNDN);

  for (int level = 0; level <= kMaxQuadratureLevel; ++level) {
    const long kmax = static_cast<long>(std::ceil(tmax * std::ldexp(1.0, level)));
    const long step = level == 0 ? 1 : 2;
    for (long kk = level == 0 ? 0 : 1; kk <= kmax; kk += step) {
      add_node(kk, level);
      if (kk != 0) add_node(-kk, level);
    }
    mpfr_set_si_2exp(h.get(), 1, -level, MPFR_RNDN);
    mpfr_mul(cur.get(), total.get(), h.get(), MPFR_RNDN);
    if (level > 0) {
      mpfr_sub(diff.get(), cur.get(), prev.get(), MPFR_RNDN);
      mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
      BigFloat scaled_diff(Enclosure::kRadiusBits);
      mpfr_mul(scaled_diff.get(), diff.get(), c.get(), MPFR_RNDU);
      result.level_diffs.push_back(scaled_diff);
      if (level >= 3 && diff < quarter) {
        // radius: 4 * last difference plus an accumulated rounding floor
        BigFloat rad(Enclosure::kRadiusBits), floor(Enclosure::kRadiusBits);
        mpfr_mul_2ui(rad.get(), diff.get(), 2, MPFR_RNDU);
        mpfr_mul(floor.get(), abs_total.get(), h.get(), MPFR_RNDU);
        mpfr_mul_2si(floor.get(), floor.get(), -(w - 24), MPFR_RNDU);
        mpfr_add(rad.get(), rad.get(), floor.get(), MPFR_RNDU);
        mpfr_mul(rad.get(), rad.get(), c.get(), MPFR_RNDU);
        BigFloat mid(prec);
        mpfr_mul(mid.get(), cur.get(), c.get(), MPFR_RNDN);
        result.value = Enclosure(std::move(mid), rad);
        result.level = level;
        return result;
      }
    }
    mpfr_set(prev.get(), cur.get(), MPFR_RNDN);
  }
  throw DomainError("quadrature of " + describe(ig) + " did not converge by level " +
                    std::to_string(kMaxQuadratureLevel));
}

Enclosure integrate(const Integrand& ig, long prec, const BigFloat& target_err) {
  return integrate_detailed(ig, prec, target_err).value;
}

ClosedForm closed_form_rhs(const Integrand& ig) {
  const ClosedForm pi(Constant::kPi), sqrt5(Constant::kSqrt5), ln_alpha(Constant::kLnAlpha);
  if (const auto* l1 = std::get_if<Lemma1Integrand>(&ig)) {
    const long n = l1->n;
    return pi * ClosedForm(BigRational(central_binomial(n))) * (ln(l1->a) - ClosedForm(odd_harmonic(n))) /
           pow_int(ClosedForm(2) * l1->a, 2 * n + 1);
  }
  if (const auto* fam = std::get_if<FibFamilyIntegrand>(&ig)) {
    const long m = fam->m, n = fam->n, idx = 2 * m * (2 * n + 1);
    const ClosedForm scale = ClosedForm(-BigRational(central_binomial(n))) * pi / ClosedForm(pow(BigRational(2), 2 * n + 1));
    ClosedForm inner = fam->seq == FibFamilyIntegrand::Seq::kLucas
                           ? ClosedForm(2 * m) * sqrt5 * ClosedForm::fibonacci(idx) * ln_alpha +
                                 ClosedForm(odd_harmonic(n)) * ClosedForm::lucas(idx)
                           : ClosedForm(2 * m) / sqrt5 * ClosedForm::lucas(idx) * ln_alpha +
                                 ClosedForm(odd_harmonic(n)) * ClosedForm::fibonacci(idx);
    return scale * inner;
  }
  const auto& q = std::get<QuarticIntegrand>(ig);
  const ClosedForm m(q.m), f2m = ClosedForm::fibonacci(2 * q.m);
  switch (q.numerator) {
    case QuarticIntegrand::Numerator::kTwoXSquaredPlusL:
      return -(m * sqrt5 * pi * f2m * ln_alpha);
    case QuarticIntegrand::Numerator::kOne:
      return -(m * pi / (sqrt5 * f2m)) * ln_alpha;
    case QuarticIntegrand::Numerator::kXSquared:
      break;
  }
  // x -> 1/x maps this integral onto minus the kOne integral.
  return m * pi / (sqrt5 * f2m) * ln_alpha;
}

}  // namespace ohic
