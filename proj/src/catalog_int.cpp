#include "catalog_internal.hpp"
#include "ohic/quadrature.hpp"

namespace ohic::detail {
namespace {

BigFloat quadrature_target(const CheckContext& ctx) { return reachable_target(ctx.tol, 8, ctx.prec); }

void run(Recorder& rec, const Integrand& ig) {
  const auto& ctx = rec.ctx();
  Enclosure lhs = integrate(ig, ctx.prec, quadrature_target(ctx));
  rec.numeric(describe(ig), lhs, eval(closed_form_rhs(ig), ctx.prec));
}

void lemma_one(Recorder& rec) {
  const std::vector<ClosedForm> as = {ClosedForm(rat(3, 2)), ClosedForm(2),
                                      pow_int(ClosedForm(Constant::kAlpha), 2)};
  for (const auto& a : as) {
    for (long n = 0; n <= 4; ++n) run(rec, Lemma1Integrand{a, n});
  }
}

void fibonacci_families(Recorder& rec) {
  for (auto seq : {FibFamilyIntegrand::Seq::kLucas, FibFamilyIntegrand::Seq::kFibonacci}) {
    for (long m = 1; m <= 2; ++m) {
      for (long n = 0; n <= 1; ++n) run(rec, FibFamilyIntegrand{seq, m, n});
    }
  }
}

void quartic_particulars(Recorder& rec) {
  using N = QuarticIntegrand::Numerator;
  rec.name_primary("sign_corrected");
  const auto& ctx = rec.ctx();
  for (long m = 1; m <= 2; ++m) {
    for (N num : {N::kTwoXSquaredPlusL, N::kOne, N::kXSquared}) {
      QuarticIntegrand ig{m, num};
      Enclosure lhs = integrate(ig, ctx.prec, quadrature_target(ctx));
      Enclosure rhs = eval(closed_form_rhs(ig), ctx.prec);
      rec.numeric(describe(ig), lhs, rhs);
      // The printed x^2 value carries the opposite sign.
      if (num == N::kXSquared) rec.reading("printed_sign", describe(ig), lhs, -rhs);
    }
  }
}

}  // namespace

void add_integral_entries(std::vector<Entry>& out) {
  out.push_back({{"INT-01", IdentityKind::kInt, "Sec. 2 lemma, integral of ln x/(a^2+x^2)^(n+1)",
                  "a=3/2,2,alpha^2; n=0..4", ExpectedStatus::kPass},
                 lemma_one});
  out.push_back({{"INT-02", IdentityKind::kInt, "Sec. 6 theorem, two integral families with Lucas and Fibonacci weights",
                  "seq=L,F; m=1,2; n=0,1", ExpectedStatus::kPass},
                 fibonacci_families});
  out.push_back({{"INT-03", IdentityKind::kInt, "Sec. 6, three particular integrals over x^4 + L_4m x^2 + 1",
                  "numerator=2x^2+L_4m,1,x^2; m=1,2", ExpectedStatus::kPass},
                 quartic_particulars});
}

}  // namespace ohic::detail
