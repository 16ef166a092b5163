#pragma once

// Double-exponential quadrature of ln(x) R(x) over (0, inf) for the
// rational kernels of the log-integral families.
//
// The half line is split at c and the outer piece folded back with
// x = c/u, giving c * integral_0^1 [f(c u) + f(c/u)/u^2] du; that unit
// interval integral is computed with tanh-sinh nodes, halving the step
// until two successive levels agree.

#include <variant>
#include <vector>

#include "ohic/closedform.hpp"

namespace ohic {

inline constexpr int kMaxQuadratureLevel = 12;

/// ln x / (a^2 + x^2)^(n+1), a > 0, n >= 0.
struct Lemma1Integrand {
  ClosedForm a;
  long n;
};

/// ln x * sum_j binom(n+1, j) S_{4m(n+1-j)} x^{2j} / (x^4 + L_{4m} x^2 + 1)^(n+1)
/// with S = L or S = F; m >= 1, n >= 0.
struct FibFamilyIntegrand {
  enum class Seq { kLucas, kFibonacci };
  Seq seq;
  long m;
  long n;
};

/// ln x * numerator / (x^4 + L_{4m} x^2 + 1), m >= 1.
struct QuarticIntegrand {
  enum class Numerator { kTwoXSquaredPlusL, kOne, kXSquared };
  long m;
  Numerator numerator;
};

using Integrand = std::variant<Lemma1Integrand, FibFamilyIntegrand, QuarticIntegrand>;

std::string describe(const Integrand& ig);

struct QuadratureResult {
  Enclosure value;
  int level = 0;
  /// |S_k - S_{k-1}| for each refinement step, in order.
  std::vector<BigFloat> level_diffs;
};

/// Throws DomainError on invalid parameters or when level 12 is reached
/// without two levels agreeing within target_err / 4.
QuadratureResult integrate_detailed(const Integrand& ig, long prec, const BigFloat& target_err,
                                    const BigRational& split = BigRational(1));
Enclosure integrate(const Integrand& ig, long prec, const BigFloat& target_err);

/// The closed-form value of the integral.
ClosedForm closed_form_rhs(const Integrand& ig);

}  // namespace ohic
