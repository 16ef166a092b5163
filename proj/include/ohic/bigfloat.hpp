#pragma once

// Arbitrary-precision floats (MPFR) and midpoint-radius enclosures.
//
// An Enclosure is a midpoint at a chosen working precision plus a radius
// kept in a short float rounded upward. Every operation returns an
// enclosure that contains the exact result for any inputs inside the
// operand enclosures: the propagated input error is bounded analytically
// and one ulp of the midpoint is added whenever MPFR reports an inexact
// rounding.

#include <mpfr.h>

#include <functional>
#include <string>
#include <string_view>

#include "ohic/exactnum.hpp"

namespace ohic {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kMaxPrecisionBits = 1024;
inline constexpr long kDefaultPrecisionBits = 192;
inline constexpr long kMaxSeriesTerms = 20000;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BigFloat {
 public:
  explicit BigFloat(long prec = kDefaultPrecisionBits);
  BigFloat(long prec, long v);
  BigFloat(long prec, const BigRational& q, mpfr_rnd_t rnd = MPFR_RNDN);
  /// Decimal or scientific literal such as "1e-30"; throws on garbage.
  static BigFloat parse(std::string_view text, long prec = kDefaultPrecisionBits, mpfr_rnd_t rnd = MPFR_RNDN);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact rational value of a finite float.
  BigRational to_rational() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

class Enclosure {
 public:
  /// Radius precision; radii only need a few significant bits.
  static constexpr long kRadiusBits = 64;

  /// Zero with zero radius.
  explicit Enclosure(long prec = kDefaultPrecisionBits);
  /// Encloses mid +- rad (rad rounded upward).
  Enclosure(BigFloat mid, const BigFloat& rad);

  static Enclosure exact(const BigRational& q, long prec);
  static Enclosure from_long(long v, long prec) { return exact(BigRational(v), prec); }

  long precision() const { return mid_.precision(); }
  const BigFloat& mid() const { return mid_; }
  const BigFloat& rad() const { return rad_; }
  /// Upper bound of |x| over the enclosure.
  BigFloat mag() const;
  /// Lower bound of |x| over the enclosure (0 if it straddles 0).
  BigFloat mig() const;
  BigFloat lower() const;
  BigFloat upper() const;

  bool contains(const BigRational& q) const;
  bool contains_zero() const { return contains(BigRational(0)); }
  /// True iff every point of `inner` lies in *this.
  bool contains(const Enclosure& inner) const;
  /// mag() <= tol.
  bool within(const BigFloat& tol) const;

  /// Midpoint to the digits the radius supports, then " +- radius".
  std::string to_string() const;

  Enclosure& add_error(const BigFloat& e);

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws DomainError if b's interval contains 0.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a);

 private:
  BigFloat mid_;
  BigFloat rad_;
};

Enclosure abs(const Enclosure& x);
/// Requires the interval to be >= 0.
Enclosure sqrt(const Enclosure& x);
/// Requires the interval to be > 0.
Enclosure ln(const Enclosure& x);
Enclosure exp(const Enclosure& x);
/// Requires the interval to lie in [-1, 1].
Enclosure arcsin(const Enclosure& x);
Enclosure pow_int(const Enclosure& x, long k);

enum class Constant { kPi, kSqrt5, kAlpha, kBeta, kLn2, kLn3, kLn5, kLnAlpha };
Constant parse_constant(std::string_view name);
std::string_view constant_name(Constant c);
Enclosure constant(Constant c, long prec);
Enclosure constant(std::string_view name, long prec);

/// Sum of term(n) for n >= start with a rigorous tail bound.
///
/// After adding term(N) the remainder is bounded by M(N) q / (1 - q) with
/// q = upper(ratio_bound(N)) and M the majorant (|term| when no majorant is
/// given). The caller guarantees M(n+1) <= ratio_bound(n) M(n) for n >= N,
/// ratio_bound nonincreasing from N on, and |term(n)| <= M(n).
/// Stops once the tail plus the accumulated radius is at most target_err.
/// Throws DomainError when that does not happen within max_terms terms.
Enclosure sum_with_tail_bound(const std::function<Enclosure(long)>& term,
                              const std::function<Enclosure(long)>& ratio_bound, long start,
                              const BigFloat& target_err,
                              const std::function<Enclosure(long)>& majorant = {},
                              long max_terms = kMaxSeriesTerms);

}  // namespace ohic
