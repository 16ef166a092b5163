#pragma once

// Truncated formal power series over the rationals.
//
// A TruncatedSeries of order N stores the N+1 coefficients of x^0..x^N.
// Every operation is exact; two series are equal iff all coefficients are.
// Binary operations require matching orders.

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ohic/exactnum.hpp"

namespace ohic {

inline constexpr long kDefaultSeriesOrder = 64;
inline constexpr long kMaxSeriesOrder = 256;

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(long order);
  /// Takes ownership of coeffs; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<BigRational> coeffs);

  /// Low-order coefficients, zero padded to `order`.
  static TruncatedSeries poly(std::span<const BigRational> low, long order);
  static TruncatedSeries poly(std::initializer_list<BigRational> low, long order);
  static TruncatedSeries constant(const BigRational& c, long order);
  /// The series with coefficient gen(n) at x^n.
  static TruncatedSeries generate(long order, const std::function<BigRational(long)>& gen);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& operator[](long n) const { return c_.at(static_cast<std::size_t>(n)); }
  std::span<const BigRational> coeffs() const { return c_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigRational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= BigRational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const BigRational& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigRational> c_;
};

/// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
/// h with h*g = f; requires g(0) != 0.
TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g);
/// ln f for f(0) = 1, via f L' = f'. Constant term 0.
TruncatedSeries log_unit(const TruncatedSeries& f);
/// f^e for f(0) = 1 and rational e, via f (f^e)' = e f' f^e.
TruncatedSeries pow_rat(const TruncatedSeries& f, const BigRational& e);
/// f(c x): a_n -> a_n c^n.
TruncatedSeries compose_scale(const TruncatedSeries& f, const BigRational& c);
/// (even part, odd part) with even + odd = f.
std::pair<TruncatedSeries, TruncatedSeries> parity_split(const TruncatedSeries& f);
/// x^k f, truncated.
TruncatedSeries shift_mul_x(const TruncatedSeries& f, long k);
/// f / x^k. The k lowest coefficients must vanish; the top k slots are
/// unknown after the shift and are zero-filled, so callers compare only
/// up to order() - k.
TruncatedSeries shift_down(const TruncatedSeries& f, long k);
/// Termwise d/dx; the top coefficient becomes 0.
TruncatedSeries derivative(const TruncatedSeries& f);
/// Integral from 0 to x; drops the x^{N+1} term.
TruncatedSeries integral(const TruncatedSeries& f);

enum class Calculus { kDerivative, kIntegral };
TruncatedSeries derive_integrate(const TruncatedSeries& f, Calculus mode);

/// a_n -> a_n / (2n+1). As a function this is (1/(2 sqrt x)) * integral_0^x
/// f(t) t^{-1/2} dt, which lets arcsin(2 sqrt x)/(2 sqrt x) and
/// asinh(2 sqrt x)/(2 sqrt x) be built from (1 -+ 4x)^{-1/2} without
/// materializing sqrt(x).
TruncatedSeries sqrt_weighted_integral(const TruncatedSeries& f);

/// Keeps coefficients 0..order.
TruncatedSeries truncate(const TruncatedSeries& f, long order);

/// Index of the first differing coefficient among 0..upto (default: all).
std::optional<long> first_mismatch(const TruncatedSeries& f, const TruncatedSeries& g,
                                   std::optional<long> upto = std::nullopt);

/// Coefficients of the form u + v * Lambda where Lambda = ln(base) is kept
/// symbolic. Lambda-degree never exceeds 1.
class LogSeries {
 public:
  LogSeries(BigRational base, TruncatedSeries u, TruncatedSeries v);

  /// ln(base * f) = Lambda + ln f for a unit series f.
  static LogSeries log_of(const BigRational& base, const TruncatedSeries& f);

  const BigRational& base() const { return base_; }
  long order() const { return u_.order(); }
  const TruncatedSeries& rational_part() const { return u_; }
  const TruncatedSeries& log_part() const { return v_; }
  bool is_log_free() const { return v_.is_zero(); }

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator*(const LogSeries& a, const TruncatedSeries& g);
  friend LogSeries operator*(const TruncatedSeries& g, const LogSeries& a) { return a * g; }
  friend LogSeries operator*(const LogSeries& a, const BigRational& s);
  /// Throws SeriesError if both factors carry Lambda (degree would be 2).
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);

 private:
  BigRational base_;
  TruncatedSeries u_;
  TruncatedSeries v_;
};

/// ln(a0 + t)/(a0 + t) expanded in t to order N, with Lambda = ln a0.
/// n! [t^n] equals (-1)^n n! (Lambda - H_n) / a0^{n+1}.
LogSeries taylor_shift_log(const BigRational& a0, long order);

/// 1/(x^2 + (a0 + t)^2) expanded in t to order N.
TruncatedSeries taylor_shift_rational_sq(const BigRational& a0, const BigRational& x, long order);

}  // namespace ohic
