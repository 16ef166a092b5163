#pragma once

// Exact integer and rational scalars. Thin value types over GMP that keep
// every result normalized and turn GMP's abort-on-zero-divisor into an
// exception.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ohic {

/// Raised for mathematically undefined exact operations (p/0, 0^-k, ...).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT: implicit from integer literals
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer.
  static BigInt parse(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  std::size_t bit_length() const;
  std::string to_string() const { return v_.get_str(); }

  const mpz_class& raw() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }
  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
/// a^k for k >= 0.
BigInt pow(const BigInt& a, unsigned long k);
/// Exact quotient; throws if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);
BigInt factorial(unsigned long n);

/// Rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT
  BigRational(const BigInt& v) : v_(v.raw()) {}  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(mpq_class v);

  /// Parses "p", "-p/q" or a finite decimal such as "0.125".
  static BigRational parse(std::string_view text);

  BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string to_string() const { return v_.get_str(); }
  /// Nearest double; only for diagnostics.
  double approx() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }
  friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ + b.v_)); }
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ - b.v_)); }
  friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ * b.v_)); }
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;  // invariant: canonical
};

/// p/q in lowest terms. Throws ArithmeticError when q == 0.
BigRational rat(const BigInt& p, const BigInt& q);
BigRational rat(long p, long q);

BigRational abs(const BigRational& a);
BigRational inverse(const BigRational& a);
/// a^k for any integer k; 0^k with k < 0 throws ArithmeticError.
BigRational pow(const BigRational& a, long k);

std::ostream& operator<<(std::ostream& os, const BigInt& v);
std::ostream& operator<<(std::ostream& os, const BigRational& v);

}  // namespace ohic
