#include "ohic/exactnum.hpp"

#include <ostream>

namespace ohic {

namespace {

mpz_class parse_mpz(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

BigInt BigInt::parse(std::string_view text) { return BigInt(parse_mpz(text)); }

long BigInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("BigInt does not fit in long: " + to_string());
  return v_.get_si();
}

std::size_t BigInt::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.raw()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt pow(const BigInt& a, unsigned long k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.raw().get_mpz_t(), k);
  return BigInt(std::move(r));
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw ArithmeticError("integer division by zero");
  if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t())) {
    throw ArithmeticError(b.to_string() + " does not divide " + a.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigInt(std::move(r));
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw ArithmeticError("zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw ArithmeticError("zero denominator");
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return rat(BigInt::parse(s.substr(0, slash)), BigInt::parse(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits == "-" || digits == "+" || digits.empty()) {
      throw std::invalid_argument("bad decimal literal '" + s + "'");
    }
    std::size_t frac = s.size() - dot - 1;
    return rat(BigInt::parse(digits), pow(BigInt(10), frac));
  }
  return BigRational(BigInt::parse(s));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ArithmeticError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  BigRational r = a;
  r /= b;
  return r;
}

BigRational rat(const BigInt& p, const BigInt& q) { return BigRational(p, q); }
BigRational rat(long p, long q) { return BigRational(BigInt(p), BigInt(q)); }

BigRational abs(const BigRational& a) { return a.sign() < 0 ? -a : a; }

BigRational inverse(const BigRational& a) {
  if (a.is_zero()) throw ArithmeticError("inverse of zero");
  return BigRational(1) / a;
}

BigRational pow(const BigRational& a, long k) {
  if (k < 0) {
    if (a.is_zero()) throw ArithmeticError("zero to a negative power");
    return pow(inverse(a), -k);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.raw().get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), a.raw().get_den_mpz_t(), static_cast<unsigned long>(k));
  return BigRational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

}  // namespace ohic
