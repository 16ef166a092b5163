#include "ohic/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace ohic {

namespace {

constexpr long kR = Enclosure::kRadiusBits;

void check_prec(long prec) {
  if (prec < kMinPrecisionBits || prec > kMaxPrecisionBits) {
    throw std::invalid_argument("precision " + std::to_string(prec) + " outside [" +
                                std::to_string(kMinPrecisionBits) + ", " + std::to_string(kMaxPrecisionBits) + "]");
  }
}

// Radius arithmetic: everything nonnegative, rounded up unless noted.
BigFloat r_abs(const BigFloat& x) {
  BigFloat r(kR);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}
BigFloat r_add(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kR);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
BigFloat r_mul(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kR);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
BigFloat r_div(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kR);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
// |x| rounded down.
BigFloat r_abs_down(const BigFloat& x) {
  BigFloat r(kR);
  mpfr_abs(r.get(), x.get(), MPFR_RNDD);
  return r;
}

// One unit in the last place of x at its own precision.
BigFloat ulp(const BigFloat& x) {
  BigFloat r(kR);
  if (x.is_zero() || !x.is_finite()) {
    // An inexact zero only arises from underflow; the smallest positive
    // float bounds that error.
    mpfr_set_ui_2exp(r.get(), 1, mpfr_get_emin(), MPFR_RNDU);
    return r;
  }
  mpfr_set_ui_2exp(r.get(), 1, mpfr_get_exp(x.get()) - x.precision(), MPFR_RNDU);
  return r;
}

Enclosure make(BigFloat mid, BigFloat rad, int ternary) {
  if (ternary != 0) rad = r_add(rad, ulp(mid));
  return Enclosure(std::move(mid), rad);
}

long joint_prec(const Enclosure& a, const Enclosure& b) { return std::max(a.precision(), b.precision()); }

// m - r rounded down, at radius precision.
BigFloat lower_down(const Enclosure& x) {
  BigFloat r(kR);
  mpfr_sub(r.get(), x.mid().get(), x.rad().get(), MPFR_RNDD);
  return r;
}

BigRational q_of(const BigFloat& f) { return f.to_rational(); }

}  // namespace

// ---- BigFloat ----

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long prec, long v) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long prec, const BigRational& q, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.raw().get_mpq_t(), rnd);
}

BigFloat BigFloat::parse(std::string_view text, long prec, mpfr_rnd_t rnd) {
  BigFloat f(prec);
  std::string s(text);
  char* end = nullptr;
  if (s.empty()) throw std::invalid_argument("empty decimal");
  mpfr_strtofr(f.v_, s.c_str(), &end, 10, rnd);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("bad decimal '" + s + "'");
  if (!f.is_finite()) throw std::invalid_argument("non-finite decimal '" + s + "'");
  return f;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigRational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite float has no rational value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return BigRational(std::move(q));
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---- Enclosure ----

Enclosure::Enclosure(long prec) : mid_(prec), rad_(kR) { check_prec(prec); }

Enclosure::Enclosure(BigFloat mid, const BigFloat& rad) : mid_(std::move(mid)), rad_(kR) {
  if (rad.sign() < 0 || !rad.is_finite()) throw std::invalid_argument("radius must be finite and nonnegative");
  if (!mid_.is_finite()) throw DomainError("non-finite midpoint");
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

Enclosure Enclosure::exact(const BigRational& q, long prec) {
  check_prec(prec);
  BigFloat mid(prec);
  int t = mpfr_set_q(mid.get(), q.raw().get_mpq_t(), MPFR_RNDN);
  return make(std::move(mid), BigFloat(kR), t);
}

BigFloat Enclosure::mag() const { return r_add(r_abs(mid_), rad_); }

BigFloat Enclosure::mig() const {
  BigFloat m = r_abs_down(mid_);
  BigFloat r(kR);
  mpfr_sub(r.get(), m.get(), rad_.get(), MPFR_RNDD);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

BigFloat Enclosure::lower() const { return lower_down(*this); }

BigFloat Enclosure::upper() const {
  BigFloat r(kR);
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

bool Enclosure::contains(const BigRational& q) const { return abs(q - q_of(mid_)) <= q_of(rad_); }

bool Enclosure::contains(const Enclosure& inner) const {
  return abs(q_of(inner.mid_) - q_of(mid_)) + q_of(inner.rad_) <= q_of(rad_);
}

bool Enclosure::within(const BigFloat& tol) const { return abs(q_of(mid_)) + q_of(rad_) <= q_of(tol); }

std::string Enclosure::to_string() const {
  const int max_digits = static_cast<int>(std::floor(precision() * 0.30102999566398120));
  int digits = max_digits;
  if (!rad_.is_zero() && !mid_.is_zero()) {
    long e_mid = 0, e_rad = 0;
    mpfr_get_d_2exp(&e_mid, mid_.get(), MPFR_RNDN);
    mpfr_get_d_2exp(&e_rad, rad_.get(), MPFR_RNDN);
    digits = static_cast<int>(std::floor((e_mid - e_rad) * 0.30102999566398120)) + 1;
    digits = std::clamp(digits, 1, max_digits);
  }
  std::string m;
  if (mid_.is_zero()) {
    m = "0";
  } else {
    long e10 = static_cast<long>(std::floor(std::log10(std::fabs(mpfr_get_d(mid_.get(), MPFR_RNDN)))));
    char* buf = nullptr;
    if (e10 >= -6 && e10 < 16) {
      int decimals = std::max(0, digits - 1 - static_cast<int>(e10));
      mpfr_asprintf(&buf, "%.*Rf", decimals, mid_.get());
    } else {
      mpfr_asprintf(&buf, "%.*Re", digits - 1, mid_.get());
    }
    m = buf;
    mpfr_free_str(buf);
  }
  return m + " +- " + rad_.to_string(3);
}

Enclosure& Enclosure::add_error(const BigFloat& e) {
  rad_ = r_add(rad_, r_abs(e));
  return *this;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  BigFloat mid(joint_prec(a, b));
  int t = mpfr_add(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return make(std::move(mid), r_add(a.rad_, b.rad_), t);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  BigFloat mid(joint_prec(a, b));
  int t = mpfr_sub(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return make(std::move(mid), r_add(a.rad_, b.rad_), t);
}

Enclosure operator-(const Enclosure& a) {
  BigFloat mid(a.precision());
  mpfr_neg(mid.get(), a.mid_.get(), MPFR_RNDN);
  return Enclosure(std::move(mid), a.rad_);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  BigFloat mid(joint_prec(a, b));
  int t = mpfr_mul(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |xy - ab| <= |a| rb + |b| ra + ra rb
  BigFloat rad = r_add(r_add(r_mul(r_abs(a.mid_), b.rad_), r_mul(r_abs(b.mid_), a.rad_)), r_mul(a.rad_, b.rad_));
  return make(std::move(mid), rad, t);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  BigFloat d = b.mig();
  if (d.is_zero()) throw DomainError("division by an enclosure containing 0");
  BigFloat mid(joint_prec(a, b));
  int t = mpfr_div(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |x/y - a/b| <= (ra |b| + |a| rb) / (|b| (|b| - rb))
  BigFloat num = r_add(r_mul(a.rad_, r_abs(b.mid_)), r_mul(r_abs(a.mid_), b.rad_));
  BigFloat den(kR);
  mpfr_mul(den.get(), d.get(), r_abs_down(b.mid_).get(), MPFR_RNDD);
  BigFloat rad = num.is_zero() ? BigFloat(kR) : r_div(num, den);
  return make(std::move(mid), rad, t);
}

Enclosure abs(const Enclosure& x) {
  BigFloat mid(x.precision());
  mpfr_abs(mid.get(), x.mid().get(), MPFR_RNDN);
  return Enclosure(std::move(mid), x.rad());
}

Enclosure sqrt(const Enclosure& x) {
  BigFloat l = lower_down(x);
  if (l.sign() < 0) throw DomainError("sqrt of an enclosure reaching below 0: " + x.to_string());
  BigFloat mid(x.precision());
  int t = mpfr_sqrt(mid.get(), x.mid().get(), MPFR_RNDN);
  BigFloat rad(kR);
  if (!x.rad().is_zero()) {
    if (l.sign() > 0) {
      // |sqrt y - sqrt m| = |y - m| / (sqrt y + sqrt m) <= r / (sqrt l + sqrt m)
      BigFloat sl(kR), sm(kR), den(kR);
      mpfr_sqrt(sl.get(), l.get(), MPFR_RNDD);
      mpfr_sqrt(sm.get(), x.mid().get(), MPFR_RNDD);
      mpfr_add(den.get(), sl.get(), sm.get(), MPFR_RNDD);
      rad = r_div(x.rad(), den);
    } else {
      mpfr_sqrt(rad.get(), x.rad().get(), MPFR_RNDU);
    }
  }
  return make(std::move(mid), rad, t);
}

Enclosure ln(const Enclosure& x) {
  BigFloat l = lower_down(x);
  if (l.sign() <= 0) throw DomainError("ln of an enclosure not bounded away from 0: " + x.to_string());
  BigFloat mid(x.precision());
  int t = mpfr_log(mid.get(), x.mid().get(), MPFR_RNDN);
  BigFloat rad = x.rad().is_zero() ? BigFloat(kR) : r_div(x.rad(), l);
  return make(std::move(mid), rad, t);
}

Enclosure exp(const Enclosure& x) {
  BigFloat mid(x.precision());
  int t = mpfr_exp(mid.get(), x.mid().get(), MPFR_RNDN);
  if (!mid.is_finite()) throw DomainError("exp overflow");
  BigFloat rad(kR);
  if (!x.rad().is_zero()) {
    // |e^y - e^m| <= r e^{m + r}
    BigFloat hi = x.upper();
    BigFloat e(kR);
    mpfr_exp(e.get(), hi.get(), MPFR_RNDU);
    rad = r_mul(x.rad(), e);
  }
  return make(std::move(mid), rad, t);
}

Enclosure arcsin(const Enclosure& x) {
  BigFloat m = x.mag();
  BigFloat one(kR, 1);
  if (m > one) throw DomainError("arcsin of an enclosure leaving [-1, 1]: " + x.to_string());
  BigFloat mid(x.precision());
  int t = mpfr_asin(mid.get(), x.mid().get(), MPFR_RNDN);
  BigFloat rad(kR);
  if (!x.rad().is_zero()) {
    if (m < one) {
      // derivative bound 1/sqrt(1 - M^2) on the interval
      BigFloat m2(kR), gap(kR), s(kR);
      mpfr_sqr(m2.get(), m.get(), MPFR_RNDU);
      mpfr_ui_sub(gap.get(), 1, m2.get(), MPFR_RNDD);
      mpfr_sqrt(s.get(), gap.get(), MPFR_RNDD);
      rad = r_div(x.rad(), s);
    }
    // arcsin is 1/2-Hoelder: |arcsin u - arcsin v| <= pi sqrt(|u - v| / 2) <= 3 sqrt(r)
    BigFloat h(kR);
    mpfr_sqrt(h.get(), x.rad().get(), MPFR_RNDU);
    mpfr_mul_ui(h.get(), h.get(), 3, MPFR_RNDU);
    if (m == one || h < rad) rad = h;
  }
  return make(std::move(mid), rad, t);
}

Enclosure pow_int(const Enclosure& x, long k) {
  if (k < 0) return Enclosure::from_long(1, x.precision()) / pow_int(x, -k);
  Enclosure result = Enclosure::from_long(1, x.precision());
  Enclosure base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

struct ConstantInfo {
  Constant c;
  std::string_view name;
};

constexpr ConstantInfo kConstants[] = {
    {Constant::kPi, "pi"},     {Constant::kSqrt5, "sqrt5"}, {Constant::kAlpha, "alpha"},
    {Constant::kBeta, "beta"}, {Constant::kLn2, "ln2"},     {Constant::kLn3, "ln3"},
    {Constant::kLn5, "ln5"},   {Constant::kLnAlpha, "ln_alpha"},
};

}  // namespace

Constant parse_constant(std::string_view name) {
  for (const auto& c : kConstants) {
    if (c.name == name) return c.c;
  }
  throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

std::string_view constant_name(Constant c) {
  for (const auto& k : kConstants) {
    if (k.c == c) return k.name;
  }
  return "?";
}

Enclosure constant(Constant c, long prec) {
  check_prec(prec);
  auto half = [prec] { return Enclosure::exact(rat(1, 2), prec); };
  auto one = [prec] { return Enclosure::from_long(1, prec); };
  switch (c) {
    case Constant::kPi: {
      BigFloat mid(prec);
      int t = mpfr_const_pi(mid.get(), MPFR_RNDN);
      return make(std::move(mid), BigFloat(kR), t);
    }
    case Constant::kLn2: {
      BigFloat mid(prec);
      int t = mpfr_const_log2(mid.get(), MPFR_RNDN);
      return make(std::move(mid), BigFloat(kR), t);
    }
    case Constant::kSqrt5:
      return sqrt(Enclosure::from_long(5, prec));
    case Constant::kAlpha:
      return (one() + constant(Constant::kSqrt5, prec)) * half();
    case Constant::kBeta:
      return (one() - constant(Constant::kSqrt5, prec)) * half();
    case Constant::kLn3:
      return ln(Enclosure::from_long(3, prec));
    case Constant::kLn5:
      return ln(Enclosure::from_long(5, prec));
    case Constant::kLnAlpha:
      return ln(constant(Constant::kAlpha, prec));
  }
  throw std::invalid_argument("unknown constant");
}

Enclosure constant(std::string_view name, long prec) { return constant(parse_constant(name), prec); }

Enclosure sum_with_tail_bound(const std::function<Enclosure(long)>& term,
                              const std::function<Enclosure(long)>& ratio_bound, long start,
                              const BigFloat& target_err, const std::function<Enclosure(long)>& majorant,
                              long max_terms) {
  if (target_err.sign() <= 0) throw std::invalid_argument("target error must be positive");
  std::unique_ptr<Enclosure> sum;
  BigFloat one(kR, 1);
  for (long n = start; n < start + max_terms; ++n) {
    Enclosure t = term(n);
    sum = sum ? std::make_unique<Enclosure>(*sum + t) : std::make_unique<Enclosure>(t);
    BigFloat m = majorant ? majorant(n).mag() : t.mag();
    if (m.is_zero() && !majorant) continue;
    BigFloat q = ratio_bound(n).upper();
    if (q >= one) continue;
    BigFloat gap(kR);
    mpfr_ui_sub(gap.get(), 1, q.get(), MPFR_RNDD);
    BigFloat tail = r_div(r_mul(m, q.sign() > 0 ? q : BigFloat(kR)), gap);
    if (r_add(tail, sum->rad()) <= target_err) return sum->add_error(tail);
  }
  throw DomainError("series did not reach the target error within " + std::to_string(max_terms) + " terms");
}

}  // namespace ohic
