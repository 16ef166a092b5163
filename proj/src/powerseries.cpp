#include "ohic/powerseries.hpp"

#include <string>

namespace ohic {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
  if (f.order() != g.order()) {
    throw SeriesError(std::string(op) + ": order mismatch " + std::to_string(f.order()) + " vs " +
                      std::to_string(g.order()));
  }
}

void require_unit(const TruncatedSeries& f, const char* op) {
  if (f[0] != BigRational(1)) {
    throw SeriesError(std::string(op) + ": constant term must be 1, got " + f[0].to_string());
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(long order) {
  if (order < 0) throw SeriesError("negative series order");
  c_.resize(static_cast<std::size_t>(order + 1));
}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw SeriesError("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::poly(std::span<const BigRational> low, long order) {
  if (static_cast<long>(low.size()) > order + 1) {
    throw SeriesError("poly: " + std::to_string(low.size()) + " coefficients exceed order " +
                      std::to_string(order));
  }
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < low.size(); ++i) s.c_[i] = low[i];
  return s;
}

TruncatedSeries TruncatedSeries::poly(std::initializer_list<BigRational> low, long order) {
  return poly(std::span<const BigRational>(low.begin(), low.size()), order);
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, long order) { return poly({c}, order); }

TruncatedSeries TruncatedSeries::generate(long order, const std::function<BigRational(long)>& gen) {
  TruncatedSeries s(order);
  for (long n = 0; n <= order; ++n) s.c_[static_cast<std::size_t>(n)] = gen(n);
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o, "add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o, "sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "mul");
  const long n_max = f.order();
  std::vector<BigRational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    mpq_class acc;
    for (long k = 0; k <= n; ++k) {
      if (f[k].is_zero() || g[n - k].is_zero()) continue;
      acc += f[k].raw() * g[n - k].raw();
    }
    out[static_cast<std::size_t>(n)] = BigRational(std::move(acc));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "div");
  if (g[0].is_zero()) throw SeriesError("div: divisor has zero constant term");
  const long n_max = f.order();
  const BigRational inv0 = inverse(g[0]);
  std::vector<BigRational> h(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    mpq_class acc = f[n].raw();
    for (long k = 1; k <= n; ++k) {
      if (g[k].is_zero()) continue;
      acc -= g[k].raw() * h[static_cast<std::size_t>(n - k)].raw();
    }
    h[static_cast<std::size_t>(n)] = BigRational(std::move(acc)) * inv0;
  }
  return TruncatedSeries(std::move(h));
}

TruncatedSeries log_unit(const TruncatedSeries& f) {
  require_unit(f, "log_unit");
  const long n_max = f.order();
  std::vector<BigRational> l(static_cast<std::size_t>(n_max + 1));
  // n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}
  for (long n = 1; n <= n_max; ++n) {
    mpq_class acc = f[n].raw() * n;
    for (long k = 1; k < n; ++k) {
      if (f[n - k].is_zero()) continue;
      acc -= l[static_cast<std::size_t>(k)].raw() * f[n - k].raw() * k;
    }
    acc /= n;
    l[static_cast<std::size_t>(n)] = BigRational(std::move(acc));
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries pow_rat(const TruncatedSeries& f, const BigRational& e) {
  require_unit(f, "pow_rat");
  const long n_max = f.order();
  std::vector<BigRational> g(static_cast<std::size_t>(n_max + 1));
  g[0] = BigRational(1);
  // n g_n = sum_{k=1}^n (e k - (n - k)) f_k g_{n-k}
  for (long n = 1; n <= n_max; ++n) {
    mpq_class acc;
    for (long k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      mpq_class w = e.raw() * k - (n - k);
      acc += w * f[k].raw() * g[static_cast<std::size_t>(n - k)].raw();
    }
    acc /= n;
    g[static_cast<std::size_t>(n)] = BigRational(std::move(acc));
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries compose_scale(const TruncatedSeries& f, const BigRational& c) {
  BigRational p(1);
  std::vector<BigRational> coeffs(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : coeffs) {
    a *= p;
    p *= c;
  }
  return TruncatedSeries(std::move(coeffs));
}

std::pair<TruncatedSeries, TruncatedSeries> parity_split(const TruncatedSeries& f) {
  std::vector<BigRational> e(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigRational> o(e.size());
  for (std::size_t i = 1; i < e.size(); i += 2) std::swap(e[i], o[i]);
  return {TruncatedSeries(std::move(e)), TruncatedSeries(std::move(o))};
}

TruncatedSeries shift_mul_x(const TruncatedSeries& f, long k) {
  if (k < 0) return shift_down(f, -k);
  const long n_max = f.order();
  std::vector<BigRational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = k; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = f[n - k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_down(const TruncatedSeries& f, long k) {
  if (k < 0) return shift_mul_x(f, -k);
  const long n_max = f.order();
  for (long n = 0; n < k && n <= n_max; ++n) {
    if (!f[n].is_zero()) {
      throw SeriesError("shift_down by " + std::to_string(k) + ": coefficient of x^" + std::to_string(n) +
                        " is " + f[n].to_string());
    }
  }
  std::vector<BigRational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n + k <= n_max; ++n) out[static_cast<std::size_t>(n)] = f[n + k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  const long n_max = f.order();
  std::vector<BigRational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n < n_max; ++n) out[static_cast<std::size_t>(n)] = f[n + 1] * BigRational(n + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries integral(const TruncatedSeries& f) {
  const long n_max = f.order();
  std::vector<BigRational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = 1; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = f[n - 1] * rat(1, n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries derive_integrate(const TruncatedSeries& f, Calculus mode) {
  return mode == Calculus::kDerivative ? derivative(f) : integral(f);
}

TruncatedSeries sqrt_weighted_integral(const TruncatedSeries& f) {
  std::vector<BigRational> out(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= rat(1, 2 * static_cast<long>(n) + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries truncate(const TruncatedSeries& f, long order) {
  if (order > f.order()) throw SeriesError("truncate: target order exceeds series order");
  return TruncatedSeries(std::vector<BigRational>(f.coeffs().begin(), f.coeffs().begin() + order + 1));
}

std::optional<long> first_mismatch(const TruncatedSeries& f, const TruncatedSeries& g, std::optional<long> upto) {
  const long last = upto.value_or(std::min(f.order(), g.order()));
  if (last > f.order() || last > g.order()) throw SeriesError("first_mismatch: index beyond series order");
  for (long n = 0; n <= last; ++n) {
    if (f[n] != g[n]) return n;
  }
  return std::nullopt;
}

LogSeries::LogSeries(BigRational base, TruncatedSeries u, TruncatedSeries v)
    : base_(std::move(base)), u_(std::move(u)), v_(std::move(v)) {
  if (base_.sign() <= 0) throw SeriesError("LogSeries base must be positive");
  if (u_.order() != v_.order()) throw SeriesError("LogSeries parts must share an order");
}

LogSeries LogSeries::log_of(const BigRational& base, const TruncatedSeries& f) {
  return LogSeries(base, log_unit(f), TruncatedSeries::constant(1, f.order()));
}

namespace {
void require_same_base(const LogSeries& a, const LogSeries& b) {
  if (a.base() != b.base()) throw SeriesError("LogSeries bases differ");
}
}  // namespace

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
  require_same_base(a, b);
  return LogSeries(a.base_, a.u_ + b.u_, a.v_ + b.v_);
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) {
  require_same_base(a, b);
  return LogSeries(a.base_, a.u_ - b.u_, a.v_ - b.v_);
}

LogSeries operator*(const LogSeries& a, const TruncatedSeries& g) {
  return LogSeries(a.base_, mul(a.u_, g), mul(a.v_, g));
}

LogSeries operator*(const LogSeries& a, const BigRational& s) { return LogSeries(a.base_, a.u_ * s, a.v_ * s); }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  require_same_base(a, b);
  if (!a.is_log_free() && !b.is_log_free()) throw SeriesError("LogSeries product would be quadratic in the log symbol");
  if (a.is_log_free()) return b * a.u_;
  return a * b.u_;
}

LogSeries taylor_shift_log(const BigRational& a0, long order) {
  if (a0.sign() <= 0) throw SeriesError("taylor_shift_log: a0 must be positive, got " + a0.to_string());
  // ln(a0 + t) = ln a0 + ln(1 + t/a0);  1/(a0 + t) = (1/a0) / (1 + t/a0)
  const TruncatedSeries unit = TruncatedSeries::poly({1, inverse(a0)}, order);
  const TruncatedSeries recip = div(TruncatedSeries::constant(inverse(a0), order), unit);
  return LogSeries::log_of(a0, unit) * recip;
}

TruncatedSeries taylor_shift_rational_sq(const BigRational& a0, const BigRational& x, long order) {
  const BigRational c0 = x * x + a0 * a0;
  if (c0.is_zero()) throw SeriesError("taylor_shift_rational_sq: x^2 + a0^2 vanishes");
  const TruncatedSeries quad = TruncatedSeries::poly({c0, BigRational(2) * a0, 1}, order);
  return div(TruncatedSeries::constant(1, order), quad);
}

}  // namespace ohic
