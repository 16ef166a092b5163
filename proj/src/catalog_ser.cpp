#include <map>

#include "catalog_internal.hpp"

namespace ohic::detail {
namespace {

using TS = TruncatedSeries;

TS lin(const BigRational& c0, const BigRational& c1, long order) { return TS::poly({c0, c1}, order); }
TS one(long order) { return TS::constant(1, order); }
TS sq_root(const TS& f) { return pow_rat(f, rat(1, 2)); }
TS inv_sq_root(const TS& f) { return pow_rat(f, rat(-1, 2)); }

/// x^k * f / x^(k) bookkeeping: f computed at order + k, divided by x^k, cut to order.
TS divide_x(const TS& f, long k, long order) { return truncate(shift_down(f, k), order); }

TS direct(long order, const std::function<BigRational(long)>& gen) { return TS::generate(order, gen); }

BigRational cb(long n) { return BigRational(central_binomial(n)); }

SeriesCase boyadzhiev_plain(long N) {
  TS d = lin(1, -4, N);
  TS s = sq_root(d);
  TS half_one_plus_s = (one(N) + s) * BigRational(rat(1, 2));
  // 2/sqrt(1-4x) * ( ln((1+s)/2) - ln(sqrt(1-4x)) )
  TS rhs = inv_sq_root(d) * (log_unit(half_one_plus_s) - log_unit(d) * BigRational(rat(1, 2))) * BigRational(2);
  return {"", direct(N, [](long n) { return cb(n) * harmonic(n); }), rhs};
}

SeriesCase boyadzhiev_alternating(long N) {
  TS d = lin(1, 4, N);
  TS s = sq_root(d);
  TS half_one_plus_s = (one(N) + s) * BigRational(rat(1, 2));
  TS rhs = inv_sq_root(d) * (log_unit(d) * BigRational(rat(1, 2)) - log_unit(half_one_plus_s)) * BigRational(2);
  return {"", direct(N, [](long n) { return (n % 2 == 0 ? -1 : 1) * cb(n) * harmonic(n); }), rhs};
}

TS odd_harmonic_lhs(long N, int sign) {
  return direct(N, [sign](long n) { return (sign < 0 && n % 2 == 1 ? -1 : 1) * cb(n) * odd_harmonic(n); });
}

/// -ln(1 - 4 sign x) / (2 sqrt(1 - 4 sign x)) as a quotient.
TS central_odd_gf_quotient(long N, int sign) {
  TS d = lin(1, -4 * sign, N);
  return div(log_unit(d) * BigRational(rat(-1, 2)), sq_root(d));
}

std::vector<SeriesCase> central_odd(long N) {
  TS d = lin(1, -4, N);
  // -ln(sqrt(1-4x)) * (1-4x)^(-1/2)
  TS root_log = (log_unit(d) * BigRational(rat(-1, 2))) * inv_sq_root(d);
  TS lhs = odd_harmonic_lhs(N, 1);
  return {{"form=root_log", lhs, root_log}, {"form=quotient", lhs, central_odd_gf_quotient(N, 1)}};
}

TS central_even_rhs(long N) {
  TS d = lin(1, -4, N);
  TS s = sq_root(d);
  TS half_one_plus_s = (one(N) + s) * BigRational(rat(1, 2));
  return inv_sq_root(d) * (log_unit(half_one_plus_s) - log_unit(d));
}

SeriesCase central_even(long N) {
  return {"", direct(N, [](long n) { return cb(n) * harmonic(2 * n); }), central_even_rhs(N)};
}

SeriesCase odd_index_plain(long N) {
  TS rhs = central_even_rhs(N) + sqrt_weighted_integral(inv_sq_root(lin(1, -4, N)));
  return {"", direct(N, [](long n) { return cb(n) * harmonic(2 * n + 1); }), rhs};
}

SeriesCase odd_index_alternating(long N) {
  TS d = lin(1, 4, N);
  TS s = sq_root(d);
  TS half_one_plus_s = (one(N) + s) * BigRational(rat(1, 2));
  TS rhs = inv_sq_root(d) * (log_unit(half_one_plus_s) - log_unit(d)) + sqrt_weighted_integral(inv_sq_root(d));
  return {"", direct(N, [](long n) { return (n % 2 == 1 ? -1 : 1) * cb(n) * harmonic(2 * n + 1); }), rhs};
}

SeriesCase catalan_odd_index(long N) {
  long M = N + 1;
  const BigRational two(2);
  TS d = lin(1, -4, M);
  TS s = sq_root(d);
  auto plain = [&](const TS& f) { return LogSeries(two, f, TS(M)); };
  LogSeries ln2(two, TS(M), one(M));
  LogSeries ln_one_plus_s = LogSeries::log_of(two, (one(M) + s) * BigRational(rat(1, 2)));
  LogSeries ln_two_d = LogSeries::log_of(two, d);
  TS arcsin_term = shift_mul_x(sqrt_weighted_integral(inv_sq_root(d)) * BigRational(4), 1);
  LogSeries bracket = ln2 - (one(M) + s) * ln_one_plus_s + s * ln_two_d + plain(arcsin_term);
  if (!bracket.is_log_free()) throw SeriesError("ln 2 terms do not cancel");
  TS rhs = divide_x(bracket.rational_part() * BigRational(rat(1, 2)), 1, N);
  return {"", direct(N, [](long n) { return catalan(n) * harmonic(2 * n + 1); }), rhs};
}

TS catalan_odd_rhs(long N) {
  long M = N + 1;
  TS d = lin(1, -4, M);
  TS s = sq_root(d);
  TS ln_s = log_unit(d) * BigRational(rat(1, 2));
  return divide_x((one(M) - s + s * ln_s) * BigRational(rat(1, 2)), 1, N);
}

SeriesCase catalan_odd(long N) {
  return {"", direct(N, [](long n) { return catalan(n) * odd_harmonic(n); }), catalan_odd_rhs(N)};
}

/// sum binom(2n,n) O_n x^n / (n+m+1), multiplied through by x^(m+1).
TS shifted_denominator_rhs(long m, long N) {
  long M = N + m + 1;
  TS d = lin(1, -4, M);
  TS s = sq_root(d);
  TS ln_s = log_unit(d) * BigRational(rat(1, 2));
  TS acc = shift_mul_x(s * (ln_s - one(M)) * BigRational(rat(1, 2)), m);
  if (m == 0) acc += TS::constant(rat(1, 2), M);
  BigRational scale = BigRational(m) / BigRational(pow(BigInt(4), static_cast<unsigned long>(m)));
  for (long j = 0; j < m; ++j) {
    BigRational w(2 * j + 3);
    TS a_j = pow_rat(d, BigRational(j) + rat(3, 2)) * inverse(w) * (ln_s - TS::constant(BigRational(2 * j + 4) / w, M)) +
             TS::constant(BigRational(2 * j + 4) / (w * w), M);
    BigRational c = BigRational(binomial(m - 1, j)) * (j % 2 == 0 ? 1 : -1) * scale;
    acc += a_j * c;
  }
  return divide_x(acc, m + 1, N);
}

std::vector<SeriesCase> shifted_denominator(long N) {
  std::vector<SeriesCase> out;
  for (long m = 0; m <= 3; ++m) {
    out.push_back({"m=" + std::to_string(m),
                   direct(N, [m](long n) { return cb(n) * odd_harmonic(n) / BigRational(n + m + 1); }),
                   shifted_denominator_rhs(m, N)});
  }
  return out;
}

SeriesCase shifted_denominator_m1(long N) {
  long M = N + 2;
  TS d = lin(1, -4, M);
  TS s = sq_root(d);
  TS ln_s = log_unit(d) * BigRational(rat(1, 2));
  TS s3 = pow_rat(d, rat(3, 2));
  TS acc = shift_mul_x(s * (ln_s - one(M)) * BigRational(rat(1, 2)), 1) +
           s3 * (ln_s * BigRational(3) - TS::constant(4, M)) * BigRational(rat(1, 36)) + TS::constant(rat(1, 9), M);
  return {"", direct(N, [](long n) { return cb(n) * odd_harmonic(n) / BigRational(n + 2); }), divide_x(acc, 2, N)};
}

std::vector<SeriesCase> parity_parts(long N, bool odd) {
  TS plus = lin(1, 4, N);
  TS minus = lin(1, -4, N);
  TS a = sq_root(plus) * log_unit(minus);
  TS b = sq_root(minus) * log_unit(plus);
  TS num = odd ? a - b : a + b;
  TS rhs = div(num * BigRational(rat(-1, 4)), sq_root(TS::poly({1, 0, -16}, N)));
  auto [even_part, odd_part] = parity_split(central_odd_gf_quotient(N, 1));
  TS lhs = direct(N, [odd](long n) {
    return (n % 2 == 1) == odd ? cb(n) * odd_harmonic(n) : BigRational(0);
  });
  return {{"form=closed", lhs, rhs}, {"form=parity_split", lhs, odd ? odd_part : even_part}};
}

std::vector<SeriesCase> hyperharmonic(long N) {
  std::vector<SeriesCase> out;
  TS d = lin(1, -1, N);
  for (long p = 0; p <= 4; ++p) {
    TS inner = TS::constant(harmonic(p), N) - log_unit(d);
    for (long k = 1; k <= p; ++k) inner -= pow_rat(d, BigRational(k)) * inverse(BigRational(k));
    TS rhs = inner * pow_rat(d, BigRational(-(p + 1)));
    out.push_back({"p=" + std::to_string(p),
                   direct(N, [p](long n) { return BigRational(binomial(n + p, n)) * harmonic(n); }), rhs});
  }
  return out;
}

std::vector<SeriesCase> binomial_over_n(long N) {
  std::vector<SeriesCase> out;
  TS d = lin(1, -1, N);
  for (long p = 0; p <= 4; ++p) {
    TS rhs = TS::constant(-harmonic(p), N) - log_unit(d);
    for (long k = 1; k <= p; ++k) rhs += pow_rat(d, BigRational(-k)) * inverse(BigRational(k));
    out.push_back({"p=" + std::to_string(p), direct(N, [p](long n) {
                     return n == 0 ? BigRational(0) : BigRational(binomial(n + p, n)) / BigRational(n);
                   }),
                   rhs});
  }
  return out;
}

SeriesCase log_square(long N) {
  TS d = lin(1, -4, N);
  TS l = log_unit(d);
  TS rhs = -div(l * l, d);
  return {"", direct(N, [](long n) {
            return -BigRational(pow(BigInt(4), static_cast<unsigned long>(n))) * s_n(n);
          }),
          rhs};
}

std::vector<SeriesCase> dilogarithm(long N) {
  TS d = lin(1, -1, N);
  TS l = log_unit(d);
  TS li2 = derive_integrate(shift_down(-l, 1), Calculus::kIntegral);
  TS half_sq = l * l * BigRational(rat(1, 2));
  return {{"form=with_dilog", direct(N, [](long n) { return n == 0 ? BigRational(0) : harmonic(n) / BigRational(n); }),
           li2 + half_sq},
          {"form=shifted",
           direct(N, [](long n) { return n == 0 ? BigRational(0) : harmonic(n - 1) / BigRational(n); }), half_sq}};
}

using Builder = std::function<std::vector<SeriesCase>(long)>;

template <class F>
Builder single(F f) {
  return [f](long N) { return std::vector<SeriesCase>{f(N)}; };
}

struct SerDef {
  const char* id;
  const char* location;
  const char* params;
  Builder build;
};

const std::vector<SerDef>& defs() {
  static const std::vector<SerDef> d = {
      {"SER-01", "Sec. 1, Boyadzhiev generating function for binom(2n,n) H_n", "order=N",
       single(boyadzhiev_plain)},
      {"SER-02", "Sec. 1, Boyadzhiev generating function, alternating signs", "order=N",
       single(boyadzhiev_alternating)},
      {"SER-03", "Sec. 1, generating function for binom(2n,n) O_n; Sec. 2 re-proof", "order=N; form=root_log,quotient",
       central_odd},
      {"SER-04", "Sec. 2 theorem, alternating generating function for binom(2n,n) O_n", "order=N",
       single([](long N) { return SeriesCase{"", odd_harmonic_lhs(N, -1), central_odd_gf_quotient(N, -1)}; })},
      {"SER-05", "Sec. 5, generating function for binom(2n,n) H_2n", "order=N", single(central_even)},
      {"SER-06", "Sec. 5 theorem, binom(2n,n) H_{2n+1}", "order=N", single(odd_index_plain)},
      {"SER-07", "Sec. 5 theorem, (-1)^n binom(2n,n) H_{2n+1}", "order=N", single(odd_index_alternating)},
      {"SER-08", "Sec. 5 corollary, C_n H_{2n+1}", "order=N", single(catalan_odd_index)},
      {"SER-09", "Sec. 5, generating function for C_n O_n", "order=N", single(catalan_odd)},
      {"SER-10", "Sec. 5 theorem, binom(2n,n) O_n/(n+m+1)", "order=N; m=0..3", shifted_denominator},
      {"SER-11", "Sec. 5 corollary, binom(2n,n) O_n/(n+2)", "order=N", single(shifted_denominator_m1)},
      {"SER-12", "Sec. 5 theorem, even part binom(4n,2n) O_2n", "order=N; form=closed,parity_split",
       [](long N) { return parity_parts(N, false); }},
      {"SER-13", "Sec. 5 theorem, odd part binom(4n+2,2n+1) O_{2n+1}", "order=N; form=closed,parity_split",
       [](long N) { return parity_parts(N, true); }},
      {"SER-14", "Sec. 2, Boyadzhiev generating function for binom(n+p,n) H_n", "order=N; p=0..4", hyperharmonic},
      {"SER-15", "Sec. 2 proof, Boyadzhiev generating function for binom(n+p,n)/n", "order=N; p=0..4",
       binomial_over_n},
      {"SER-16", "Sec. 2, expansion of ln^2(1-4x)/(1-4x) through S_n", "order=N", single(log_square)},
      {"SER-17", "Sec. 2 proof, H_n/n generating function via the dilogarithm", "order=N; form=with_dilog,shifted",
       dilogarithm},
  };
  return d;
}

}  // namespace

std::vector<SeriesCase> build_series_cases(std::string_view id, long order) {
  for (const auto& d : defs()) {
    if (id == d.id) return d.build(order);
  }
  return {};
}

void add_series_entries(std::vector<Entry>& out) {
  for (const auto& d : defs()) {
    Builder build = d.build;
    out.push_back({{d.id, IdentityKind::kSer, d.location, d.params, ExpectedStatus::kPass},
                   [build](Recorder& rec) {
                     for (const auto& c : build(rec.ctx().order)) rec.series(c.params, c.lhs, c.rhs);
                   }});
  }
}

}  // namespace ohic::detail
