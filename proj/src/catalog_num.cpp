#include "catalog_internal.hpp"

namespace ohic::detail {
namespace {

using Q = BigRational;
using CF = ClosedForm;
using GP = GibonacciParams;

const CF kAl(Constant::kAlpha);
const CF kBe(Constant::kBeta);
const CF kS5(Constant::kSqrt5);
const CF kLnAl(Constant::kLnAlpha);
const CF kLn2(Constant::kLn2);
const CF kLn3(Constant::kLn3);
const CF kLn5(Constant::kLn5);

CF num(long p, long q = 1) { return CF(rat(p, q)); }
CF num(const Q& v) { return CF(v); }
CF G(const GP& g, long j) { return CF::gibonacci(g, j); }
CF Fc(long j) { return CF::fibonacci(j); }
CF Lc(long j) { return CF::lucas(j); }
CF pw(const CF& x, long k) { return pow_int(x, k); }
/// ln(sqrt5 / d)
CF ln_root5_over(long d) { return ln(kS5 / num(d)); }

const std::vector<GP>& samples() {
  static const std::vector<GP> s = {GP::fibonacci(), GP::lucas(), GP(1, 3), GP(-2, 5), GP(3, -1)};
  return s;
}

std::string seq_label(const GP& g) {
  if (g == GP::fibonacci()) return "F";
  if (g == GP::lucas()) return "L";
  return "G" + g.to_string();
}

class Env {
 public:
  explicit Env(const CheckContext& c)
      : prec(c.prec),
        target(reachable_target(c.tol, 16, c.prec)),
        alpha(constant(Constant::kAlpha, c.prec)),
        beta(constant(Constant::kBeta, c.prec)),
        sqrt5(constant(Constant::kSqrt5, c.prec)) {}

  Enclosure q(const Q& v) const { return Enclosure::exact(v, prec); }
  Enclosure eval(const CF& cf) const { return ohic::eval(cf, prec); }

  /// An upper bound for |G_j|: (|b - a beta| alpha^j + |a alpha - b| alpha^-j) / sqrt5.
  Enclosure gib_major(const GP& g, long j) const {
    Enclosure u = abs(q(g.b) - q(g.a) * beta);
    Enclosure v = abs(q(g.a) * alpha - q(g.b));
    return (u * pow_int(alpha, j) + v * pow_int(alpha, -j)) / sqrt5;
  }

  long prec;
  BigFloat target;
  Enclosure alpha;
  Enclosure beta;
  Enclosure sqrt5;
};

/// sum_{n >= start} binom(2n,n) (lambda - mu O_n) w^n G_{kn+t} / (n + den),
/// with the G factor and the denominator optional.
struct Central {
  Enclosure w;
  std::optional<Enclosure> lambda;
  Q mu = -1;
  std::optional<GP> g;
  long k = 1;
  long t = 0;
  long den = 0;
  long start = 0;
};

Enclosure sum_central(const Env& e, const Central& s) {
  Enclosure lam = s.lambda ? *s.lambda : e.q(0);
  Enclosure lam_abs = abs(lam);
  Q mu_abs = abs(s.mu);
  Enclosure w_abs = abs(s.w);
  auto den = [&](long n) { return s.den ? e.q(inverse(Q(n + s.den))) : e.q(1); };
  auto term = [&](long n) {
    Enclosure c = e.q(Q(central_binomial(n))) * (lam - e.q(s.mu * odd_harmonic(n))) * pow_int(s.w, n) * den(n);
    return s.g ? c * e.q(gibonacci(*s.g, s.k * n + s.t)) : c;
  };
  auto majorant = [&](long n) {
    Enclosure c = e.q(Q(central_binomial(n))) * (lam_abs + e.q(mu_abs * (odd_harmonic(n) + Q(1)))) *
                  pow_int(w_abs, n) * den(n);
    return s.g ? c * e.gib_major(*s.g, s.k * n + s.t) : c;
  };
  Enclosure growth = s.g ? pow_int(e.alpha, s.k) : e.q(1);
  auto ratio = [&](long n) { return e.q(Q(4) * (Q(1) + inverse(Q(2 * n + 1)))) * w_abs * growth; };
  return sum_with_tail_bound(term, ratio, s.start, e.target, majorant);
}

// ---------------------------------------------------------------- NUM-01..03

void lemma_two(Recorder& rec, bool alternating) {
  Env e(rec.ctx());
  const std::vector<std::pair<std::string, CF>> as = {
      {"3/2", num(3, 2)}, {"2", num(2)}, {"3", num(3)}, {"alpha", kAl}};
  for (const auto& [label, a] : as) {
    Enclosure av = e.eval(a);
    Central s{e.q(alternating ? -1 : 1) / pow_int(e.q(2) * av, 2), ln(av), Q(1)};
    Enclosure lhs = sum_central(e, s);
    CF a2 = a * a + num(alternating ? 1 : -1);
    CF rhs = a * ln(a2) / (num(2) * sqrt(a2));
    rec.numeric("a=" + label, lhs, e.eval(rhs));
  }
}

/// sum (-1)^n binom(2n,n) O_n / 4^n through the Euler transform at x = -1/4:
/// (1/(1-x)) sum_k d_k (x/(1-x))^k with d_k the k-th forward difference of
/// binom(2n,n) O_n. |d_k| <= 2k 3^(k-1).
Enclosure boundary_alternating(const Env& e) {
  std::vector<Q> a;
  auto d = [&](long k) {
    while (static_cast<long>(a.size()) <= k) {
      long n = static_cast<long>(a.size());
      a.push_back(Q(central_binomial(n)) * odd_harmonic(n));
    }
    Q s(0);
    for (long n = 0; n <= k; ++n) {
      Q t = Q(binomial(k, n)) * a[static_cast<std::size_t>(n)];
      s += (k - n) % 2 == 0 ? t : -t;
    }
    return s;
  };
  const Q x = rat(-1, 4);
  const Q y = x / (Q(1) - x);
  const Q outer = inverse(Q(1) - x);
  auto term = [&](long k) { return e.q(outer * d(k) * pow(y, k)); };
  auto majorant = [&](long k) { return e.q(outer * Q(2 * k) / Q(3) * pow(rat(3, 5), k)); };
  auto ratio = [&](long k) { return e.q(k == 0 ? Q(2) : Q(k + 1) / Q(k) * rat(3, 5)); };
  return sum_with_tail_bound(term, ratio, 0, e.target, majorant);
}

void lemma_two_special(Recorder& rec) {
  Env e(rec.ctx());
  rec.numeric("case=1", boundary_alternating(e), e.eval(-kLn2 / (num(2) * sqrt(num(2)))));
  Enclosure al = e.alpha;
  struct Case {
    Enclosure w;
    CF lambda;
    Q mu;
    CF rhs;
  };
  const std::vector<Case> cases = {
      {e.q(rat(-1, 16)), kLn2, 1, kLn5 / kS5},
      {-(e.q(1) / pow_int(e.q(2) * al, 2)), kLnAl, 1, kAl * ln(kS5 * kAl) / (num(2) * sqrt(num(2) + kAl))},
      {-(e.q(1) / (e.q(4) * al)), kLnAl, 2, num(2) * kLnAl / sqrt(kAl)},
      {e.q(1) / pow_int(e.q(2) * al, 2), kLnAl, 1, sqrt(kAl) / num(2) * kLnAl},
      {e.q(rat(1, 16)), kLn2, 1, kLn3 / sqrt(num(3))},
      {e.q(1) / (e.q(8) * al), ln(num(2) * kAl), 2, sqrt(num(2) * kAl) * kLn5 / (num(2) * sqrt(kS5))},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    Central s{c.w, e.eval(c.lambda), c.mu};
    rec.numeric("case=" + std::to_string(i + 2), sum_central(e, s), e.eval(c.rhs));
  }
}

// ---------------------------------------------------------------- NUM-04..10

/// alpha^j x(alpha) +- beta^j x(beta) for the Binet combinations below.
struct BinetForm {
  CF (*lucas)(long t);
  CF (*fib)(long t);
  CF (*gib)(const GP& g, long t);
};

/// Runs sum binom(2n,n) O_n w^n S_{kn+t} * sign over t in [lo, 3] for L, F and
/// the gibonacci samples.
void fibonacci_family(Recorder& rec, const Env& e, const Enclosure& w, long k, int sign, long lo,
                      const BinetForm& f, const std::string& prefix = "", const std::string& reading = "") {
  for (long t = lo; t <= 3; ++t) {
    std::vector<std::pair<GP, CF>> rows = {{GP::lucas(), f.lucas(t)}, {GP::fibonacci(), f.fib(t)}};
    for (const GP& g : samples()) rows.push_back({g, f.gib(g, t)});
    for (const auto& [g, rhs] : rows) {
      Central s{w};
      s.g = g;
      s.k = k;
      s.t = t;
      s.start = 1;
      Enclosure lhs = sum_central(e, s);
      if (sign < 0) lhs = -lhs;
      std::string label = prefix + "seq=" + seq_label(g) + ",t=" + std::to_string(t);
      if (reading.empty()) {
        rec.numeric(label, lhs, e.eval(rhs));
      } else {
        rec.reading(reading, label, lhs, e.eval(rhs));
      }
    }
  }
}

void general_s(Recorder& rec) {
  Env e(rec.ctx());
  const std::vector<Q> ss = {rat(1, 20), rat(1, 16), rat(1, 12), rat(1, 10), rat(1, 8)};
  for (const Q& s : ss) {
    std::string prefix = "s=" + s.to_string() + ",";
    CF sc = num(s);
    auto half = [sc](const CF& root, long t) {
      CF d = num(1) - num(4) * sc * root;
      return pw(root, t) * ln(d) / sqrt(d);
    };
    for (long t = -3; t <= 3; ++t) {
      std::vector<std::pair<GP, CF>> rows = {
          {GP::lucas(), num(rat(-1, 2)) * (half(kAl, t) + half(kBe, t))},
          {GP::fibonacci(), -(kS5 / num(10)) * (half(kAl, t) - half(kBe, t))}};
      for (const GP& g : samples()) {
        CF a = num(g.a), b = num(g.b);
        rows.push_back({g, -(kS5 / num(10)) * ((b - a * kBe) * half(kAl, t) - (b - a * kAl) * half(kBe, t))});
      }
      for (const auto& [g, rhs] : rows) {
        Central c{e.q(s)};
        c.g = g;
        c.t = t;
        c.start = 1;
        rec.numeric(prefix + "seq=" + seq_label(g) + ",t=" + std::to_string(t), sum_central(e, c), e.eval(rhs));
      }
    }
  }
}

CF ba(const GP& g) { return num(g.b) * kAl + num(g.a); }

void eighth(Recorder& rec) {
  Env e(rec.ctx());
  BinetForm f{
      [](long t) { return sqrt(num(2)) * Lc(t + 1) * kLnAl + sqrt(num(10)) * kLn2 / num(2) * Fc(t + 1); },
      [](long t) { return sqrt(num(2)) * Fc(t + 1) * kLnAl + kLn2 / sqrt(num(10)) * Lc(t + 1); },
      [](const GP& g, long t) {
        return sqrt(num(2)) * G(g, t + 1) * kLnAl + kLn2 / sqrt(num(10)) * (G(g, t + 2) + G(g, t));
      }};
  fibonacci_family(rec, e, e.q(rat(1, 8)), 1, 1, -3, f);
}

void eighth_alternating(Recorder& rec) {
  Env e(rec.ctx());
  BinetForm f{
      [](long t) {
        return sqrt(num(2)) / (num(2) * sqrt(kAl + num(2))) *
               ((pw(kAl, t + 1) - Lc(t - 1)) * ln_root5_over(2) + (pw(kAl, t - 2) + Lc(t - 1)) * kLnAl);
      },
      [](long t) {
        return sqrt(num(10)) / (num(10) * sqrt(kAl + num(2))) *
               ((pw(kAl, t - 2) + Lc(t - 1)) * ln_root5_over(2) + (pw(kAl, t + 1) - Lc(t - 1)) * kLnAl);
      },
      [](const GP& g, long t) {
        return sqrt(num(10)) / (num(10) * sqrt(kAl + num(2))) *
               ((pw(kAl, t - 3) * ba(g) + G(g, t) + G(g, t - 2)) * ln_root5_over(2) +
                (pw(kAl, t) * ba(g) - G(g, t) - G(g, t - 2)) * kLnAl);
      }};
  fibonacci_family(rec, e, e.q(rat(-1, 8)), 1, -1, -3, f);
}

const BinetForm& sixteenth_form() {
  static const BinetForm f{
      [](long t) {
        return num(1) / sqrt(kAl + num(2)) *
               ((pw(kAl, t + 2) - Lc(t)) * kLnAl - (pw(kAl, t - 1) + Lc(t)) * ln_root5_over(4));
      },
      [](long t) {
        return kS5 / (num(5) * sqrt(kAl + num(2))) *
               ((pw(kAl, t - 1) + Lc(t)) * kLnAl - (pw(kAl, t + 2) - Lc(t)) * ln_root5_over(4));
      },
      [](const GP& g, long t) {
        return kS5 / (num(5) * sqrt(kAl + num(2))) *
               ((pw(kAl, t - 2) * ba(g) + G(g, t + 1) + G(g, t - 1)) * kLnAl -
                (pw(kAl, t + 1) * ba(g) - G(g, t + 1) - G(g, t - 1)) * ln_root5_over(4));
      }};
  return f;
}

void sixteenth(Recorder& rec) {
  Env e(rec.ctx());
  rec.name_primary("index_2n+t");
  fibonacci_family(rec, e, e.q(rat(1, 16)), 2, 1, -3, sixteenth_form());
  fibonacci_family(rec, e, e.q(rat(1, 16)), 1, 1, -3, sixteenth_form(), "", "literal_index_n+t");
}

CF root_part(const CF& root, long t) {
  return pw(root, t) / sqrt(root + num(5)) * ln((root + num(5)) / num(4));
}

void sixteenth_alternating(Recorder& rec) {
  Env e(rec.ctx());
  BinetForm f{[](long t) { return root_part(kAl, t) + root_part(kBe, t); },
              [](long t) { return num(1) / kS5 * (root_part(kAl, t) - root_part(kBe, t)); },
              [](const GP& g, long t) {
                CF a = num(g.a), b = num(g.b);
                return num(1) / kS5 * ((b - a * kBe) * root_part(kAl, t) - (b - a * kAl) * root_part(kBe, t));
              }};
  fibonacci_family(rec, e, e.q(rat(-1, 16)), 2, -1, -3, f);
}

void twelfth(Recorder& rec) {
  Env e(rec.ctx());
  BinetForm f{
      [](long t) {
        return sqrt(num(15)) * sqrt(kAl + num(2)) / num(10) *
               ((pw(kAl, t) + pw(kBe, t + 1)) * kLnAl - (pw(kAl, t) - pw(kBe, t + 1)) * ln_root5_over(3));
      },
      [](long t) {
        return sqrt(num(3)) * sqrt(kAl + num(2)) / num(10) *
               ((pw(kAl, t) - pw(kBe, t + 1)) * kLnAl - (pw(kAl, t) + pw(kBe, t + 1)) * ln_root5_over(3));
      },
      [](const GP& g, long t) {
        CF a = num(g.a), b = num(g.b);
        return sqrt(num(3)) * sqrt(kAl + num(2)) / num(10) *
               ((a * (pw(kAl, t - 1) - pw(kBe, t)) + b * (pw(kAl, t) - pw(kBe, t + 1))) * kLnAl -
                (a * (pw(kAl, t - 1) + pw(kBe, t)) + b * (pw(kAl, t) + pw(kBe, t + 1))) * ln_root5_over(3));
      }};
  fibonacci_family(rec, e, e.q(rat(1, 12)), 1, 1, -3, f);
}

void twelfth_double(Recorder& rec) {
  Env e(rec.ctx());
  BinetForm f{
      [](long t) { return sqrt(num(3)) / num(2) * (num(2) * Lc(t + 1) * kLnAl + kS5 * Fc(t + 1) * kLn3); },
      [](long t) { return sqrt(num(15)) / num(10) * (num(2) * kS5 * Fc(t + 1) * kLnAl + Lc(t + 1) * kLn3); },
      [](const GP& g, long t) {
        return sqrt(num(15)) / num(10) * (num(2) * kS5 * G(g, t + 1) * kLnAl + (G(g, t + 2) + G(g, t)) * kLn3);
      }};
  fibonacci_family(rec, e, e.q(rat(1, 12)), 2, 1, -3, f);
}

// ---------------------------------------------------------------- NUM-11, NUM-12

void root_power(Recorder& rec) {
  Env e(rec.ctx());
  for (long r = 0; r <= 12; ++r) {
    for (int sign : {1, -1}) {
      rec.numeric("r=" + std::to_string(r) + ",sign=" + (sign > 0 ? "+" : "-"),
                  sqrt_power_identity_residual(r, sign, e.prec), e.q(0));
    }
  }
}

void lucas_power(Recorder& rec) {
  Env e(rec.ctx());
  rec.name_primary("derived_radicand");
  for (long r : {2L, 4L}) {
    Q lr(lucas(r));
    CF lrc = num(lr);
    Enclosure w = e.q(inverse(Q(4) * lr));
    for (long t = -r / 2; t <= 3; ++t) {
      CF sgn2 = num(t % 2 == 0 ? 2 : -2);
      CF l2t = Lc(r + 2 * t);
      CF rl = num(r);
      CF fixed = sqrt(lrc) / num(2) * (sqrt(l2t + sgn2) * ln(lrc) + rl * sqrt(l2t - sgn2) * kLnAl);
      CF literal = sqrt(lrc) / num(2) * (sqrt(lrc * l2t + sgn2) * ln(lrc) + rl * sqrt(l2t - sgn2) * kLnAl);
      CF fib = sqrt(num(5) * lrc) / num(10) * (sqrt(l2t - sgn2) * ln(lrc) + rl * sqrt(l2t + sgn2) * kLnAl);
      std::string label = "r=" + std::to_string(r) + ",t=" + std::to_string(t);
      Central c{w};
      c.k = r;
      c.t = t;
      c.g = GP::lucas();
      Enclosure lhs_l = sum_central(e, c);
      rec.numeric(label + ",seq=L", lhs_l, e.eval(fixed));
      rec.reading("literal_radicand", label + ",seq=L", lhs_l, e.eval(literal));
      c.g = GP::fibonacci();
      rec.numeric(label + ",seq=F", sum_central(e, c), e.eval(fib));
    }
  }
  Enclosure w = e.q(rat(1, 12));
  CF s3 = sqrt(num(3));
  CF l3 = kS5 * kLn3;
  struct P {
    GP g;
    long t;
    CF rhs;
  };
  const std::vector<P> ps = {{GP::lucas(), 0, s3 / num(2) * (l3 + num(2) * kLnAl)},
                             {GP::fibonacci(), 0, s3 / num(10) * (l3 + num(10) * kLnAl)},
                             {GP::lucas(), -2, s3 / num(2) * (l3 - num(2) * kLnAl)},
                             {GP::fibonacci(), -2, -(s3 / num(10)) * (l3 - num(10) * kLnAl)}};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Central c{w};
    c.k = 2;
    c.t = ps[i].t;
    c.g = ps[i].g;
    rec.numeric("particular=" + std::to_string(i + 1), sum_central(e, c), e.eval(ps[i].rhs));
  }
}

// ---------------------------------------------------------------- NUM-13

Enclosure hyper_sum(const Env& e, long p, const GP& g, long t, const Q& w) {
  Enclosure ga = pow_int(e.alpha, 1);
  auto term = [&](long n) {
    return e.q(Q(binomial(n + p, p)) * harmonic(n) * gibonacci(g, n + t) * pow(w, n));
  };
  auto majorant = [&](long n) {
    return e.q(Q(binomial(n + p, p)) * (harmonic(n) + Q(1)) * pow(abs(w), n)) * e.gib_major(g, n + t);
  };
  auto ratio = [&](long n) {
    return e.q((Q(1) + Q(p) / Q(n + 1)) * (Q(1) + inverse(Q(n + 1))) * abs(w)) * ga;
  };
  return sum_with_tail_bound(term, ratio, 0, e.target, majorant);
}

void hyper_fibonacci(Recorder& rec) {
  Env e(rec.ctx());
  for (long p = 0; p <= 3; ++p) {
    for (long t = -3; t <= 3; ++t) {
      for (const GP& g : samples()) {
        std::string label = "p=" + std::to_string(p) + ",t=" + std::to_string(t) + ",seq=" + seq_label(g);
        auto gq = [&](long j) { return gibonacci(g, j); };
        Q tail(0);
        for (long k = 1; k <= p; ++k) tail += gq(t + 2 * p - 2 * k + 2) / (pow(Q(2), k) * Q(k));
        CF two_p1 = num(pow(Q(2), p + 1));
        CF plain = (num(harmonic(p)) + kLn2) * two_p1 * G(g, t + 2 * p + 2) +
                   num(pow(Q(2), p + 2)) / kS5 * (G(g, t + 2 * p + 3) + G(g, t + 2 * p + 1)) * kLnAl -
                   two_p1 * num(tail);
        rec.numeric(label + ",sign=+", hyper_sum(e, p, g, t, rat(1, 2)), e.eval(plain));

        CF scale = pw(num(2) / kS5, p + 1);
        CF hp = num(harmonic(p)) - ln_root5_over(2);
        CF alt = num(0);
        if (p % 2 == 0) {
          Q corr(0);
          for (long k = 1; k <= p / 2; ++k) {
            corr += pow(rat(4, 5), p / 2 - k) / Q(5 * k) *
                    (gq(t + 2 * k - p) + Q(6 * k - 1) / Q(2 * k - 1) * gq(t + 2 * k - p - 2));
          }
          alt = scale * (hp / kS5 * (G(g, t - p) + G(g, t - p - 2)) - G(g, t - p - 1) * kLnAl) - num(corr);
        } else {
          Q corr(0);
          for (long k = 1; k <= (p - 1) / 2; ++k) {
            corr += pow(rat(4, 5), (p - 1) / 2 - k) / Q(2 * k - 1) *
                    (Q(14 * k - 5) / Q(4 * k) * gq(t + 2 * k - p - 1) + gq(t + 2 * k - p - 3));
          }
          corr = rat(8, 25) * corr + Q(2) * (gq(t) + gq(t - 2)) / Q(5 * p);
          alt = scale * (hp * G(g, t - p - 1) - kLnAl / kS5 * (G(g, t - p) + G(g, t - p - 2))) - num(corr);
        }
        rec.numeric(label + ",sign=-", hyper_sum(e, p, g, t, rat(-1, 2)), e.eval(alt));
      }
    }
  }
}

// ---------------------------------------------------------------- NUM-14, NUM-15

void shifted_particular(Recorder& rec) {
  Env e(rec.ctx());
  Central c{e.q(rat(1, 8))};
  c.den = 2;
  CF r2 = sqrt(num(2));
  rec.numeric("sign=+", sum_central(e, c), e.eval((num(64) - num(34) * r2 - num(15) * r2 * kLn2) / num(9)));
  c.w = e.q(rat(-1, 8));
  CF r6 = sqrt(num(6));
  rec.numeric("sign=-", sum_central(e, c), e.eval((num(64) - num(30) * r6 + num(9) * r6 * (kLn3 - kLn2)) / num(9)));
}

/// The m=1 generating function sum binom(2n,n) O_n x^n/(n+2) at x.
CF shifted_gf(const CF& x) {
  CF s = sqrt(num(1) - num(4) * x);
  CF ln_s = ln(s);
  return s / (num(2) * x) * (ln_s - num(1)) + pw(s, 3) / (num(36) * x * x) * (num(3) * ln_s - num(4)) +
         num(1) / (num(9) * x * x);
}

void shifted_gibonacci(Recorder& rec) {
  Env e(rec.ctx());
  rec.name_primary("literal");
  CF r2 = sqrt(num(2));
  CF r10 = sqrt(num(10));
  CF fa = shifted_gf(-kAl / num(8));
  CF fb = shifted_gf(-kBe / num(8));
  for (long t = -3; t <= 3; ++t) {
    Central c{e.q(rat(-1, 8))};
    c.den = 2;
    c.t = t;
    c.g = GP::lucas();
    Enclosure lhs_l = sum_central(e, c);
    c.g = GP::fibonacci();
    Enclosure lhs_f = sum_central(e, c);
    // Stray summation-index symbols read as t.
    CF lit_l = num(64, 9) * Lc(t - 2) - r10 * (Fc(t - 2) + num(2, 3) * Fc(t - 5)) * kLn2 -
               num(2) * r2 * (Lc(t - 2) + num(2, 3) * Lc(t - 5)) * kLnAl -
               num(2) * r10 * (Fc(t - 2) + num(8, 9) * Fc(t - 5));
    CF lit_f = num(64, 9) * Fc(t - 2) - r10 / num(5) * (Lc(t - 2) + num(2, 3) * Lc(t - 5)) * kLn2 -
               num(2) * r2 * (Fc(t - 2) + num(2, 3) * Fc(t - 5)) * kLnAl -
               num(2) * r10 / num(5) * (Lc(t - 2) + num(8, 9) * Lc(t - 5));
    CF gf_l = pw(kAl, t) * fa + pw(kBe, t) * fb;
    CF gf_f = (pw(kAl, t) * fa - pw(kBe, t) * fb) / kS5;
    std::string label = "t=" + std::to_string(t);
    rec.numeric(label + ",seq=L", lhs_l, e.eval(lit_l));
    rec.numeric(label + ",seq=F", lhs_f, e.eval(lit_f));
    rec.reading("t_substituted", label + ",seq=L", lhs_l, e.eval(gf_l));
    rec.reading("t_substituted", label + ",seq=F", lhs_f, e.eval(gf_f));
  }
}

// ---------------------------------------------------------------- NUM-16

Enclosure quarter_sum(const Env& e, const GP& g, long t) {
  Enclosure growth = pow_int(e.alpha, 2);
  auto term = [&](long n) {
    return e.q(Q(binomial(4 * n, 2 * n)) * odd_harmonic(2 * n) * gibonacci(g, 2 * n + t) /
               Q(pow(BigInt(64), static_cast<unsigned long>(n))));
  };
  auto majorant = [&](long n) {
    return e.q(Q(binomial(4 * n, 2 * n)) * (odd_harmonic(2 * n) + Q(1)) /
               Q(pow(BigInt(64), static_cast<unsigned long>(n)))) *
           e.gib_major(g, 2 * n + t);
  };
  auto ratio = [&](long n) { return e.q(rat(16, 64) * (Q(1) + Q(2) / Q(4 * n + 1))) * growth; };
  return sum_with_tail_bound(term, ratio, 1, e.target, majorant);
}

void sixty_fourth(Recorder& rec) {
  Env e(rec.ctx());
  rec.name_primary("t=1..3");
  CF q = sqrt(kS5);
  for (long t = 0; t <= 3; ++t) {
    CF plus = sqrt(kS5 * Fc(2 * t - 1) + num(2));
    CF minus = sqrt(kS5 * Fc(2 * t - 1) - num(2));
    CF x = t % 2 == 0 ? plus : minus;
    CF y = t % 2 == 0 ? minus : plus;
    CF rf = sqrt(num(2)) / num(20) *
            ((num(10) * Fc(t + 1) - q * x) * kLnAl + (kS5 * Lc(t + 1) + q * y) * kLn2 - q / num(2) * y * kLn5);
    CF rl = sqrt(num(2)) / num(4) *
            ((num(2) * Lc(t + 1) - y / q) * kLnAl + (kS5 * Fc(t + 1) + x / q) * kLn2 - x / (num(2) * q) * kLn5);
    std::string label = "t=" + std::to_string(t);
    Enclosure lf = quarter_sum(e, GP::fibonacci(), t);
    Enclosure ll = quarter_sum(e, GP::lucas(), t);
    if (t == 0) {
      rec.reading("t=0", label + ",seq=F", lf, e.eval(rf));
      rec.reading("t=0", label + ",seq=L", ll, e.eval(rl));
    } else {
      rec.numeric(label + ",seq=F", lf, e.eval(rf));
      rec.numeric(label + ",seq=L", ll, e.eval(rl));
    }
  }
  CF a = sqrt(num(5) + num(2) * kS5);
  CF b = sqrt(num(5) - num(2) * kS5);
  CF pf = sqrt(num(2)) / num(20) *
          ((num(10) - b) * kLnAl + (num(3) * kS5 + a) * kLn2 - a / num(2) * kLn5);
  CF pl = sqrt(num(10)) / num(20) * ((num(6) * kS5 - a) * kLnAl + (num(5) + b) * kLn2 - b / num(2) * kLn5);
  rec.numeric("particular=F", quarter_sum(e, GP::fibonacci(), 1), e.eval(pf));
  rec.numeric("particular=L", quarter_sum(e, GP::lucas(), 1), e.eval(pl));
}

// ---------------------------------------------------------------- NUM-17, NUM-18

void trigonometric(Recorder& rec) {
  Env e(rec.ctx());
  for (const Q& x : {rat(1, 2), rat(-1, 3), rat(9, 10)}) {
    Central c{e.q(x / Q(4))};
    CF d = num(1) - num(x);
    rec.numeric("form=rescaled,x=" + x.to_string(), sum_central(e, c), e.eval(-(ln(sqrt(d)) / sqrt(d))));
  }
  for (const Q& x : {rat(1, 2), rat(3, 4)}) {
    Central c{e.q((Q(1) - x * x) / Q(4))};
    rec.numeric("form=one_minus_square,x=" + x.to_string(), sum_central(e, c), e.eval(-(ln(num(x)) / num(x))));
  }
  const std::vector<std::pair<std::string, CF>> cs = {{"1/2", num(1, 2)},
                                                      {"sqrt2/2", sqrt(num(2)) / num(2)},
                                                      {"(sqrt5-1)/4", (kS5 - num(1)) / num(4)},
                                                      {"-1/3", num(-1, 3)}};
  for (const auto& [label, c] : cs) {
    Enclosure cv = e.eval(c);
    CF r2 = sqrt(num(2));
    CF sh = sqrt((num(1) - c) / num(2));
    CF ch = sqrt((num(1) + c) / num(2));
    CF sx = sqrt(num(1) - c * c);
    std::string lc = ",cos=" + label;

    Central t1{cv / e.q(4)};
    rec.numeric("form=cos" + lc, sum_central(e, t1), e.eval(-(ln(r2 * sh) / (r2 * sh))));
    Central t2{-cv / e.q(4)};
    rec.numeric("form=cos_alternating" + lc, -sum_central(e, t2), e.eval(ln(r2 * ch) / (r2 * ch)));
    Central t3{cv * cv / e.q(4)};
    rec.numeric("form=cos_squared" + lc, sum_central(e, t3), e.eval(-(ln(sx) / sx)));
    Central t4{(e.q(1) - cv * cv) / e.q(4)};
    rec.numeric("form=sin_squared" + lc, sum_central(e, t4), e.eval(-(ln(abs(c)) / abs(c))));
  }
}

void closing_examples(Recorder& rec) {
  Env e(rec.ctx());
  struct Ex {
    CF w;
    CF rhs;
  };
  const std::vector<Ex> ex = {
      {num(1, 8), sqrt(num(2)) / num(2) * kLn2},
      {num(3, 16), num(2) * kLn2},
      {kS5 / (num(16) * kAl), -(num(2) / kAl) * ln(kAl / num(2))},
      {kS5 * kAl / num(16), num(2) * kAl * ln(num(2) * kAl)},
  };
  for (std::size_t i = 0; i < ex.size(); ++i) {
    Central c{e.eval(ex[i].w)};
    c.start = 1;
    rec.numeric("example=" + std::to_string(i + 1), sum_central(e, c), e.eval(ex[i].rhs));
  }
}

struct NumDef {
  const char* id;
  const char* location;
  std::string params;
  ExpectedStatus expected;
  CheckFn check;
};

}  // namespace

void add_numeric_entries(std::vector<Entry>& out) {
  const std::string gib = "seq=L,F,G(0,1),G(2,1),G(1,3),G(-2,5),G(3,-1)";
  const std::vector<NumDef> defs = {
      {"NUM-01", "Sec. 2 lemma, alternating series in ln a - O_n", "a=3/2,2,3,alpha", ExpectedStatus::kPass,
       [](Recorder& r) { lemma_two(r, true); }},
      {"NUM-02", "Sec. 2 lemma, series in ln a - O_n", "a=3/2,2,3,alpha", ExpectedStatus::kPass,
       [](Recorder& r) { lemma_two(r, false); }},
      {"NUM-03", "Sec. 2, seven special cases after the lemma", "case=1..7", ExpectedStatus::kPass,
       lemma_two_special},
      {"NUM-04", "Sec. 4, generating function at x = s alpha, s beta",
       "s=1/20,1/16,1/12,1/10,1/8; t=-3..3; " + gib, ExpectedStatus::kPass, general_s},
      {"NUM-05", "Sec. 4 theorem, weights 1/8^n", "", ExpectedStatus::kPass, eighth},
      {"NUM-06", "Sec. 4 theorem, weights (-1)^(n-1)/8^n", "", ExpectedStatus::kPass, eighth_alternating},
      {"NUM-07", "Sec. 4 theorem, weights 1/16^n", "", ExpectedStatus::kPass, sixteenth},
      {"NUM-08", "Sec. 4 theorem, weights (-1)^(n-1)/16^n, index 2n+t", "", ExpectedStatus::kPass,
       sixteenth_alternating},
      {"NUM-09", "Sec. 4 theorem, weights 1/12^n, index n+t", "", ExpectedStatus::kPass, twelfth},
      {"NUM-10", "Sec. 4 theorem, weights 1/12^n, index 2n+t", "", ExpectedStatus::kPass, twelfth_double},
      {"NUM-11", "Sec. 4 lemma, square roots of alpha^r and beta^r", "r=0..12; sign=+,-", ExpectedStatus::kPass,
       root_power},
      {"NUM-12", "Sec. 4 theorem for even r with weights 1/(4 L_r)^n, and four particular series",
       "r=2,4; t=-r/2..3; seq=L,F; particular=1..4", ExpectedStatus::kPass, lucas_power},
      {"NUM-13", "Sec. 5 theorem, binom(n+p,p) H_n G_{n+t}/2^n, both signs", "p=0..3; t=-3..3; " + gib,
       ExpectedStatus::kPass, hyper_fibonacci},
      {"NUM-14", "Sec. 5, particular values of the m=1 corollary at x = 1/8, -1/8", "sign=+,-",
       ExpectedStatus::kPass, shifted_particular},
      {"NUM-15", "Sec. 5, gibonacci displays after the m=1 corollary", "t=-3..3; seq=L,F",
       ExpectedStatus::kSuspect, shifted_gibonacci},
      {"NUM-16", "Sec. 5 theorem with weights binom(4n,2n)/64^n, and two particular series",
       "t=1..3 (t=0 reported); seq=L,F; particular=F,L", ExpectedStatus::kPass, sixty_fourth},
      {"NUM-17", "Sec. 7, rescaled generating functions and four trigonometric versions",
       "x=1/2,-1/3,9/10; x=1/2,3/4; cos=1/2,sqrt2/2,(sqrt5-1)/4,-1/3", ExpectedStatus::kPass, trigonometric},
      {"NUM-18", "Sec. 7, four closing example series", "example=1..4", ExpectedStatus::kPass, closing_examples},
  };
  const std::string family = "t=-3..3; " + gib;
  for (const auto& d : defs) {
    std::string params = d.params.empty() ? family : d.params;
    if (std::string(d.id) == "NUM-07") params += "; index=2n+t (n+t reported)";
    out.push_back({{d.id, IdentityKind::kNum, d.location, params, d.expected}, d.check});
  }
}

}  // namespace ohic::detail
