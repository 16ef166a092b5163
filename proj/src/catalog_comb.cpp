#include "catalog_internal.hpp"

namespace ohic::detail {
namespace {

using Q = BigRational;

Q cb(long n) { return Q(central_binomial(n)); }
Q bin(long n, long k) { return Q(binomial(n, k)); }
Q p4(long k) { return Q(pow(BigInt(4), static_cast<unsigned long>(k))); }
Q p2(long k) { return Q(pow(BigInt(2), static_cast<unsigned long>(k))); }
const Q& H(long n) { return harmonic(n); }
const Q& O(long n) { return odd_harmonic(n); }
Q C(long n) { return catalan(n); }
Q F(long j) { return Q(fibonacci(j)); }
Q L(long j) { return Q(lucas(j)); }
Q fact(long n) { return Q(factorial(n)); }

template <class Fn>
Q sum(long lo, long hi, Fn f) {
  Q s(0);
  for (long j = lo; j <= hi; ++j) s += f(j);
  return s;
}

using Pair = std::pair<Q, Q>;

/// Checks f(n) for n = lo..N under the given case label.
template <class Fn>
void range(Recorder& rec, const std::string& params, long lo, Fn f) {
  for (long n = lo; n <= rec.ctx().max_n; ++n) {
    auto [lhs, rhs] = f(n);
    rec.exact(params, n, lhs, rhs);
  }
}

void catalan_harmonic(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return p4(n - j) * C(j) * H(n - j); }),
                p2(2 * n + 1) * H(n + 1) - cb(n + 1) * O(n + 1));
  });
}

void catalan_harmonic_reversed(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return p4(j) * C(n - j) * H(j); }),
                p2(2 * n + 1) * H(n + 1) - Q(n + 2) * C(n + 1) * O(n + 1));
  });
}

void catalan_harmonic_shifted(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return p4(j) * C(n - j - 1) * H(j + 1); }),
                -Q(n + 2) / Q(4) * C(n + 1) * O(n + 1));
  });
}

void catalan_odd(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return cb(n - j) * C(j) * O(n - j); }),
                rat(1, 2) * cb(n + 1) * O(n + 1) - p4(n) / Q(n + 1));
  });
}

void odd_square_convolution(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return cb(j) * cb(n - j) * O(j) * O(n - j); }), p4(n) / Q(4) * s_n(n));
  });
}

void odd_square_fibonacci(Recorder& rec) {
  for (long r = 1; r <= 3; ++r) {
    range(rec, "r=" + std::to_string(r), 0, [r](long n) {
      return Pair(sum(0, n, [n, r](long j) { return cb(j) * cb(n - j) * O(j) * O(n - j) * F(r * j) * L(r * (n - j)); }),
                  p4(n) / Q(4) * F(r * n) * s_n(n));
    });
  }
}

void dilog_route(Recorder& rec) {
  auto term = [](long n, long j) { return cb(j) * (O(j) - H(n - j)) / (p4(j) * Q(n + 1 - j)); };
  range(rec, "form=full", 0, [&](long n) { return Pair(sum(0, n, [&](long j) { return term(n, j); }), Q(0)); });
  range(rec, "form=from_one", 0,
        [&](long n) { return Pair(sum(1, n, [&](long j) { return term(n, j); }), H(n) / Q(n + 1)); });
}

Q hyper_lhs(long n, long p) {
  return sum(0, n, [n, p](long j) { return bin(p + j, j) * cb(n - j) * p4(j) * O(n - j); });
}

void hyperharmonic_odd(Recorder& rec) {
  for (long p = 0; p <= 4; ++p) {
    range(rec, "p=" + std::to_string(p) + ",form=main", 0, [p](long n) {
      Q rhs = p2(2 * n) / Q(2) * bin(n + p + 1, n) * (H(n + p + 1) - H(p + 1)) -
              sum(1, n, [n, p](long j) { return bin(p + j, j - 1) * p4(j - 1) * C(n - j) * (H(p + j) - H(p + 1)); });
      return Pair(hyper_lhs(n, p), rhs);
    });
    range(rec, "p=" + std::to_string(p) + ",form=catalan_shift", 0, [p](long n) {
      Q rhs = -sum(0, n, [n, p](long j) {
        return bin(p + j + 1, j) * p4(j) * C(n - j - 1) * (H(p + j + 1) - H(p + 1));
      });
      return Pair(hyper_lhs(n, p), rhs);
    });
  }
}

void hyperharmonic_particular(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    Q rhs = Q(n + 1) / Q(2) * (H(n + 1) - Q(1)) -
            sum(1, n, [n](long j) { return Q(j) * C(n - j) / p4(n + 1 - j) * (H(j) - Q(1)); });
    return Pair(sum(0, n, [](long j) { return cb(j) * O(j) / p4(j); }), rhs);
  });
}

void over_j(Recorder& rec) {
  for (long p = 0; p <= 4; ++p) {
    range(rec, "p=" + std::to_string(p), 1, [p](long n) {
      Q lhs = sum(1, n, [n, p](long j) { return bin(p + j, j) * cb(n - j) * p4(j) / Q(j) * O(n - j); });
      Q rhs = -cb(n) * H(p) * O(n) + p4(n) / Q(2) * s_n(n) -
              sum(0, n - 1, [n](long j) { return p4(n - j - 1) * C(j) * s_n(n - j - 1); });
      rhs += rat(1, 2) * sum(1, p, [n](long k) {
               Q inner = sum(1, n, [n, k](long j) {
                 return bin(j + k - 1, j - 1) * p4(j) * (H(k + j - 1) - H(k)) * C(n - j);
               });
               return (p4(n) * bin(n + k, n) * (H(n + k) - H(k)) - rat(1, 2) * inner) / Q(k);
             });
      return Pair(lhs, rhs);
    });
  }
}

void over_j_particular(Recorder& rec) {
  range(rec, "", 1, [](long n) {
    return Pair(sum(1, n, [n](long j) { return cb(n - j) * p4(j) / Q(j) * O(n - j); }),
                p4(n) / Q(2) * s_n(n) - sum(1, n, [n](long j) { return p4(j - 1) * C(n - j) * s_n(j - 1); }));
  });
}

void s_n_alternative(Recorder& rec) {
  range(rec, "", 1, [](long n) {
    return Pair(s_n(n), Q(2) * sum(1, n, [](long m) { return H(m - 1) / Q(m); }));
  });
}

void harmonic_weighted(Recorder& rec) {
  for (long p = 0; p <= 4; ++p) {
    range(rec, "p=" + std::to_string(p), 0, [p](long n) {
      auto base = [n](long j, long w) { return bin(j + w, j) * cb(n - j) * p4(j) * O(n - j); };
      Q lhs = sum(0, n, [&](long j) { return base(j, p) * H(j); });
      Q rhs = sum(0, n, [&](long j) { return base(j, p) * H(j + p); }) -
              sum(1, p, [&](long k) { return sum(0, n, [&](long j) { return base(j, p - k); }) / Q(k); });
      return Pair(lhs, rhs);
    });
  }
}

void harmonic_shift(Recorder& rec) {
  for (long p = 0; p <= 4; ++p) {
    range(rec, "p=" + std::to_string(p), 0, [p](long n) {
      return Pair(H(n + p), H(n) + sum(1, p, [n, p](long k) { return bin(n + p - k, n) / Q(k); }) / bin(n + p, n));
    });
  }
}

Q spiess(long m) {
  Q u = Q(1) - H(m);
  return u * u + Q(1) - harmonic2(m);
}

void second_order(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return cb(j) * p4(n - j) * O(j) * H(n - j); }),
                p2(2 * n) / Q(2) * Q(n + 1) * spiess(n + 1) -
                    sum(1, n, [n](long j) { return C(n - j) * p4(j - 1) * Q(j) * spiess(j); }));
  });
}

void spiess_convolution(Recorder& rec) {
  range(rec, "", 0, [](long n) {
    return Pair(sum(0, n, [n](long j) { return H(j) * H(n - j); }), Q(n + 1) * spiess(n + 1));
  });
}

template <class W>
Q pochhammer_sum(long n, W w) {
  return sum(0, (n + 1) / 2, [n, &w](long k) {
    Q t = cb(n - k) / bin(n, k) * pochhammer(Q(n + 1 - 2 * k), 2 * k) / (fact(k) * fact(k)) * w(n - k);
    return k % 2 == 0 ? t : -t;
  });
}

void pochhammer_power(Recorder& rec) {
  range(rec, "", 0, [](long n) { return Pair(pochhammer_sum(n, [](long) { return Q(1); }), p2(n)); });
}

void pochhammer_harmonic(Recorder& rec) {
  range(rec, "", 0, [](long n) { return Pair(pochhammer_sum(n, [](long m) { return O(m); }), p2(n) * H(n)); });
}

void log_quotient_derivatives(Recorder& rec) {
  for (long a0 = 1; a0 <= 3; ++a0) {
    LogSeries ts = taylor_shift_log(Q(a0), rec.ctx().max_n);
    std::string label = "a0=" + std::to_string(a0);
    for (long n = 0; n <= rec.ctx().max_n; ++n) {
      // n! [t^n] = (-1)^n n! (ln a0 - H_n) / a0^{n+1}, split into the ln a0 and rational parts.
      Q scale = (n % 2 == 0 ? 1 : -1) * fact(n) / pow(Q(a0), n + 1);
      rec.exact(label + ",part=log", n, fact(n) * ts.log_part()[n], scale);
      rec.exact(label + ",part=rational", n, fact(n) * ts.rational_part()[n], -scale * H(n));
    }
  }
}

void rational_square_derivatives(Recorder& rec) {
  const std::vector<std::pair<Q, Q>> samples = {{1, 1}, {2, 1}, {1, 2}, {3, rat(1, 2)}, {rat(3, 2), 2}};
  for (const auto& [a, x] : samples) {
    TruncatedSeries ts = taylor_shift_rational_sq(a, x, rec.ctx().max_n);
    Q base = x * x + a * a;
    std::string label = "a0=" + a.to_string() + ",x=" + x.to_string();
    for (long n = 0; n <= rec.ctx().max_n; ++n) {
      Q rhs = sum(0, (n + 1) / 2, [&](long k) {
        Q poch = pochhammer(Q(n + 1 - 2 * k), 2 * k);
        if (poch.is_zero()) return Q(0);
        Q t = pow(Q(2) * a, n - 2 * k) * fact(n - k) / fact(k) * poch / pow(base, n + 1 - k);
        return (n - k) % 2 == 0 ? t : -t;
      });
      rec.exact(label, n, fact(n) * ts[n], rhs);
    }
  }
}

struct CombDef {
  const char* id;
  const char* location;
  const char* params;
  CheckFn check;
};

}  // namespace

void add_comb_entries(std::vector<Entry>& out) {
  const std::vector<CombDef> defs = {
      {"COMB-01", "Sec. 2 corollary, 4^{n-j} C_j H_{n-j} convolution", "n=0..N", catalan_harmonic},
      {"COMB-02", "Sec. 2 remark, reversed convolution form", "n=0..N", catalan_harmonic_reversed},
      {"COMB-03", "Sec. 2 remark, form with C_{-1} = -1/2", "n=0..N", catalan_harmonic_shifted},
      {"COMB-04", "Sec. 2 corollary, binom(2(n-j),n-j) C_j O_{n-j}", "n=0..N", catalan_odd},
      {"COMB-05", "Sec. 2 corollary, squared odd harmonic convolution", "n=0..N", odd_square_convolution},
      {"COMB-06", "Sec. 2 remark after Carlitz, Fibonacci-Lucas weighted form", "n=0..N; r=1..3",
       odd_square_fibonacci},
      {"COMB-07", "Sec. 2 corollary, dilogarithm route", "n=0..N; form=full,from_one", dilog_route},
      {"COMB-08", "Sec. 2 theorem, binom(p+j,j) 4^j convolution and remark form", "n=0..N; p=0..4",
       hyperharmonic_odd},
      {"COMB-09", "Sec. 2 theorem, particular case p=0 divided by 4^n", "n=0..N", hyperharmonic_particular},
      {"COMB-10", "Sec. 2 theorem with S_n, factor 1/j", "n=1..N; p=0..4", over_j},
      {"COMB-11", "Sec. 2 theorem with S_n, particular case p=0", "n=1..N", over_j_particular},
      {"COMB-12", "Sec. 2 corollary, S_n = 2 sum H_{m-1}/m", "n=1..N", s_n_alternative},
      {"COMB-13", "Sec. 2 theorem, H_j weighted convolution", "n=0..N; p=0..4", harmonic_weighted},
      {"COMB-14", "Sec. 2 theorem, particular case for H_{n+p}", "n=0..N; p=0..4", harmonic_shift},
      {"COMB-15", "Sec. 2 corollary with second-order harmonic numbers", "n=0..N", second_order},
      {"COMB-16", "Sec. 2 proof, Spiess convolution vs direct double sum", "n=0..N", spiess_convolution},
      {"COMB-17", "Sec. 3 theorem, Pochhammer sum equal to 2^n", "n=0..N", pochhammer_power},
      {"COMB-18", "Sec. 3 theorem, Pochhammer sum with O_{n-k} equal to 2^n H_n", "n=0..N", pochhammer_harmonic},
      {"COMB-19", "Sec. 3 lemma, n-th derivative of ln(a)/a as a Taylor shift", "n=0..N; a0=1,2,3",
       log_quotient_derivatives},
      {"COMB-20", "Sec. 3 lemma, n-th derivative of 1/(x^2+a^2) as a Taylor shift",
       "n=0..N; (a0,x)=(1,1),(2,1),(1,2),(3,1/2),(3/2,2)", rational_square_derivatives},
  };
  for (const auto& d : defs) {
    out.push_back({{d.id, IdentityKind::kComb, d.location, d.params, ExpectedStatus::kPass}, d.check});
  }
}

}  // namespace ohic::detail
