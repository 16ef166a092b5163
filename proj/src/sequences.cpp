#include "ohic/sequences.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ohic {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
}

// Fixed-capacity prefix table: values[n] for 0 <= n < capacity, built once.
class PrefixTable {
 public:
  using Step = std::function<BigRational(long n, const std::vector<BigRational>& prefix)>;

  PrefixTable(long capacity, Step step) : capacity_(capacity), step_(std::move(step)) {}

  const BigRational* find(long n) const {
    std::call_once(once_, [this] { build(); });
    return n < capacity_ ? &values_[static_cast<std::size_t>(n)] : nullptr;
  }

  long capacity() const { return capacity_; }

 private:
  void build() const {
    values_.reserve(static_cast<std::size_t>(capacity_));
    values_.emplace_back(0);
    for (long n = 1; n < capacity_; ++n) values_.push_back(step_(n, values_));
  }

  long capacity_;
  Step step_;
  mutable std::once_flag once_;
  mutable std::vector<BigRational> values_;
};

const PrefixTable& harmonic_table() {
  static const PrefixTable t(kHarmonicTableSize, [](long n, const std::vector<BigRational>& p) {
    return p.back() + rat(1, n);
  });
  return t;
}

const PrefixTable& odd_harmonic_table() {
  static const PrefixTable t(kHarmonicTableSize, [](long n, const std::vector<BigRational>& p) {
    return p.back() + rat(1, 2 * n - 1);
  });
  return t;
}

const PrefixTable& harmonic2_table() {
  static const PrefixTable t(kHarmonic2TableSize, [](long n, const std::vector<BigRational>& p) {
    return p.back() + rat(1, n * n);
  });
  return t;
}

BigRational direct_s_n(long n) {
  BigRational s;
  for (long m = 1; m <= n; ++m) s += harmonic(n - m) * rat(1, m);
  return s;
}

const PrefixTable& s_n_table() {
  static const PrefixTable t(kSnTableSize, [](long n, const std::vector<BigRational>&) {
    return direct_s_n(n);
  });
  return t;
}

// Values past a table's capacity. Rarely hit; serialized and cached.
const BigRational& overflow_value(const char* kind, long n, const std::function<BigRational()>& compute) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::unordered_map<long, BigRational>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[kind];
  auto it = slot.find(n);
  if (it == slot.end()) it = slot.emplace(n, compute()).first;
  return it->second;  // node-based map: references stay valid
}

const BigRational& lookup(const PrefixTable& table, const char* kind, long n,
                          const std::function<BigRational(long)>& fallback) {
  require_nonnegative(n, kind);
  if (const BigRational* v = table.find(n)) return *v;
  return overflow_value(kind, n, [&] { return fallback(n); });
}

BigInt fib_gmp(unsigned long j) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), j);
  return BigInt(std::move(f));
}

}  // namespace

const BigRational& harmonic(long n) {
  return lookup(harmonic_table(), "harmonic", n, [](long m) {
    BigRational s = harmonic(kHarmonicTableSize - 1);
    for (long j = kHarmonicTableSize; j <= m; ++j) s += rat(1, j);
    return s;
  });
}

const BigRational& odd_harmonic(long n) {
  return lookup(odd_harmonic_table(), "odd_harmonic", n, [](long m) {
    BigRational s = odd_harmonic(kHarmonicTableSize - 1);
    for (long j = kHarmonicTableSize; j <= m; ++j) s += rat(1, 2 * j - 1);
    return s;
  });
}

const BigRational& harmonic2(long n) {
  return lookup(harmonic2_table(), "harmonic2", n, [](long m) {
    BigRational s = harmonic2(kHarmonic2TableSize - 1);
    for (long j = kHarmonic2TableSize; j <= m; ++j) s += rat(1, 1) / BigRational(BigInt(j) * BigInt(j));
    return s;
  });
}

const BigRational& s_n(long n) { return lookup(s_n_table(), "s_n", n, direct_s_n); }

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigInt(std::move(r));
}

BigInt central_binomial(long n) {
  require_nonnegative(n, "central_binomial");
  return binomial(2 * n, n);
}

BigRational catalan(long n) {
  if (n < -1) throw std::invalid_argument("catalan: index below -1: " + std::to_string(n));
  if (n == -1) return rat(-1, 2);
  return rat(central_binomial(n), BigInt(n + 1));
}

BigRational pochhammer(const BigRational& lam, long n) {
  require_nonnegative(n, "pochhammer");
  BigRational r(1);
  for (long i = 0; i < n; ++i) {
    r *= lam + BigRational(i);
    if (r.is_zero()) break;
  }
  return r;
}

GibonacciParams::GibonacciParams(BigRational a0, BigRational b0) : a(std::move(a0)), b(std::move(b0)) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gibonacci seeds (0, 0)");
}

std::string GibonacciParams::to_string() const { return "(" + a.to_string() + "," + b.to_string() + ")"; }

BigRational gibonacci(const GibonacciParams& params, long j) {
  if (j > kGibonacciRecurrenceBound || j < -kGibonacciRecurrenceBound) {
    // G_j = a F_{j-1} + b F_j, with the Fibonacci pair from GMP's doubling
    // formulas; F_{-k} = (-1)^{k+1} F_k covers negative j.
    auto fib_signed = [](long i) {
      BigInt f = fib_gmp(static_cast<unsigned long>(i < 0 ? -i : i));
      return (i < 0 && (-i) % 2 == 0) ? -f : f;
    };
    return params.a * BigRational(fib_signed(j - 1)) + params.b * BigRational(fib_signed(j));
  }
  BigRational prev = params.a;  // G_0
  BigRational cur = params.b;   // G_1
  if (j == 0) return prev;
  if (j > 0) {
    for (long i = 1; i < j; ++i) {
      BigRational next = cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Walk down: G_{i-1} = G_{i+1} - G_i.
  BigRational hi = params.b;  // G_{i+1}
  BigRational lo = params.a;  // G_i
  for (long i = 0; i > j; --i) {
    BigRational below = hi - lo;
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

BigInt fibonacci(long j) { return gibonacci(GibonacciParams::fibonacci(), j).num(); }
BigInt lucas(long j) { return gibonacci(GibonacciParams::lucas(), j).num(); }

void warm_up_sequence_tables() {
  (void)harmonic(0);
  (void)odd_harmonic(0);
  (void)harmonic2(0);
  (void)s_n(0);
}

}  // namespace ohic
