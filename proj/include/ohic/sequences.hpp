#pragma once

// Exact generators for the integer and rational sequences used by the
// identity catalog: harmonic-type numbers, binomials, Catalan numbers,
// Pochhammer symbols and gibonacci (Fibonacci-recurrence) sequences.
//
// Harmonic-type tables are memoized up to a fixed capacity the first time
// they are touched (std::call_once), then never mutated; indices past the
// capacity are computed directly.

#include "ohic/exactnum.hpp"

namespace ohic {

inline constexpr long kHarmonicTableSize = 4096;
inline constexpr long kHarmonic2TableSize = 1024;
inline constexpr long kSnTableSize = 512;
/// Gibonacci values with |j| <= this bound are walked by the recurrence.
inline constexpr long kGibonacciRecurrenceBound = 512;

/// H_n = sum_{j<=n} 1/j, H_0 = 0.
const BigRational& harmonic(long n);
/// O_n = sum_{j<=n} 1/(2j-1), O_0 = 0.
const BigRational& odd_harmonic(long n);
/// H_n^(2) = sum_{j<=n} 1/j^2.
const BigRational& harmonic2(long n);
/// S_n = sum_{m=1..n} H_{n-m}/m, S_0 = 0.
const BigRational& s_n(long n);

/// n choose k for n >= 0; zero outside 0 <= k <= n. Throws for n < 0.
BigInt binomial(long n, long k);
BigInt central_binomial(long n);
/// C_n = binom(2n,n)/(n+1), with C_{-1} = -1/2.
BigRational catalan(long n);
/// Rising factorial lam (lam+1) ... (lam+n-1); (lam)_0 = 1.
BigRational pochhammer(const BigRational& lam, long n);

/// Seeds of a gibonacci sequence: G_0 = a, G_1 = b, (a, b) != (0, 0).
struct GibonacciParams {
  BigRational a;
  BigRational b;

  GibonacciParams(BigRational a0, BigRational b0);

  static GibonacciParams fibonacci() { return {0, 1}; }
  static GibonacciParams lucas() { return {2, 1}; }

  std::string to_string() const;
  friend bool operator==(const GibonacciParams&, const GibonacciParams&) = default;
};

/// G_j(a,b) for any integer j. Negative indices follow
/// G_{-j} = G_{-(j-2)} - G_{-(j-1)}.
BigRational gibonacci(const GibonacciParams& params, long j);
BigInt fibonacci(long j);
BigInt lucas(long j);

/// Forces construction of every memo table; call before fanning out work
/// across threads to keep first-touch latency off the workers.
void warm_up_sequence_tables();

}  // namespace ohic
