#pragma once

// Small deterministic generators for the property tests.

#include <cstdint>
#include <random>

#include "ohic/exactnum.hpp"

namespace ohic::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  BigInt big(int bits) {
    mpz_class v;
    for (int i = 0; i < bits; i += 32) {
      v <<= 32;
      v += static_cast<unsigned long>(rng_() & 0xffffffffu);
    }
    if (bits % 32) v >>= (32 - bits % 32);
    if (rng_() & 1) v = -v;
    return BigInt(std::move(v));
  }

  BigRational small_rat(long lim = 20) {
    return rat(range(-lim, lim), range(1, lim));
  }

  BigRational nonzero_rat(long lim = 20) {
    BigRational r;
    while (r.is_zero()) r = small_rat(lim);
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ohic::testing
