#pragma once

#include <cstdint>

#include "grovekit/common.hpp"

namespace grovekit {

// Deterministic 64-bit generator (splitmix64).  Chosen over std::mt19937
// because its output is fully specified here, independent of the standard
// library, so seeds reproduce bit-identical runs on every platform.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : state_(seed) {}

  // Seed for an independent replicate stream: hashes (master seed, index)
  // so parallel replicates never share state regardless of scheduling.
  static uint64_t derive(uint64_t master_seed, uint64_t index) {
    return mix(master_seed ^ mix(index + 0x9E3779B97F4A7C15ull));
  }

  static RandomSource child(uint64_t master_seed, uint64_t index) {
    return RandomSource(derive(master_seed, index));
  }

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform integer in [0, m) by threshold rejection (exact, no modulo bias).
  uint64_t below(uint64_t m) {
    GK_ARG_CHECK(m > 0, "below(0)");
    const uint64_t t = (0 - m) % m;  // 2^64 mod m; reject x < t
    for (;;) {
      uint64_t x = next();
      if (x >= t) return x % m;
    }
  }

  // Exact Bernoulli(p) for rational p in [0,1]: compares a lazily extended
  // binary expansion of a uniform real against p, so the outcome
  // distribution is exactly p (no 2^-64 quantization).
  bool bernoulli(Rat p) {
    static const BigInt kTwo64 = BigInt(1) << 64;
    for (;;) {
      if (p <= 0) return false;
      if (p >= 1) return true;
      const uint64_t u = next();
      // The uniform real lies in [u, u+1) / 2^64; decide if the interval
      // falls entirely on one side of p, otherwise zoom into the cell.
      const BigInt num = boost::multiprecision::numerator(p);
      const BigInt den = boost::multiprecision::denominator(p);
      const BigInt lhs_hi = (BigInt(u) + 1) * den;  // vs num * 2^64
      const BigInt rhs = num * kTwo64;
      if (lhs_hi <= rhs) return true;
      if (BigInt(u) * den >= rhs) return false;
      p = p * Rat(kTwo64) - u;  // rescale the straddled cell and repeat
    }
  }

  // Draws 0, 1 or 2 with exact probabilities (alpha, beta, gamma).
  int pick3(const Bias& b) {
    if (bernoulli(b.alpha)) return 0;
    const Rat rest = b.beta + b.gamma;
    if (rest == 0) return 1;  // unreachable for a valid bias; keep total
    if (bernoulli(b.beta / rest)) return 1;
    return 2;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace grovekit
