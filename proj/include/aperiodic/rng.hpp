#pragma once

#include <cstdint>

namespace aperiodic {

/**
 * Counter-based random number generator (SplitMix64 mixing function).
 *
 * The state is a (key, counter) pair; output j of stream `key` is a fixed
 * function of (key, j), so runs are bit-reproducible and streams derived
 * from a master seed are independent for all practical purposes.  All
 * stochastic generators and Monte Carlo chains in this library draw from
 * this generator; std:: distributions are avoided because their output is
 * not specified bit-exactly by the standard.
 */
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased (rejection sampling).
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Derives an independent stream key from a master seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  z += 0xD1B54A32D192ED03ULL;
  z = (z ^ (z >> 29)) * 0xFF51AFD7ED558CCDULL;
  return z ^ (z >> 32);
}

}  // namespace aperiodic
