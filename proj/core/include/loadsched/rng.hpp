#pragma once

#include <cstdint>
#include <random>

namespace loadsched {

// Deterministic random source shared by every stochastic component.
//
// Wraps std::mt19937_64 (a standardized engine whose output stream is
// bit-identical on every conforming platform) and derives bounded and
// floating draws itself: the std::uniform_*_distribution adaptors make no
// cross-implementation guarantee, so using them would break seed-for-seed
// reproducibility across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), unbiased via rejection. Requires n > 0.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    return lo +
           static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace loadsched
