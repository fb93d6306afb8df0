#pragma once

#include <cmath>
#include <cstdint>

namespace vsr {

// Deterministic splitmix64 generator. Standard-library distributions are
// implementation-defined, so all sampling goes through this to keep runs
// byte-reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // standard normal via Box-Muller (no cached spare so the stream is
  // position-independent)
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  uint64_t state_;
};

// Stable mix of a base seed with stream coordinates; used to derive
// independent per-(iteration, sample) streams whose draws do not depend on
// evaluation order.
inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0) {
  Rng r(seed ^ (a * 0xA24BAED4963EE407ull) ^ (b * 0x9FB21C651E98DF25ull));
  return r.next_u64();
}

}  // namespace vsr
