#pragma once

#include <cmath>
#include <cstdint>

namespace compdiff {

// Counter-based random stream. Output i depends only on (key, i), so any
// number of streams can be derived from a master seed and consumed in any
// order (or in parallel) with identical results.
//
// The generator is the splitmix64 finalizer applied to key + n*GOLDEN.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  // Derive a child key from a parent seed and up to three stream indices.
  static std::uint64_t key(std::uint64_t seed, std::uint64_t a = 0,
                           std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t k = mix(seed ^ 0x9e3779b97f4a7c15ull);
    k = mix(k ^ mix(a + 0x9e3779b97f4a7c15ull));
    k = mix(k ^ mix(b + 0x7f4a7c159e3779b9ull));
    k = mix(k ^ mix(c + 0x6a09e667f3bcc909ull));
    return k;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (counter_++) * 0x9e3779b97f4a7c15ull;
    return mix(z);
  }

  // Uniform in (0,1): 53-bit mantissa, never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace compdiff
