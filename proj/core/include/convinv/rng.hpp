// Seedable, splittable random source. The engine is std::mt19937_64 (fully
// specified by the standard, so streams are reproducible across platforms);
// uniform doubles are mapped from raw bits rather than through
// implementation-defined distributions.

#ifndef CONVINV_RNG_HPP
#define CONVINV_RNG_HPP

#include <cstdint>
#include <random>

namespace convinv {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  bool next_bit() { return (engine_() >> 63) != 0; }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return uniform01() < p; }

  // Independent child stream; deterministic in (seed, salt).
  Rng split(std::uint64_t salt) const { return Rng(mix(seed_, salt)); }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace convinv

#endif
