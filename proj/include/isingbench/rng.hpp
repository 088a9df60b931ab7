#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace isingbench {

// splitmix64 finalizer; used to derive independent seed streams from
// (master_seed, salt...) tuples so that stream r is reproducible without
// generating streams 0..r-1.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt));
}

template <typename... Salts>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, Salts... rest) {
  return derive_seed(derive_seed(seed, salt), rest...);
}

// Seedable 64-bit generator with fixed sampling algorithms layered on top of
// std::mt19937_64, so that identical seeds give identical draw sequences
// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), unbiased via rejection of the modulo tail.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // +1 or -1 with equal probability.
  double random_sign() { return uniform_below(2) == 0 ? -1.0 : 1.0; }

  // Standard normal via Box-Muller (cosine branch, two uniforms per draw).
  // The sampling method is fixed: serialized instances depend on it.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace isingbench
