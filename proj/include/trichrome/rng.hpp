#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace trichrome {

// std::mt19937_64 output is pinned by the standard, but the std distributions
// are not; these draws are reproducible across compilers and platforms.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for instance i of a batch run from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i) {
  return splitmix64(master ^ splitmix64(i + 1));
}

// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rng_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * rng_unit(rng);
}

template <typename T>
void rng_shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace trichrome
