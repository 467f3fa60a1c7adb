#pragma once

#include <cstdint>
#include <random>

namespace dsmn {

// All randomness in the project flows from explicit 64-bit seeds.
using Rng = std::mt19937_64;

// SplitMix64 step, used to derive independent child seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Child seed for stream `index` of a parent seed. Distinct indices give
// streams that are independent for every practical purpose.
std::uint64_t child_seed(std::uint64_t parent, std::uint64_t index);

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform integer on [lo, hi], both ends inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool bernoulli(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace dsmn
