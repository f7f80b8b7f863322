#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace axmul {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d9e849fa5a2cull;
  return z ^ (z >> 31);
}

// Independent stream seed for worker `stream` of a run keyed by `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform draw from [0, n) excluding `skip`; requires n >= 2.
inline int uniform_int_excluding(Rng& rng, int n, int skip) {
  if (n < 2) throw std::logic_error("uniform_int_excluding: empty support");
  int v = uniform_int(rng, 0, n - 2);
  return (v >= skip) ? v + 1 : v;
}

// Categorical draw proportional to non-negative weights; total must be > 0.
inline int sample_weighted(Rng& rng, std::span<const double> weights, double total) {
  double u = uniform_real(rng) * total;
  double acc = 0.0;
  int last = -1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = static_cast<int>(i);
    if (u < acc) return last;
  }
  return last;  // numerical tail
}

}  // namespace axmul
