#pragma once

#include <cstdint>
#include <random>

namespace dmc {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent sub-stream seeds from one
// user seed so that every stage of a trial gets its own generator.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1). Avoids std::generate_canonical, which may return
// 1.0 on some standard libraries.
inline double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace dmc
