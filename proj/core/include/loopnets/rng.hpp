#pragma once

#include <cstdint>
#include <random>

namespace loopnets {

using RngEngine = std::mt19937_64;

/// Splitmix64 finalizer; decorrelates seed/stream pairs.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632be59bd9b4e019ull));
}

inline RngEngine make_rng(std::uint64_t seed) { return RngEngine(mix_seed(seed)); }

}  // namespace loopnets
