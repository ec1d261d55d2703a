#pragma once

#include <cstdint>
#include <random>

namespace dynembed {

// splitmix64; platform-independent, unlike std::hash.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One run seed fans out to per-stage streams so that changing how one stage
// consumes randomness never shifts another stage's draws.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(base);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Stage tags used across the pipeline.
namespace stage {
inline constexpr std::uint64_t kInit = 0x01;
inline constexpr std::uint64_t kPartition = 0x02;
inline constexpr std::uint64_t kSelect = 0x03;
inline constexpr std::uint64_t kWalk = 0x04;
inline constexpr std::uint64_t kTrain = 0x05;
inline constexpr std::uint64_t kEval = 0x06;
}  // namespace stage

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// Uniform in [0, 1); uses the top 53 bits of the draw.
inline double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n); n must be > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

}  // namespace dynembed
