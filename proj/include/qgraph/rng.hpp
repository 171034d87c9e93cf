#pragma once

#include <cstdint>
#include <random>

namespace qgraph {

/// splitmix64 mixing step; used to spread user seeds over the full state space.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a stream tag.
/// Every seeded stage of the pipeline gets its own stream so that stages
/// can run in any order (or in parallel) without changing results.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream + 0x51ab5e1dULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

}  // namespace qgraph
