#pragma once

#include <cstdint>
#include <random>

namespace imfid {

using Seed = std::uint64_t;
using Engine = std::mt19937_64;

// SplitMix64 finalizer; used to derive statistically independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sub-seed for stream `index` of a run seeded with `seed`. Streams are keyed
// by index only, so results do not depend on how work is split across threads.
constexpr Seed derive_seed(Seed seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

// Two-level derivation, e.g. (replicate, coordinate).
constexpr Seed derive_seed(Seed seed, std::uint64_t a, std::uint64_t b) noexcept {
  return derive_seed(derive_seed(seed, a), b);
}

inline Engine make_engine(Seed seed) { return Engine{mix64(seed)}; }

}  // namespace imfid
