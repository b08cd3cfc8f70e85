#pragma once

#include <cstdint>
#include <random>

namespace cascade {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for item `index` of a run. Depends only on (run_seed, index), so any
/// partition of the work across threads produces the same stream.
constexpr std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t index) noexcept {
    return mix64(mix64(run_seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng{mix64(seed)}; }

}  // namespace cascade
