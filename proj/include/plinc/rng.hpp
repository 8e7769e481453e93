#pragma once

#include <cstdint>
#include <vector>

namespace plinc {

/// Counter-based deterministic generator: the splitmix64 output function
/// applied to seed + (counter+1) * golden-gamma. Identical (seed, counter)
/// pairs produce identical outputs on every platform; reports echo the
/// algorithm id so runs can be reproduced elsewhere.
namespace rng {

inline constexpr const char* kAlgorithmId = "splitmix64-counter-v1";
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * kGamma);
}

/// Derives an independent stream (per trial, per phase).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream + kGamma));
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) via 128-bit multiply (deterministic).
inline std::uint64_t below(std::uint64_t seed, std::uint64_t counter, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(at(seed, counter)) * bound;
    return static_cast<std::uint64_t>(m >> 64);
}

/// Deterministic n-of-m sample (partial Fisher-Yates), returned sorted.
inline std::vector<int> sample_without_replacement(std::uint64_t seed, std::size_t n,
                                                   std::size_t m) {
    std::vector<int> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < n && i + 1 < m; ++i) {
        std::size_t j = i + static_cast<std::size_t>(below(seed, i, m - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace rng
} // namespace plinc
