#pragma once

// Counter-based random numbers: every variate is a pure function of
// (seed, stream, counter), so parallel trials are bit-reproducible no matter
// how work is scheduled across threads.

#include <cstdint>

namespace dilatelab {

// SplitMix64 finalizer; full-period bijective mixer on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

// Uniform double in [0, 1) from the top 53 bits of the mixed word.
inline double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t counter) {
    return static_cast<double>(counter_word(seed, stream, counter) >> 11) *
           0x1.0p-53;
}

}  // namespace dilatelab
