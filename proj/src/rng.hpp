#pragma once

#include <cstdint>
#include <string>

namespace hgm {

// Fixed, documented sample generator so alternate implementations can
// reproduce the sequence: splitmix64 over a 64-bit state.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }
};

// FNV-1a, used to derive independent streams from (seed, stream identity).
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline SplitMix64 seeded_stream(std::uint64_t seed, const std::string& identity) {
    return SplitMix64(seed ^ fnv1a64(identity));
}

} // namespace hgm
