#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace specmatch::rng {

inline constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr uint64_t chain(uint64_t h, uint64_t v) { return mix64(h + kGamma + v); }

// Order-independent key for one matrix entry: each (seed, tag, i, j) gets its
// own 64-bit stream value, so edges can be sampled in any order.
inline constexpr uint64_t entry_key(uint64_t seed, uint64_t tag, uint64_t i, uint64_t j) {
    uint64_t h = mix64(seed + kGamma);
    h = chain(h, tag);
    h = chain(h, i);
    h = chain(h, j);
    return h;
}

// Maps to (0,1]: never returns 0 so log() is safe.
inline double uniform01(uint64_t key) {
    return static_cast<double>((key >> 11) + 1) * 0x1.0p-53;
}

inline std::pair<double, double> normal_pair(uint64_t key1, uint64_t key2) {
    const double u1 = uniform01(key1);
    const double u2 = uniform01(key2);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

// Sequential stream for shuffles and other inherently ordered draws.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += kGamma;
        return mix64(state);
    }

    // Bias is O(bound/2^64), irrelevant at these sizes.
    uint64_t next_bounded(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
    }
};

inline std::vector<int> fisher_yates(int n, SplitMix64& stream) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(stream.next_bounded(static_cast<uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace specmatch::rng
