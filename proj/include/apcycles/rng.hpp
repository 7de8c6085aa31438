#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace apc {

// SplitMix64; used for seed mixing and stream derivation.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256**: fast, high-quality generator for simulation streams.
struct Xoshiro256ss {
    std::array<std::uint64_t, 4> s{};

    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : s) word = sm.next();
        if ((s[0] | s[1] | s[2] | s[3]) == 0) s[0] = 1;  // all-zero state is invalid
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s[1] * 5ULL, 7) * 9ULL;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Inverse-CDF Exp(1) draw; finite because uniform01() < 1.
    double exponential1() { return -std::log1p(-uniform01()); }
};

// 64-bit stream id for one (master_seed, n, lambda_key, trial) combination.
// lambda_key is the fixed-point encoding round(lambda * 1e6), so the derived
// stream is identical across platforms regardless of how lambda was parsed.
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint32_t n,
                                       std::int64_t lambda_key, std::uint64_t trial_index) {
    SplitMix64 sm(master_seed);
    std::uint64_t h = sm.next();
    sm.state = h ^ (0x6A09E667F3BCC909ULL + n);
    h = sm.next();
    sm.state = h ^ static_cast<std::uint64_t>(lambda_key) * 0x9E3779B97F4A7C15ULL;
    h = sm.next();
    sm.state = h ^ trial_index;
    return sm.next();
}

inline std::int64_t lambda_seed_key(double lambda) {
    return static_cast<std::int64_t>(std::llround(lambda * 1e6));
}

}  // namespace apc
