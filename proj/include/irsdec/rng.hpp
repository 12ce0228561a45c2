#pragma once

#include <cstdint>

namespace irsdec {

/// splitmix64 output mixer (Steele, Lea, Flood 2014). Bijective on 64-bit
/// words; used both for seed derivation and generator initialization.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Per-trial seed derivation: the trial_index-th element of the splitmix64
/// stream started at master_seed. Injective in trial_index for a fixed
/// master, so parallel trials never share a stream. The constants are fixed
/// and part of the reproducibility contract.
inline uint64_t derive_trial_seed(uint64_t master_seed, uint64_t trial_index) {
    uint64_t s = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** 1.0 (Blackman, Vigna 2018), seeded via splitmix64.
/// Bitwise-reproducible across platforms; all bounded draws below go through
/// rejection sampling on the raw 64-bit stream so no libc/stdlib
/// distribution code is involved.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, n) by masked rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = ~0ull >> __builtin_clzll(n - 1 | 1);
        uint64_t x;
        do {
            x = next() & mask;
        } while (x >= n);
        return x;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace irsdec
