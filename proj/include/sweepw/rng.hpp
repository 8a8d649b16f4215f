#pragma once

#include <array>
#include <cstdint>

namespace sweepw {

// splitmix64 (Vigna). Used to expand seeds and derive per-scenario streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256** (Blackman & Vigna), seeded through splitmix64. Self-contained
// so sequences are identical on every platform and standard library.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) {
            word = sm.next();
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [1, bound], bound >= 1. Unbiased: the non-divisible
    // low tail of the 64-bit range is rejected.
    std::uint64_t uniform_1_to(std::uint64_t bound) {
        const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t r = next();
        while (r < reject_below) {
            r = next();
        }
        return 1 + r % bound;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_;
};

// Recorded in output metadata next to the seed.
inline const char* rng_algorithm_name() { return "xoshiro256**/splitmix64"; }

// Seed of the stream used for scenario number `scenario_index` of a run with
// the given master seed. Mixing the index here keeps every scenario
// reproducible no matter which subset of scenarios runs or in what order.
inline std::uint64_t scenario_stream_seed(std::uint64_t master_seed, std::uint64_t scenario_index) {
    SplitMix64 sm(master_seed ^ (0x9e3779b97f4a7c15ull * (scenario_index + 1)));
    return sm.next();
}

}  // namespace sweepw
