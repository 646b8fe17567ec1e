#pragma once

#include <cstdint>

namespace noisyxor {

// SplitMix64 with the published constants. All experiment randomness flows
// through this generator so that (seed, stream) fully determines every byte
// of output, independent of platform or worker count.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix(state);
    }

    // Uniform in [0, n). Rejection sampling keeps it exactly unbiased.
    uint64_t below(uint64_t n) {
        const uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do {
            r = next();
        } while (r >= lim);
        return r % n;
    }

    // 53-bit uniform threshold comparison; unbiased far below any tolerance
    // used by the experiments.
    bool bernoulli(double p) {
        const uint64_t r = next() >> 11;
        const auto threshold = static_cast<uint64_t>(p * 9007199254740992.0); // 2^53
        return r < threshold;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stream splitting: hash (seed, stream_id) into an independent SplitMix64
// state. Concurrent trials use disjoint stream ids and stay reproducible
// regardless of scheduling.
inline Rng stream_rng(uint64_t seed, uint64_t stream_id) {
    return Rng(Rng::mix(seed ^ Rng::mix(stream_id + 0x9E3779B97F4A7C15ull)));
}

} // namespace noisyxor
