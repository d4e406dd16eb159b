#pragma once

#include <cmath>
#include <cstdint>

namespace latq {

// Counter-based 64-bit stream (SplitMix64).  Cheap to split: every
// (seed, trial) pair gets an independent stream, so Monte Carlo results do
// not depend on execution order or parallelism.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
}

// Standard normal sampler, polar (Marsaglia) method.
struct GaussianSampler {
    SplitMix64 rng;
    bool cached = false;
    double cache = 0.0;

    explicit GaussianSampler(SplitMix64 r) : rng(r) {}

    double next() {
        if (cached) {
            cached = false;
            return cache;
        }
        while (true) {
            const double u = 2.0 * rng.uniform01() - 1.0;
            const double v = 2.0 * rng.uniform01() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                const double f = std::sqrt(-2.0 * std::log(s) / s);
                cache = v * f;
                cached = true;
                return u * f;
            }
        }
    }
};

}  // namespace latq
