#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "latq/errors.hpp"
#include "latq/rng.hpp"

namespace latq {

// Nearest-rank quantile: the ceil(q*n)-th smallest sample.
inline double quantile(std::vector<double> samples, double q) {
    if (samples.empty()) throw UsageError("quantile: empty sample set");
    if (!(q > 0.0 && q < 1.0)) throw UsageError("quantile: q must be in (0, 1)");
    const auto n = samples.size();
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    if (rank < 1) rank = 1;
    if (rank > n) rank = n;
    std::nth_element(samples.begin(), samples.begin() + (rank - 1), samples.end());
    return samples[rank - 1];
}

inline double mean(const std::vector<double>& v) {
    if (v.empty()) throw UsageError("mean: empty sample set");
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

// Standard error of the mean.
inline double mean_se(const std::vector<double>& v) {
    return stddev(v) / std::sqrt(static_cast<double>(v.size()));
}

// Bootstrap standard error of the nearest-rank quantile.
inline double bootstrap_quantile_se(const std::vector<double>& samples, double q,
                                    int replicates, std::uint64_t seed) {
    if (samples.empty()) throw UsageError("bootstrap_quantile_se: empty sample set");
    std::vector<double> est(replicates);
    std::vector<double> resample(samples.size());
    for (int b = 0; b < replicates; ++b) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(b));
        for (auto& x : resample) x = samples[rng.below(samples.size())];
        est[b] = quantile(resample, q);
    }
    return stddev(est);
}

}  // namespace latq
