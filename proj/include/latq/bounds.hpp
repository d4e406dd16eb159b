#pragma once

#include <optional>

#include "latq/ring.hpp"

namespace latq {

struct HermiteValue {
    double value = 1.0;
    bool exact = false;  // false: Blichfeldt upper bound used
};

// Exact Hermite constants for K in {1..8, 24}; the gamma-function upper
// bound everywhere else (flagged).
HermiteValue hermite_best(int k);

// (2/pi) * Gamma(2 + K/2)^{2/K}; dominates the exact constant.
double hermite_upper(int k);

// Minkowski bound on the squared first successive minimum over the ring.
double first_minimum_bound(RingId ring, int k, double vol);

// Squared-norm bound on the first vector of an LLL-reduced basis:
// (1/(delta - eps2))^{(K-1)/2} vol^{2/K}.
double lll_first_bound(RingId ring, double delta, int k, double vol);

// Bound on the product of the first L squared successive minima.
double minima_product_bound(RingId ring, int k, int l, double vol);

// Bound on the orthogonality defect of the shortest independent vectors.
double sivp_defect_bound(RingId ring, int k);

// Bound on the orthogonality defect of an LLL-reduced basis:
// (1/(delta - eps2))^{K(K-1)/4}.
double lll_defect_bound(RingId ring, double delta, int k);

// One LLL flavor in an asymptotic comparison; the two variants of a pairing
// must describe the same underlying problem (equal real rank K * D_r).
struct LllVariant {
    RingId ring;
    int k;

    int dr() const { return props(ring).Dr; }
    double eps2() const { return props(ring).eps2; }
};

enum class CompareVerdict { V1Smaller, V2Smaller, Equal };

struct CompareResult {
    CompareVerdict verdict;
    // Crossover delta* where the sign of the comparison flips, if one exists
    // inside the valid range.
    std::optional<double> threshold;
};

// Asymptotic comparison of the first-vector-norm bounds of two LLL variants
// at the given delta (Corollary on the first vector norm).
CompareResult compare_first_norm(const LllVariant& v1, const LllVariant& v2,
                                 double delta);

// Same for the orthogonality-defect bounds.
CompareResult compare_defect(const LllVariant& v1, const LllVariant& v2, double delta);

// Approximate list size of the successive-minima search:
// (pi psi^2)^{D_r K/2} / ((D_r K/2)! |det G_I| vol^{D_r}).
double expected_list_size(RingId ring, int k, double psi2, double vol);

// Asymptotic ratio of real multiplications of two LLL variants solving the
// same problem: (N_r1/N_r2) (K1^3 N1 / (K2^3 N2)) xi.
double lll_mult_ratio(const LllVariant& v1, const LllVariant& v2, long long n1,
                      long long n2, double delta, const MultCostModel& cost);

}  // namespace latq
