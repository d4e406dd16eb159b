#pragma once

#include "latq/linalg.hpp"
#include "latq/matrix.hpp"

namespace latq {

struct ReductionConfig {
    RingId ring = RingId::Z;
    double delta = 1.0;  // quality parameter, (eps2, 1] (Lipschitz: exactly 1)
};

struct ReductionCounters {
    long long iterations = 0;
    long long swaps = 0;
    long long size_reductions = 0;  // quantizations that produced a nonzero r_q
    OpCount ops;
};

struct ReductionResult {
    Matrix G_red;
    Matrix Q;
    Matrix R;
    RingMatrix T;  // exact ring elements, G_red = G * T
    ReductionCounters counters;
    long long inoperative_events = 0;  // Lipschitz-only: |r_{k-1,k}| hit 1

    long long real_mults(const MultCostModel& model) const {
        return counters.ops.real_mults(model, G_red.domain());
    }
};

// One generalized size-reduction step: quantize r_{l,k} to the ring and, if
// nonzero, update column k of the basis, the transformation and R (rows
// 0..l), all with r_q multiplied from the right.  Indices are 0-based,
// 0 <= l < k < K.
void size_reduce(Matrix& g_red, Matrix& r, RingMatrix& t, int l, int k, RingId ring,
                 ReductionCounters* cnt = nullptr);

// GSO update after columns k-1 and k of the basis were swapped (0-based k,
// 1 <= k < K).  Equivalent to a full unpivoted re-orthogonalization of the
// swapped basis.
void update_qr(Matrix& q, Matrix& r, int k, OpCount* cnt = nullptr);

// Generalized LLL reduction over a Euclidean ring (or the pseudo-reduction
// over the Lipschitz integers with delta = 1: inoperative Lovasz checks are
// recorded and skipped).
ReductionResult lll(const Matrix& g, const ReductionConfig& cfg);

// LLL over the Lipschitz integers with delta = 1; valid almost surely for
// continuous input distributions.
ReductionResult pseudo_qlll(const Matrix& g);

struct LllCheck {
    bool reduced = true;
    // First violated condition: 0 = none, 1 = size reduction at (l, k),
    // 2 = Lovasz at k.  Indices 0-based.
    int condition = 0;
    int l = -1;
    int k = -1;
};

// Recomputes the unpivoted GSO of g_red and checks the two reduction
// conditions with a 1e-9 relative tolerance.
LllCheck is_lll_reduced(const Matrix& g_red, RingId ring, double delta);

}  // namespace latq
