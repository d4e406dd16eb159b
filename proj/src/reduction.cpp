#include "latq/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace latq {

namespace {

constexpr double kTol = 1e-9;

void check_indices(int l, int k, int cols) {
    if (l < 0 || k <= l || k >= cols)
        throw UsageError("size_reduce: need 0 <= l < k < K, got l=" + std::to_string(l) +
                         ", k=" + std::to_string(k));
}

}  // namespace

void size_reduce(Matrix& g_red, Matrix& r, RingMatrix& t, int l, int k, RingId ring,
                 ReductionCounters* cnt) {
    check_indices(l, k, r.cols());
    const RingElem rq = quantize_exact(ring, r(l, k));
    if (rq.is_zero()) return;

    const Scalar rqs{to_scalar(rq).c1, to_scalar(rq).c2, to_scalar(rq).c3,
                     to_scalar(rq).c4, g_red.domain()};
    const int n = g_red.rows(), kk = t.rows();
    Scalar* gk = g_red.col(k);
    const Scalar* gl = g_red.col(l);
    for (int i = 0; i < n; ++i) gk[i] = gk[i] - gl[i] * rqs;
    for (int i = 0; i < kk; ++i) t(i, k) = t(i, k) - t(i, l) * rq;
    for (int i = 0; i <= l; ++i) r(i, k) = r(i, k) - r(i, l) * rqs;
    if (cnt) {
        ++cnt->size_reductions;
        cnt->ops.full += n + kk + (l + 1);
    }
}

void update_qr(Matrix& q, Matrix& r, int k, OpCount* cnt) {
    const int n = q.rows(), cols = q.cols();
    if (k < 1 || k >= cols) throw UsageError("update_qr: index out of range");
    const int m = k - 1;

    std::vector<Scalar> qt_m(q.col(m), q.col(m) + n);
    std::vector<Scalar> qt_k(q.col(k), q.col(k) + n);
    const Scalar r_old = r(m, k);

    double nq_m_old = 0.0, nq_k_old = 0.0;
    for (int i = 0; i < n; ++i) {
        nq_m_old += norm2(qt_m[i]);
        nq_k_old += norm2(qt_k[i]);
    }

    // q_{k-1} <- q_k + q_{k-1} r_{k-1,k}
    Scalar* qm = q.col(m);
    for (int i = 0; i < n; ++i) qm[i] = qt_k[i] + qt_m[i] * r_old;
    double nq_m_new = 0.0;
    for (int i = 0; i < n; ++i) nq_m_new += norm2(qm[i]);

    // r_{k-1,k} <- r*_{k-1,k} ||q~_{k-1}||^2 ||q_{k-1}||^-2
    const Scalar r_new = conj(r_old) * (nq_m_old / nq_m_new);
    r(m, k) = r_new;

    // q_k <- q~_{k-1} - q_{k-1} r_{k-1,k}
    Scalar* qk = q.col(k);
    for (int i = 0; i < n; ++i) qk[i] = qt_m[i] - qm[i] * r_new;

    const double scale = nq_k_old / nq_m_new;
    for (int l = k + 1; l < cols; ++l) {
        const Scalar rt_ml = r(m, l);
        const Scalar rt_kl = r(k, l);
        r(m, l) = r_new * rt_ml + rt_kl * scale;
        r(k, l) = rt_ml - r_old * rt_kl;
    }
    for (int l = 0; l < m; ++l) std::swap(r(l, m), r(l, k));

    if (cnt) {
        cnt->full += 2LL * n + 2LL * (cols - k - 1) + 1;
        cnt->scaled += 3LL * n + (cols - k - 1) + 1;
    }
}

ReductionResult lll(const Matrix& g, const ReductionConfig& cfg) {
    if (g.domain() != ambient(cfg.ring))
        throw UsageError("lll: matrix domain does not match ring " +
                         std::string(ring_name(cfg.ring)));
    if (!valid_delta(cfg.ring, cfg.delta))
        throw UsageError(cfg.ring == RingId::L
                             ? "lll: reduction over L requires delta = 1 (pseudo-QLLL)"
                             : "lll: delta outside (eps2, 1]");

    const int n = g.rows(), k_cols = g.cols();
    ReductionResult res{g, Matrix(1, 1, g.domain()), Matrix(1, 1, g.domain()),
                        RingMatrix(k_cols, k_cols, cfg.ring), {}, 0};

    GsoResult gso = gso_pivot(g, &res.counters.ops);
    res.Q = std::move(gso.Q);
    res.R = std::move(gso.R);

    // Initial T is the pivoting permutation; G_red = G * T gathers columns.
    res.T = RingMatrix(k_cols, k_cols, cfg.ring);
    res.G_red = Matrix(n, k_cols, g.domain());
    for (int j = 0; j < k_cols; ++j) {
        res.T(gso.perm[j], j) = RingElem::one(cfg.ring);
        for (int i = 0; i < n; ++i) res.G_red(i, j) = g(i, gso.perm[j]);
    }

    std::vector<double> nq(k_cols);
    for (int j = 0; j < k_cols; ++j) nq[j] = col_norm2(res.Q, j);
    res.counters.ops.scaled += static_cast<long long>(n) * k_cols;

    int k = 1;
    while (k < k_cols) {
        ++res.counters.iterations;
        size_reduce(res.G_red, res.R, res.T, k - 1, k, cfg.ring, &res.counters);

        const double rkk2 = norm2(res.R(k - 1, k));
        bool lovasz_ok = !(nq[k] < (cfg.delta - rkk2) * nq[k - 1]);
        if (cfg.ring == RingId::L && rkk2 >= 1.0 - kTol) {
            // Inoperative check over the non-Euclidean ring: log and skip.
            ++res.inoperative_events;
            lovasz_ok = true;
        }

        if (!lovasz_ok) {
            res.G_red.swap_cols(k - 1, k);
            res.T.swap_cols(k - 1, k);
            update_qr(res.Q, res.R, k, &res.counters.ops);
            nq[k - 1] = col_norm2(res.Q, k - 1);
            nq[k] = col_norm2(res.Q, k);
            res.counters.ops.scaled += 2LL * n;
            ++res.counters.swaps;
            k = std::max(1, k - 1);
        } else {
            for (int l = k - 2; l >= 0; --l)
                size_reduce(res.G_red, res.R, res.T, l, k, cfg.ring, &res.counters);
            ++k;
        }
    }
    return res;
}

ReductionResult pseudo_qlll(const Matrix& g) { return lll(g, {RingId::L, 1.0}); }

LllCheck is_lll_reduced(const Matrix& g_red, RingId ring, double delta) {
    const GsoResult gso = gso_unpivoted(g_red);
    const int k_cols = g_red.cols();

    for (int k = 1; k < k_cols; ++k)
        for (int l = 0; l < k; ++l) {
            const Scalar& rlk = gso.R(l, k);
            const RingElem q = quantize_exact(ring, rlk);
            if (q.is_zero()) continue;
            // Tolerant reading of Q_I{r} = 0: r may sit on a Voronoi facet.
            const Scalar resid = rlk - Scalar{to_scalar(q).c1, to_scalar(q).c2,
                                              to_scalar(q).c3, to_scalar(q).c4, rlk.dom};
            if (norm2(rlk) > norm2(resid) + kTol * (1.0 + norm2(rlk)))
                return {false, 1, l, k};
        }

    std::vector<double> nq(k_cols);
    for (int j = 0; j < k_cols; ++j) nq[j] = col_norm2(gso.Q, j);
    for (int k = 1; k < k_cols; ++k) {
        const double rkk2 = norm2(gso.R(k - 1, k));
        if (ring == RingId::L && rkk2 >= 1.0 - kTol) continue;  // inoperative position
        if (nq[k] < (delta - rkk2) * nq[k - 1] - kTol * nq[k - 1])
            return {false, 2, -1, k};
    }
    return {};
}

}  // namespace latq
