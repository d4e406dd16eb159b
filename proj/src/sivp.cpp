#include "latq/sivp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latq/reduction.hpp"

namespace latq {

namespace {

constexpr double kBoundarySlack = 1e-9;

struct RealGso {
    Eigen::MatrixXd r;       // unit-diagonal upper triangular
    std::vector<double> nq;  // squared Gram-Schmidt norms
};

RealGso real_gso(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows()), k = static_cast<int>(a.cols());
    Eigen::MatrixXd q = a;
    RealGso out{Eigen::MatrixXd::Identity(k, k), std::vector<double>(k)};
    const double rank_tol = 1e-10 * std::sqrt(a.colwise().squaredNorm().maxCoeff());
    for (int s = 0; s < k; ++s) {
        out.nq[s] = q.col(s).squaredNorm();
        if (!(std::sqrt(out.nq[s]) > rank_tol))
            throw NumericError("rank_deficient at column " + std::to_string(s + 1));
        for (int l = s + 1; l < k; ++l) {
            const double rsl = q.col(s).dot(q.col(l)) / out.nq[s];
            out.r(s, l) = rsl;
            q.col(l) -= q.col(s) * rsl;
        }
        (void)n;
    }
    return out;
}

// Schnorr-Euchner zig-zag enumeration of all integer points with
// ||G c||^2 <= radius2(); emit() is called for every nonzero solution
// (both signs).  radius2 may shrink between emissions.
template <class Emit, class Radius>
void enumerate_ball(const RealGso& gso, Radius radius2, Emit emit) {
    const int m = static_cast<int>(gso.nq.size());
    std::vector<std::int64_t> c(m, 0), step(m, 0);
    std::vector<double> center(m, 0.0), pdist(m, 0.0);

    auto enter_level = [&](int l) {
        double ctr = 0.0;
        for (int j = l + 1; j < m; ++j) ctr -= gso.r(l, j) * static_cast<double>(c[j]);
        center[l] = ctr;
        c[l] = static_cast<std::int64_t>(std::llround(ctr));
        step[l] = (ctr - static_cast<double>(c[l])) >= 0.0 ? 1 : -1;
    };
    auto advance = [&](int l) {
        c[l] += step[l];
        step[l] = -step[l] - (step[l] > 0 ? 1 : -1);
    };

    int level = m - 1;
    pdist[m - 1] = 0.0;
    enter_level(level);
    while (true) {
        const double off = static_cast<double>(c[level]) - center[level];
        const double dist = pdist[level] + gso.nq[level] * off * off;
        if (dist <= radius2()) {
            if (level == 0) {
                bool nonzero = false;
                for (int j = 0; j < m; ++j)
                    if (c[j] != 0) { nonzero = true; break; }
                if (nonzero) emit(c, dist);
                advance(level);
            } else {
                pdist[level - 1] = dist;
                --level;
                enter_level(level);
            }
        } else {
            // Zig-zag offsets grow monotonically: this level is exhausted.
            ++level;
            if (level >= m) return;
            advance(level);
        }
    }
}

bool canonical_sign(const std::vector<std::int64_t>& c) {
    for (std::int64_t v : c) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;
}

}  // namespace

CandidateList list_sphere_decode(const Matrix& g_real, double radius2) {
    if (g_real.domain() != Domain::Real)
        throw UsageError("list_sphere_decode: generator matrix must be real");
    if (!(radius2 > 0.0)) throw UsageError("list_sphere_decode: radius2 must be positive");

    const Eigen::MatrixXd a = eig_real(g_real);
    const RealGso gso = real_gso(a);
    const double r2 = radius2 * (1.0 + kBoundarySlack);

    std::vector<std::vector<std::int64_t>> cols;
    enumerate_ball(gso, [&] { return r2; },
                   [&](const std::vector<std::int64_t>& c, double) {
                       if (canonical_sign(c)) cols.push_back(c);
                   });

    const int m = a.cols();
    CandidateList out;
    out.radius2 = radius2;
    out.n_c = static_cast<long long>(cols.size());
    out.C = IntMat(m, std::max<int>(1, static_cast<int>(cols.size())));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i < m; ++i) out.C(i, j) = cols[j][i];
    return out;
}

double shortest_vector_norm2(const Matrix& g_real) {
    const ReductionResult red = lll(g_real, {RingId::Z, 1.0});
    const Eigen::MatrixXd a = eig_real(red.G_red);
    const RealGso gso = real_gso(a);

    double best = a.colwise().squaredNorm().minCoeff();
    enumerate_ball(gso, [&] { return best; },
                   [&](const std::vector<std::int64_t>&, double dist) {
                       if (dist < best) best = dist;
                   });
    return best;
}

SmpResult smp(const Matrix& g, RingId ring) {
    if (g.domain() != ambient(ring))
        throw UsageError("smp: matrix domain does not match ring");
    const int k = g.cols();
    const int dr = props(ring).Dr;
    const int m = dr * k;

    // Equivalent representation over Z, reduced to shrink the search radius.
    const Matrix g_rz = ring_to_Z(g, ring);
    const ReductionResult red = lll(g_rz, {RingId::Z, 1.0});

    double psi2 = 0.0;
    for (int j = 0; j < m; ++j) psi2 = std::max(psi2, col_norm2(red.G_red, j));

    const CandidateList ct = list_sphere_decode(red.G_red, psi2);
    if (ct.n_c == 0) throw NumericError("smp: empty candidate list");

    // Convert to coefficients of the unreduced representation: C = T_LLL C_t.
    IntMat c(m, static_cast<int>(ct.n_c));
    for (int j = 0; j < ct.C.cols(); ++j)
        for (int i = 0; i < m; ++i) {
            std::int64_t acc = 0;
            for (int l = 0; l < m; ++l) {
                const std::int64_t t_il = red.T(i, l).d[0] / 2;  // ring Z entries
                acc += t_il * ct.C(l, j);
            }
            c(i, j) = acc;
        }

    const RingMatrix cu = z_to_ring_exact(c, ring);

    // Sort by the norm of the lattice vector G * c, ties lexicographically.
    const Matrix lattice_pts = g * cu;
    const int nc = cu.cols();
    std::vector<int> order(nc);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms(nc);
    for (int j = 0; j < nc; ++j) norms[j] = col_norm2(lattice_pts, j);
    auto lex_less = [&](int a1, int b1) {
        for (int i = 0; i < m; ++i) {
            if (c(i, a1) != c(i, b1)) return c(i, a1) < c(i, b1);
        }
        return false;
    };
    std::sort(order.begin(), order.end(), [&](int a1, int b1) {
        if (norms[a1] != norms[b1]) return norms[a1] < norms[b1];
        return lex_less(a1, b1);
    });

    Matrix sorted(k, nc, g.domain());
    for (int j = 0; j < nc; ++j)
        for (int i = 0; i < k; ++i) sorted(i, j) = to_scalar(cu(i, order[j]));

    const std::vector<int> idx = row_echelon(sorted);

    SmpResult out;
    out.T = RingMatrix(k, k, ring);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) out.T(i, j) = cu(i, order[idx[j]]);
    out.G_tra = g * out.T;
    out.minima.resize(k);
    for (int j = 0; j < k; ++j) out.minima[j] = std::sqrt(norms[order[idx[j]]]);
    out.n_c_canonical = ct.n_c;
    out.n_c = 2 * ct.n_c;
    out.radius2 = psi2;
    return out;
}

std::vector<int> row_echelon(const Matrix& cand) {
    const int k = cand.rows(), nc = cand.cols();
    Matrix c = cand;

    double scale = 0.0;
    for (int j = 0; j < nc; ++j)
        for (int i = 0; i < k; ++i) scale = std::max(scale, norm2(c(i, j)));
    const double tol2 = 1e-14 * std::max(scale, 1.0);

    std::vector<int> idx;
    int row = 0;
    for (int l = 0; l < nc && row < k; ++l) {
        int m = -1;
        for (int i = row; i < k; ++i)
            if (norm2(c(i, l)) > tol2) { m = i; break; }
        if (m < 0) continue;
        idx.push_back(l);
        if (m != row)
            for (int j = 0; j < nc; ++j) std::swap(c(row, j), c(m, j));
        // Normalize from the left, then eliminate successors with the left
        // coefficient (quaternion order).
        const Scalar pivot_inv = inv(c(row, l));
        for (int j = l; j < nc; ++j) c(row, j) = pivot_inv * c(row, j);
        for (int n = row + 1; n < k; ++n) {
            const Scalar f = c(n, l);
            if (is_zero(f)) continue;
            for (int j = l; j < nc; ++j) c(n, j) = c(n, j) - f * c(row, j);
        }
        ++row;
    }
    if (row < k) throw NumericError("insufficient rank in candidate list");
    return idx;
}

RepetitionReport verify_minima_repetition(const Matrix& g, RingId ring) {
    RepetitionReport rep;
    rep.ring_minima = smp(g, ring).minima;
    rep.real_minima = smp(ring_to_Z(g, ring), RingId::Z).minima;

    const int dr = props(ring).Dr;
    rep.ok = rep.real_minima.size() == rep.ring_minima.size() * dr;
    if (rep.ok)
        for (size_t i = 0; i < rep.ring_minima.size() && rep.ok; ++i)
            for (int r = 0; r < dr; ++r)
                if (std::abs(rep.real_minima[i * dr + r] - rep.ring_minima[i]) >
                    1e-7 * std::max(1.0, rep.ring_minima[i])) {
                    rep.ok = false;
                    break;
                }
    return rep;
}

}  // namespace latq
