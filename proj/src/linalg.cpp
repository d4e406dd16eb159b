#include "latq/linalg.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace latq {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kRankTolFactor = 1e-10;

GsoResult gso_impl(const Matrix& g, bool pivot, OpCount* cnt) {
    const int n = g.rows(), k = g.cols();
    if (n < k) throw UsageError("gso: more columns than rows");
    GsoResult res{g, Matrix::identity(k, g.domain()), {}};
    res.perm.resize(k);
    for (int j = 0; j < k; ++j) res.perm[j] = j;

    const double rank_tol = kRankTolFactor * max_col_norm(g);
    Matrix& q = res.Q;
    Matrix& r = res.R;

    std::vector<double> nq(k);
    for (int step = 0; step < k; ++step) {
        for (int l = step; l < k; ++l) nq[l] = col_norm2(q, l);
        if (cnt) cnt->scaled += static_cast<long long>(k - step) * n;

        if (pivot) {
            int km = step;
            for (int l = step + 1; l < k; ++l)
                if (nq[l] < nq[km]) km = l;
            if (km != step) {
                // Cyclic shift: the pivot column moves to the front of the
                // remaining block, order of the others is preserved.
                for (int l = km; l > step; --l) {
                    q.swap_cols(l, l - 1);
                    std::swap(res.perm[l], res.perm[l - 1]);
                    std::swap(nq[l], nq[l - 1]);
                    for (int i = 0; i < step; ++i) std::swap(r(i, l), r(i, l - 1));
                }
            }
        }

        if (!(std::sqrt(nq[step]) > rank_tol))
            throw NumericError("rank_deficient at column " + std::to_string(step + 1));

        const double inv_n2 = 1.0 / nq[step];
        for (int l = step + 1; l < k; ++l) {
            // r_{k,l} = q_k^H q_l * ||q_k||^-2, conjugated factor on the left.
            const Scalar rkl = dot_left(q.col(step), q.col(l), n) * inv_n2;
            r(step, l) = rkl;
            Scalar* ql = q.col(l);
            const Scalar* qk = q.col(step);
            for (int i = 0; i < n; ++i) ql[i] = ql[i] - qk[i] * rkl;
            if (cnt) {
                cnt->full += 2LL * n;
                cnt->scaled += 1;
            }
        }
    }
    return res;
}

Eigen::MatrixXcd quat_gram_complex(const Matrix& g) {
    const Eigen::MatrixXcd mc = eig_cx(to_complex(g));
    return mc.adjoint() * mc;
}

// Volume from the Cholesky factor of a PSD Gramian; the diagonal entries are
// the unsorted Gram-Schmidt norms, so the rank test mirrors the GSO one.
template <class Mat>
double volume_from_gram(const Mat& gram, double rank_tol, double diag_power) {
    Eigen::LLT<Mat> llt(gram);
    if (llt.info() != Eigen::Success)
        throw NumericError("rank_deficient Gramian");
    double log_vol = 0.0;
    const auto& l = llt.matrixLLT();
    for (int i = 0; i < gram.rows(); ++i) {
        const double di = std::real(l(i, i));
        if (!(di > rank_tol))
            throw NumericError("rank_deficient at column " + std::to_string(i + 1));
        log_vol += std::log(di);
    }
    return std::exp(diag_power * log_vol);
}

}  // namespace

Matrix GsoResult::permutation_matrix(Domain dom) const {
    const int k = static_cast<int>(perm.size());
    Matrix p(k, k, dom);
    for (int j = 0; j < k; ++j) p(perm[j], j) = Scalar::one(dom);
    return p;
}

GsoResult gso_pivot(const Matrix& g, OpCount* cnt) { return gso_impl(g, true, cnt); }

GsoResult gso_unpivoted(const Matrix& g, OpCount* cnt) { return gso_impl(g, false, cnt); }

Matrix to_real(const Matrix& m) {
    const int n = m.rows(), k = m.cols();
    if (m.domain() == Domain::Complex) {
        Matrix r(2 * n, 2 * k, Domain::Real);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) {
                const Scalar& s = m(i, j);
                r(i, j) = Scalar::real(s.c1);
                r(n + i, j) = Scalar::real(s.c2);
                r(i, k + j) = Scalar::real(-s.c2);
                r(n + i, k + j) = Scalar::real(s.c1);
            }
        return r;
    }
    if (m.domain() == Domain::Quat) {
        Matrix r(4 * n, 4 * k, Domain::Real);
        // Row-block b, column-block c signs/components per the stacked layout.
        static const int comp[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {
            {1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) {
                const Scalar& s = m(i, j);
                const double c[4] = {s.c1, s.c2, s.c3, s.c4};
                for (int rb = 0; rb < 4; ++rb)
                    for (int cb = 0; cb < 4; ++cb)
                        r(rb * n + i, cb * k + j) =
                            Scalar::real(sign[rb][cb] * c[comp[rb][cb]]);
            }
        return r;
    }
    throw UsageError("to_real: input is already real");
}

Matrix to_complex(const Matrix& m) {
    if (m.domain() != Domain::Quat)
        throw UsageError("to_complex: input must be quaternion-valued");
    const int n = m.rows(), k = m.cols();
    Matrix r(2 * n, 2 * k, Domain::Complex);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            const Scalar& s = m(i, j);
            r(i, j) = Scalar::complex(s.c1, s.c2);
            r(n + i, j) = Scalar::complex(s.c3, -s.c4);
            r(i, k + j) = Scalar::complex(-s.c3, -s.c4);
            r(n + i, k + j) = Scalar::complex(s.c1, -s.c2);
        }
    return r;
}

Matrix complex_rep_to_quat(const Matrix& mc) {
    if (mc.domain() != Domain::Complex || mc.rows() % 2 || mc.cols() % 2)
        throw UsageError("complex_rep_to_quat: need a 2N x 2K complex matrix");
    const int n = mc.rows() / 2, k = mc.cols() / 2;
    Matrix m(n, k, Domain::Quat);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            const Scalar& tl = mc(i, j);
            const Scalar& tr = mc(i, k + j);
            const Scalar& bl = mc(n + i, j);
            const Scalar& br = mc(n + i, k + j);
            const double a = 0.5 * (tl.c1 + br.c1);
            const double b = 0.5 * (tl.c2 - br.c2);
            const double c = 0.5 * (bl.c1 - tr.c1);
            const double d = 0.5 * (-bl.c2 - tr.c2);
            m(i, j) = Scalar::quat(a, b, c, d);
        }
    return m;
}

double volume(const Matrix& g) {
    const double rank_tol = kRankTolFactor * max_col_norm(g);
    switch (g.domain()) {
        case Domain::Real: {
            const Eigen::MatrixXd a = eig_real(g);
            return volume_from_gram<Eigen::MatrixXd>(a.transpose() * a, rank_tol, 1.0);
        }
        case Domain::Complex: {
            const Eigen::MatrixXcd a = eig_cx(g);
            return volume_from_gram<Eigen::MatrixXcd>(a.adjoint() * a, rank_tol, 1.0);
        }
        default:
            // det(M^H M) = sqrt(det(Mc^H Mc)); the volume is its square root.
            return volume_from_gram<Eigen::MatrixXcd>(quat_gram_complex(g), rank_tol, 0.5);
    }
}

double orth_defect(const Matrix& g) {
    double log_prod = 0.0;
    for (int j = 0; j < g.cols(); ++j) log_prod += 0.5 * std::log(col_norm2(g, j));
    return std::exp(log_prod) / volume(g);
}

Matrix ring_generator_factor(RingId ring, int k) {
    const int dr = props(ring).Dr;
    Matrix f = Matrix::identity(dr * k, Domain::Real);
    if (ring == RingId::E) {
        for (int j = 0; j < k; ++j) {
            f(j, k + j) = Scalar::real(-0.5);
            f(k + j, k + j) = Scalar::real(kSqrt3 / 2.0);
        }
    } else if (ring == RingId::H) {
        for (int j = 0; j < k; ++j) {
            for (int b = 0; b < 3; ++b) f(b * k + j, 3 * k + j) = Scalar::real(0.5);
            f(3 * k + j, 3 * k + j) = Scalar::real(0.5);
        }
    }
    return f;
}

double ring_factor_abs_det(RingId ring, int k) {
    switch (ring) {
        case RingId::E: return std::pow(kSqrt3 / 2.0, k);
        case RingId::H: return std::pow(0.5, k);
        default: return 1.0;
    }
}

Matrix ring_to_Z(const Matrix& g, RingId ring) {
    if (g.domain() != ambient(ring))
        throw UsageError("ring_to_Z: matrix domain does not match ring");
    if (ring == RingId::Z) return g;
    const Matrix gr = to_real(g);
    if (ring == RingId::G || ring == RingId::L) return gr;
    return gr * ring_generator_factor(ring, g.cols());
}

RingMatrix z_to_ring_exact(const IntMat& c, RingId ring) {
    const int dr = props(ring).Dr;
    if (c.rows() % dr != 0) throw UsageError("z_to_ring: row count not divisible by D_r");
    const int k = c.rows() / dr, nc = c.cols();
    RingMatrix u(k, nc, ring);
    for (int j = 0; j < nc; ++j)
        for (int i = 0; i < k; ++i) {
            switch (ring) {
                case RingId::Z:
                    u(i, j) = make_z(c(i, j));
                    break;
                case RingId::G:
                    u(i, j) = make_g(c(i, j), c(k + i, j));
                    break;
                case RingId::E:
                    u(i, j) = make_e(c(i, j), c(k + i, j));
                    break;
                case RingId::L:
                    u(i, j) = make_l(c(i, j), c(k + i, j), c(2 * k + i, j), c(3 * k + i, j));
                    break;
                case RingId::H: {
                    const std::int64_t c4 = c(3 * k + i, j);
                    u(i, j) = RingElem{{2 * c(i, j) + c4, 2 * c(k + i, j) + c4,
                                        2 * c(2 * k + i, j) + c4, c4},
                                       RingId::H};
                    break;
                }
            }
        }
    return u;
}

Matrix z_to_ring(const IntMat& c, RingId ring, int k, int n_c) {
    if (c.rows() != props(ring).Dr * k || c.cols() != n_c)
        throw UsageError("z_to_ring: shape does not match K and N_c");
    return z_to_ring_exact(c, ring).to_matrix();
}

std::array<std::int64_t, 4> elem_coords(const RingElem& e) {
    switch (e.ring) {
        case RingId::Z: return {e.d[0] / 2, 0, 0, 0};
        case RingId::G: return {e.d[0] / 2, e.d[1] / 2, 0, 0};
        case RingId::E: return {(e.d[0] + e.d[1]) / 2, e.d[1], 0, 0};
        case RingId::L: return {e.d[0] / 2, e.d[1] / 2, e.d[2] / 2, e.d[3] / 2};
        default:
            return {(e.d[0] - e.d[3]) / 2, (e.d[1] - e.d[3]) / 2, (e.d[2] - e.d[3]) / 2,
                    e.d[3]};
    }
}

Eigen::MatrixXd eig_real(const Matrix& m) {
    if (m.domain() != Domain::Real) throw UsageError("eig_real: matrix is not real");
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) a(i, j) = m(i, j).c1;
    return a;
}

Eigen::MatrixXcd eig_cx(const Matrix& m) {
    if (m.domain() != Domain::Complex) throw UsageError("eig_cx: matrix is not complex");
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            a(i, j) = std::complex<double>(m(i, j).c1, m(i, j).c2);
    return a;
}

Matrix from_eig(const Eigen::MatrixXd& m) {
    Matrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()), Domain::Real);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) r(i, j) = Scalar::real(m(i, j));
    return r;
}

Matrix from_eig(const Eigen::MatrixXcd& m) {
    Matrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()), Domain::Complex);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            r(i, j) = Scalar::complex(m(i, j).real(), m(i, j).imag());
    return r;
}

Matrix pinv(const Matrix& m) {
    switch (m.domain()) {
        case Domain::Real: {
            const Eigen::MatrixXd p =
                eig_real(m).completeOrthogonalDecomposition().pseudoInverse();
            return from_eig(p);
        }
        case Domain::Complex: {
            const Eigen::MatrixXcd p =
                eig_cx(m).completeOrthogonalDecomposition().pseudoInverse();
            return from_eig(p);
        }
        default: {
            const Matrix pc = pinv(to_complex(m));
            return complex_rep_to_quat(pc);
        }
    }
}

double unimodular_gram_det(const RingMatrix& t) {
    if (t.rows() != t.cols()) throw UsageError("unimodular_gram_det: matrix not square");
    Matrix tm = t.to_matrix();
    Eigen::MatrixXd tr =
        tm.domain() == Domain::Real ? eig_real(tm) : eig_real(to_real(tm));
    const double dr = static_cast<double>(props(t.ring()).Dr);
    const double det = tr.determinant();
    // det(T_r) = det(T^H T)^{D_r/2}; report det(T^H T).
    return std::pow(std::abs(det), 2.0 / dr);
}

}  // namespace latq
