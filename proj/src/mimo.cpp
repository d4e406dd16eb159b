#include "latq/mimo.hpp"

#include <algorithm>
#include <cmath>

#include "latq/linalg.hpp"
#include "latq/reduction.hpp"
#include "latq/sivp.hpp"
#include "latq/stats.hpp"

namespace latq {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

Matrix inverse_ambient(const Matrix& m) {
    if (m.rows() != m.cols()) throw UsageError("inverse: matrix not square");
    switch (m.domain()) {
        case Domain::Real:
            return from_eig(Eigen::MatrixXd(eig_real(m).inverse()));
        case Domain::Complex:
            return from_eig(Eigen::MatrixXcd(eig_cx(m).inverse()));
        default:
            return complex_rep_to_quat(
                from_eig(Eigen::MatrixXcd(eig_cx(to_complex(m)).inverse())));
    }
}

RingMatrix factor_transform(const Matrix& g_dual, RingId ring, FactorMethod method) {
    if (method == FactorMethod::SMP) return smp(g_dual, ring).T;
    return lll(g_dual, {ring, 1.0}).T;
}

Equalizer build_equalizer(const Matrix& h_aug, int n_rx, RingId ring,
                          FactorMethod method, EqCriterion criterion) {
    const Matrix g_dual = hermitian(pinv(h_aug));  // H^{+H}
    const RingMatrix t = factor_transform(g_dual, ring, method);

    Equalizer eq;
    eq.ring = ring;
    eq.method = method;
    eq.criterion = criterion;
    eq.Z = hermitian(t);
    eq.Zinv = inverse_ambient(eq.Z.to_matrix());

    const Matrix f_aug_h = g_dual * t;  // columns are the filter rows, conjugated
    const int k = t.cols();
    eq.row_norm2.resize(k);
    for (int j = 0; j < k; ++j) eq.row_norm2[j] = col_norm2(f_aug_h, j);

    const Matrix f_aug = hermitian(f_aug_h);
    Matrix f(k, n_rx, f_aug.domain());
    for (int j = 0; j < n_rx; ++j)
        for (int i = 0; i < k; ++i) f(i, j) = f_aug(i, j);
    eq.F = std::move(f);
    return eq;
}

double comp_std_channel(Domain d) {
    return d == Domain::Real ? 1.0 : std::sqrt(0.5);
}

// Representation of the channel matrix matching the processing ring.
Matrix processing_matrix(const Matrix& h, RingId ring) {
    const Domain want = ambient(ring);
    if (h.domain() == want) return h;
    if (want == Domain::Real) return to_real(h);
    if (h.domain() == Domain::Quat && want == Domain::Complex) return to_complex(h);
    throw UsageError("no equivalent representation of this channel over ring " +
                     std::string(ring_name(ring)));
}

}  // namespace

Constellation constellation_AG() {
    Constellation a;
    a.ring = RingId::G;
    a.name = "AG";
    for (int re : {-1, 1})
        for (int im : {-1, 1}) a.points.push_back(Scalar::complex(re, im));
    a.sigma2_x = 2.0;
    return a;
}

Constellation constellation_AE() {
    Constellation a;
    a.ring = RingId::E;
    a.name = "AE";
    a.points = {Scalar::complex(1, 0), Scalar::complex(-1, 0),
                Scalar::complex(0, kSqrt3), Scalar::complex(0, -kSqrt3)};
    a.sigma2_x = 2.0;
    return a;
}

Constellation constellation_AL() {
    Constellation a;
    a.ring = RingId::L;
    a.name = "AL";
    for (int c1 : {-1, 1})
        for (int c2 : {-1, 1})
            for (int c3 : {-1, 1})
                for (int c4 : {-1, 1}) a.points.push_back(Scalar::quat(c1, c2, c3, c4));
    a.sigma2_x = 4.0;
    return a;
}

Constellation constellation_by_name(const std::string& name) {
    if (name == "AG") return constellation_AG();
    if (name == "AE") return constellation_AE();
    if (name == "AL") return constellation_AL();
    throw UsageError("unknown constellation '" + name + "' (expected AG, AE or AL)");
}

Matrix sample_channel(const ChannelConfig& cfg, GaussianSampler& gauss) {
    Matrix h(cfg.n_rx, cfg.k_users, cfg.domain);
    const double s = comp_std_channel(cfg.domain);
    const int dr = components(cfg.domain);
    for (int j = 0; j < cfg.k_users; ++j)
        for (int i = 0; i < cfg.n_rx; ++i) {
            double c[4] = {0, 0, 0, 0};
            for (int m = 0; m < dr; ++m) c[m] = s * gauss.next();
            h(i, j) = Scalar(c[0], c[1], c[2], c[3], cfg.domain);
        }
    return h;
}

Matrix sample_channel(const ChannelConfig& cfg, std::uint64_t seed) {
    GaussianSampler gauss(SplitMix64{seed});
    return sample_channel(cfg, gauss);
}

const char* method_name(FactorMethod m) {
    switch (m) {
        case FactorMethod::LLL: return "lll";
        default: return "smp";
    }
}

Equalizer zf_factorize(const Matrix& h, RingId ring, FactorMethod method) {
    if (h.domain() != ambient(ring))
        throw UsageError("zf_factorize: channel domain does not match ring");
    return build_equalizer(h, h.rows(), ring, method, EqCriterion::ZF);
}

Equalizer mmse_factorize(const Matrix& h, RingId ring, FactorMethod method,
                         double sigma2_n, double sigma2_x) {
    if (h.domain() != ambient(ring))
        throw UsageError("mmse_factorize: channel domain does not match ring");
    const int n = h.rows(), k = h.cols();
    Matrix h_aug(n + k, k, h.domain());
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) h_aug(i, j) = h(i, j);
        h_aug(n + j, j) = Scalar::one(h.domain()) * std::sqrt(sigma2_n / sigma2_x);
    }
    Equalizer eq = build_equalizer(h_aug, n, ring, method, EqCriterion::MMSE);
    return eq;
}

Matrix stack_vec(const Matrix& x, Domain rep) {
    if (x.cols() != 1) throw UsageError("stack_vec: expected a column vector");
    const int n = x.rows();
    if (x.domain() == Domain::Complex && rep == Domain::Real) {
        Matrix s(2 * n, 1, Domain::Real);
        for (int i = 0; i < n; ++i) {
            s(i, 0) = Scalar::real(x(i, 0).c1);
            s(n + i, 0) = Scalar::real(x(i, 0).c2);
        }
        return s;
    }
    if (x.domain() == Domain::Quat && rep == Domain::Real) {
        Matrix s(4 * n, 1, Domain::Real);
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < 4; ++m) s(m * n + i, 0) = Scalar::real(x(i, 0).comp(m));
        return s;
    }
    if (x.domain() == Domain::Quat && rep == Domain::Complex) {
        Matrix s(2 * n, 1, Domain::Complex);
        for (int i = 0; i < n; ++i) {
            s(i, 0) = Scalar::complex(x(i, 0).c1, x(i, 0).c2);
            s(n + i, 0) = Scalar::complex(x(i, 0).c3, -x(i, 0).c4);
        }
        return s;
    }
    if (x.domain() == rep) return x;
    throw UsageError("stack_vec: unsupported representation");
}

Matrix unstack_vec(const Matrix& xs, Domain original, Domain rep) {
    if (xs.cols() != 1) throw UsageError("unstack_vec: expected a column vector");
    if (original == rep) return xs;
    const int dr = components(original) / components(rep);
    const int n = xs.rows() / dr;
    Matrix x(n, 1, original);
    if (rep == Domain::Real) {
        for (int i = 0; i < n; ++i) {
            double c[4] = {0, 0, 0, 0};
            for (int m = 0; m < dr; ++m) c[m] = xs(m * n + i, 0).c1;
            x(i, 0) = Scalar(c[0], c[1], c[2], c[3], original);
        }
        return x;
    }
    // complex representation of a quaternion vector
    for (int i = 0; i < n; ++i) {
        const Scalar& v1 = xs(i, 0);
        const Scalar& v2 = xs(n + i, 0);
        x(i, 0) = Scalar::quat(v1.c1, v1.c2, v2.c1, -v2.c2);
    }
    return x;
}

std::vector<int> equalize_detect(const Equalizer& eq, const Matrix& y,
                                 const Constellation& constellation) {
    if (y.rows() != eq.F.cols() || y.cols() != 1)
        throw UsageError("equalize_detect: dimension mismatch");
    const Matrix xb = eq.F * y;
    const int k = xb.rows();
    Matrix q(k, 1, xb.domain());
    for (int i = 0; i < k; ++i) q(i, 0) = quantize(eq.ring, xb(i, 0));
    const Matrix xt = eq.Zinv * q;

    const Domain chan_dom = constellation.points.front().dom;
    const Matrix xc = unstack_vec(xt, chan_dom, xt.domain());

    std::vector<int> out(xc.rows());
    for (int i = 0; i < xc.rows(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int p = 0; p < static_cast<int>(constellation.points.size()); ++p) {
            const double d = norm2(xc(i, 0) - constellation.points[p]);
            if (d < best_d) {
                best_d = d;
                best = p;
            }
        }
        out[i] = best;
    }
    return out;
}

std::vector<SerPoint> simulate_ser(const ChannelConfig& cfg, FactorMethod method,
                                   RingId ring, EqCriterion criterion,
                                   const std::vector<double>& snr_db,
                                   const Constellation& constellation, int trials,
                                   int symbols_per_channel, std::uint64_t seed) {
    if (trials < 1) throw UsageError("simulate_ser: trials must be >= 1");
    const int n_points = static_cast<int>(constellation.points.size());
    const double s2x = constellation.sigma2_x;
    const int dr_chan = components(cfg.domain);

    std::vector<SerPoint> result;
    for (size_t si = 0; si < snr_db.size(); ++si) {
        const double s2n = s2x / std::pow(10.0, snr_db[si] / 10.0);
        const double nstd = std::sqrt(s2n / dr_chan);
        long long errors = 0, total = 0;
        std::vector<double> per_channel(trials);

        for (int t = 0; t < trials; ++t) {
            GaussianSampler hg(trial_stream(seed, t));
            const Matrix h = sample_channel(cfg, hg);
            const Matrix h_proc = processing_matrix(h, ring);
            const Equalizer eq =
                criterion == EqCriterion::ZF
                    ? zf_factorize(h_proc, ring, method)
                    : mmse_factorize(h_proc, ring, method, s2n, s2x);

            SplitMix64 sym_rng =
                trial_stream(seed ^ (0xABCD1234ULL * (si + 1)), t);
            GaussianSampler ng(sym_rng);

            long long ch_err = 0;
            for (int use = 0; use < symbols_per_channel; ++use) {
                std::vector<int> tx(cfg.k_users);
                Matrix x(cfg.k_users, 1, cfg.domain);
                for (int u = 0; u < cfg.k_users; ++u) {
                    tx[u] = static_cast<int>(ng.rng.below(n_points));
                    x(u, 0) = constellation.points[tx[u]];
                }
                Matrix y = h * x;
                for (int i = 0; i < cfg.n_rx; ++i) {
                    double c[4] = {0, 0, 0, 0};
                    for (int m = 0; m < dr_chan; ++m) c[m] = nstd * ng.next();
                    y(i, 0) = y(i, 0) + Scalar(c[0], c[1], c[2], c[3], cfg.domain);
                }
                const Matrix y_proc = stack_vec(y, ambient(ring));
                const std::vector<int> rx = equalize_detect(eq, y_proc, constellation);
                for (int u = 0; u < cfg.k_users; ++u)
                    if (rx[u] != tx[u]) ++ch_err;
            }
            errors += ch_err;
            total += static_cast<long long>(symbols_per_channel) * cfg.k_users;
            per_channel[t] =
                static_cast<double>(ch_err) / (symbols_per_channel * cfg.k_users);
        }

        SerPoint p;
        p.snr_db = snr_db[si];
        p.ser = static_cast<double>(errors) / static_cast<double>(total);
        p.ci_radius = trials > 1 ? 1.96 * mean_se(per_channel) : 0.0;
        p.symbols = total;
        result.push_back(p);
    }
    return result;
}

RateResult achievable_rate(const Equalizer& eq, double sigma2_x, double sigma2_n,
                           int d_r) {
    double worst = 0.0;
    for (double r : eq.row_norm2) worst = std::max(worst, r);
    if (!(worst > 0.0)) throw UsageError("achievable_rate: invalid equalizer");
    const double arg = sigma2_x / (worst * sigma2_n);
    if (arg <= 1.0) return {0.0, true};
    return {0.5 * d_r * std::log2(arg), false};
}

std::vector<double> rate_samples(const ChannelConfig& cfg, FactorMethod method,
                                 RingId ring, int trials, std::uint64_t seed) {
    std::vector<double> rates(trials);
    const int dr_sym = components(cfg.domain);
    for (int t = 0; t < trials; ++t) {
        GaussianSampler hg(trial_stream(seed, t));
        const Matrix h = sample_channel(cfg, hg);
        const Matrix h_proc = processing_matrix(h, ring);
        const Equalizer eq =
            mmse_factorize(h_proc, ring, method, cfg.sigma2_n, cfg.sigma2_x);
        rates[t] = achievable_rate(eq, cfg.sigma2_x, cfg.sigma2_n, dr_sym).rate;
    }
    return rates;
}

double rate_quantiles(const ChannelConfig& cfg, FactorMethod method, RingId ring,
                      int trials, double q, std::uint64_t seed) {
    return quantile(rate_samples(cfg, method, ring, trials, seed), q);
}

double diversity_order(const ChannelConfig& cfg) {
    return 0.5 * components(cfg.domain) * cfg.n_rx;
}

}  // namespace latq
