#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latq/matrix.hpp"
#include "latq/rng.hpp"

namespace latq {

// MIMO uplink: K single-antenna users, N receive units, block fading.
struct ChannelConfig {
    int n_rx = 4;
    int k_users = 4;
    Domain domain = Domain::Complex;
    double sigma2_x = 2.0;  // signal variance per full scalar symbol
    double sigma2_n = 1.0;  // noise variance per full scalar
};

// Finite zero-mean signal set drawn from an integer ring.
struct Constellation {
    std::vector<Scalar> points;
    RingId ring = RingId::G;  // smallest ring containing the points
    double sigma2_x = 0.0;
    std::string name;
};

Constellation constellation_AG();  // {+-1 +- i}, variance 2
Constellation constellation_AE();  // {1, -1, +-sqrt(3) i}, variance 2
Constellation constellation_AL();  // {+-1 +- i +- j +- k}, variance 4
Constellation constellation_by_name(const std::string& name);

// i.i.d. Gaussian channel: unit variance per complex gain (component
// variance 1/2), total variance 2 per quaternionic gain, unit variance for
// real entries.  Deterministic under the seed.
Matrix sample_channel(const ChannelConfig& cfg, std::uint64_t seed);
Matrix sample_channel(const ChannelConfig& cfg, GaussianSampler& gauss);

enum class EqCriterion : std::uint8_t { ZF, MMSE };
enum class FactorMethod : std::uint8_t { LLL, SMP };

const char* method_name(FactorMethod m);

struct Equalizer {
    Matrix F;                       // K x N filter (left part for MMSE)
    RingMatrix Z;                   // ring-integer effective channel, Z = T^H
    Matrix Zinv;                    // inverse over the ambient algebra
    std::vector<double> row_norm2;  // complete (augmented) squared row norms
    EqCriterion criterion = EqCriterion::ZF;
    FactorMethod method = FactorMethod::LLL;
    RingId ring = RingId::G;
};

// ZF factorization F^H = H^{+H} Z^H; F H = Z up to round-off.
Equalizer zf_factorize(const Matrix& h, RingId ring, FactorMethod method);

// MMSE factorization on the augmented channel [H; (sigma_n/sigma_x) I].
Equalizer mmse_factorize(const Matrix& h, RingId ring, FactorMethod method,
                         double sigma2_n, double sigma2_x);

// Hard-decision chain: linear filter, per-stream ring quantization, integer
// de-interference via Z^{-1}, nearest constellation point.  Returns point
// indices per user.
std::vector<int> equalize_detect(const Equalizer& eq, const Matrix& y,
                                 const Constellation& constellation);

struct SerPoint {
    double snr_db = 0.0;
    double ser = 0.0;
    double ci_radius = 0.0;  // 1.96 x per-channel-cluster standard error
    long long symbols = 0;
};

// Uncoded SER simulation under block fading: one factorization per channel
// draw, symbols_per_channel uses per draw.  Processing runs over the given
// ring; Z on a complex channel (or Z/G on a quaternionic one) selects the
// equivalent real/complex representation.
std::vector<SerPoint> simulate_ser(const ChannelConfig& cfg, FactorMethod method,
                                   RingId ring, EqCriterion criterion,
                                   const std::vector<double>& snr_db,
                                   const Constellation& constellation, int trials,
                                   int symbols_per_channel, std::uint64_t seed);

struct RateResult {
    double rate = 0.0;
    bool clipped = false;  // true when the worst-link SNR was <= 1
};

// Worst-link rate (D_r/2) log2(sigma2_x / (max_k ||f_k||^2 sigma2_n)), with
// D_r of the physical symbol domain.
RateResult achievable_rate(const Equalizer& eq, double sigma2_x, double sigma2_n,
                           int d_r);

// Per-channel-draw rates for one processing variant.  The processing ring
// may live in an equivalent representation of the channel domain.
std::vector<double> rate_samples(const ChannelConfig& cfg, FactorMethod method,
                                 RingId ring, int trials, std::uint64_t seed);

double rate_quantiles(const ChannelConfig& cfg, FactorMethod method, RingId ring,
                      int trials, double q, std::uint64_t seed);

// Predicted receive diversity (D_r/2) N.
double diversity_order(const ChannelConfig& cfg);

// Column-stacked equivalent-representation vector (left-most block column
// convention, conjugation included for the complex representation).
Matrix stack_vec(const Matrix& x, Domain rep);
Matrix unstack_vec(const Matrix& xs, Domain original, Domain rep);

}  // namespace latq
