#include "latq/bounds.hpp"

#include <cmath>
#include <string>

#include "latq/errors.hpp"

namespace latq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |det(G_I)|^{2/(D_r K)}: independent of K.
double det_factor_per_minimum(RingId ring) {
    switch (ring) {
        case RingId::E: return std::sqrt(3.0) / 2.0;
        case RingId::H: return 1.0 / std::sqrt(2.0);
        default: return 1.0;
    }
}

void require_valid_delta(RingId ring, double delta, const char* where) {
    if (!(delta > props(ring).eps2 && delta <= 1.0))
        throw UsageError(std::string(where) + ": delta outside (eps2, 1] for ring " +
                         ring_name(ring));
}

void require_pairing(const LllVariant& v1, const LllVariant& v2, const char* where) {
    if (v1.k * v1.dr() != v2.k * v2.dr())
        throw UsageError(std::string(where) +
                         ": variants do not describe the same real rank");
}

CompareResult compare_impl(const LllVariant& v1, const LllVariant& v2, double delta,
                           int e1_exp, int e2_exp, const char* where) {
    require_pairing(v1, v2, where);
    require_valid_delta(v1.ring, delta, where);
    require_valid_delta(v2.ring, delta, where);

    // v1 has the smaller asymptotic bound iff
    //   (delta - eps1^2)^{e1} > (delta - eps2^2)^{e2},
    // the per-real-rank root of the corollary's ratio condition.
    const double lo = std::max(v1.eps2(), v2.eps2());
    auto g = [&](double d) {
        return std::pow(d - v1.eps2(), e1_exp) - std::pow(d - v2.eps2(), e2_exp);
    };

    CompareResult out{CompareVerdict::Equal, std::nullopt};
    const double gd = g(delta);
    if (gd > 1e-14)
        out.verdict = CompareVerdict::V1Smaller;
    else if (gd < -1e-14)
        out.verdict = CompareVerdict::V2Smaller;

    double a = lo + 1e-12, b = 1.0;
    double ga = g(a), gb = g(b);
    if (ga * gb < 0.0) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            const double gm = g(mid);
            if (ga * gm <= 0.0) {
                b = mid;
                gb = gm;
            } else {
                a = mid;
                ga = gm;
            }
        }
        out.threshold = 0.5 * (a + b);
    }
    return out;
}

}  // namespace

HermiteValue hermite_best(int k) {
    switch (k) {
        case 1: return {1.0, true};
        case 2: return {2.0 / std::sqrt(3.0), true};
        case 3: return {std::cbrt(2.0), true};
        case 4: return {std::sqrt(2.0), true};
        case 5: return {std::pow(8.0, 0.2), true};
        case 6: return {std::pow(64.0 / 3.0, 1.0 / 6.0), true};
        case 7: return {std::pow(64.0, 1.0 / 7.0), true};
        case 8: return {2.0, true};
        case 24: return {4.0, true};
        default: return {hermite_upper(k), false};
    }
}

double hermite_upper(int k) {
    if (k < 1) throw UsageError("hermite_upper: K must be >= 1");
    return (2.0 / kPi) * std::exp((2.0 / k) * std::lgamma(2.0 + k / 2.0));
}

double first_minimum_bound(RingId ring, int k, double vol) {
    if (!(vol > 0.0)) throw UsageError("first_minimum_bound: vol must be positive");
    const int dk = props(ring).Dr * k;
    return hermite_best(dk).value * det_factor_per_minimum(ring) *
           std::pow(vol, 2.0 / k);
}

double lll_first_bound(RingId ring, double delta, int k, double vol) {
    require_valid_delta(ring, delta, "lll_first_bound");
    return std::pow(1.0 / (delta - props(ring).eps2), (k - 1) / 2.0) *
           std::pow(vol, 2.0 / k);
}

double minima_product_bound(RingId ring, int k, int l, double vol) {
    if (l < 1 || l > k) throw UsageError("minima_product_bound: need 1 <= L <= K");
    const int dk = props(ring).Dr * k;
    return std::pow(hermite_best(dk).value * det_factor_per_minimum(ring), l) *
           std::pow(vol, 2.0 * l / k);
}

double sivp_defect_bound(RingId ring, int k) {
    const int dk = props(ring).Dr * k;
    double det_part = 1.0;
    if (ring == RingId::E) det_part = std::pow(0.75, k / 4.0);
    if (ring == RingId::H) det_part = std::pow(0.5, k / 4.0);
    return std::pow(hermite_best(dk).value, k / 2.0) * det_part;
}

double lll_defect_bound(RingId ring, double delta, int k) {
    require_valid_delta(ring, delta, "lll_defect_bound");
    return std::pow(1.0 / (delta - props(ring).eps2), k * (k - 1) / 4.0);
}

CompareResult compare_first_norm(const LllVariant& v1, const LllVariant& v2,
                                 double delta) {
    return compare_impl(v1, v2, delta, v2.dr(), v1.dr(), "compare_first_norm");
}

CompareResult compare_defect(const LllVariant& v1, const LllVariant& v2, double delta) {
    return compare_impl(v1, v2, delta, v2.dr() * v2.dr(), v1.dr() * v1.dr(),
                        "compare_defect");
}

double expected_list_size(RingId ring, int k, double psi2, double vol) {
    if (!(psi2 > 0.0) || !(vol > 0.0))
        throw UsageError("expected_list_size: psi2 and vol must be positive");
    const double dr = props(ring).Dr;
    const double half_dim = dr * k / 2.0;
    double log_det = 0.0;
    if (ring == RingId::E) log_det = k * std::log(std::sqrt(3.0) / 2.0);
    if (ring == RingId::H) log_det = k * std::log(0.5);
    return std::exp(half_dim * std::log(kPi * psi2) - std::lgamma(half_dim + 1.0) -
                    log_det - dr * std::log(vol));
}

double lll_mult_ratio(const LllVariant& v1, const LllVariant& v2, long long n1,
                      long long n2, double delta, const MultCostModel& cost) {
    require_pairing(v1, v2, "lll_mult_ratio");
    if (!valid_delta(v1.ring, delta) || !valid_delta(v2.ring, delta))
        throw UsageError("lll_mult_ratio: invalid delta for pairing");
    const double nr1 = cost.n_real(ambient(v1.ring));
    const double nr2 = cost.n_real(ambient(v2.ring));
    const double xi = static_cast<double>(v1.dr()) / v2.dr();
    const double k1 = v1.k, k2 = v2.k;
    return (nr1 / nr2) * (k1 * k1 * k1 * n1) / (k2 * k2 * k2 * n2) * xi;
}

}  // namespace latq
