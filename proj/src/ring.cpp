#include "latq/ring.hpp"

#include <cassert>
#include <cmath>

namespace latq {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// Rounds with ties towards +infinity.
std::int64_t round_half_up(double x) {
    return static_cast<std::int64_t>(std::floor(x + 0.5));
}

bool even(std::int64_t x) { return (x & 1) == 0; }

// Hamilton product on raw coordinate 4-vectors.
std::array<std::int64_t, 4> hamilton(const std::array<std::int64_t, 4>& u,
                                     const std::array<std::int64_t, 4>& v) {
    return {u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3],
            u[0] * v[1] + u[1] * v[0] + u[2] * v[3] - u[3] * v[2],
            u[0] * v[2] - u[1] * v[3] + u[2] * v[0] + u[3] * v[1],
            u[0] * v[3] + u[1] * v[2] - u[2] * v[1] + u[3] * v[0]};
}

}  // namespace

const char* ring_name(RingId r) {
    switch (r) {
        case RingId::Z: return "Z";
        case RingId::G: return "G";
        case RingId::E: return "E";
        case RingId::L: return "L";
        default: return "H";
    }
}

RingId ring_from_name(const std::string& name) {
    if (name == "Z") return RingId::Z;
    if (name == "G") return RingId::G;
    if (name == "E") return RingId::E;
    if (name == "L") return RingId::L;
    if (name == "H") return RingId::H;
    throw UsageError("unknown ring '" + name + "' (expected Z, G, E, L or H)");
}

Domain ambient(RingId r) {
    switch (r) {
        case RingId::Z: return Domain::Real;
        case RingId::G:
        case RingId::E: return Domain::Complex;
        default: return Domain::Quat;
    }
}

const RingProps& props(RingId r) {
    static const RingProps table[5] = {
        {1, 0.25, true, 0.25},       // Z
        {2, 0.5, true, 0.5},         // G
        {2, 1.0 / 3.0, true, 1.0 / 3.0},  // E
        {4, 1.0, false, 1.0},        // L
        {4, 0.5, true, 0.5},         // H
    };
    return table[static_cast<int>(r)];
}

bool valid_delta(RingId r, double delta) {
    if (r == RingId::L) return delta == 1.0;
    return delta > props(r).eps2 && delta <= 1.0;
}

std::int64_t RingElem::norm2_x4() const {
    if (ring == RingId::E) return d[0] * d[0] + 3 * d[1] * d[1];
    return d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3];
}

bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring == b.ring && a.d == b.d;
}

namespace {
void require_same_ring(const RingElem& a, const RingElem& b, const char* op) {
    if (a.ring != b.ring)
        throw UsageError(std::string(op) + ": ring mismatch (" + ring_name(a.ring) +
                         " vs " + ring_name(b.ring) + ")");
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b, "add");
    return {{a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2], a.d[3] + b.d[3]}, a.ring};
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b, "sub");
    return {{a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2], a.d[3] - b.d[3]}, a.ring};
}

RingElem operator-(const RingElem& a) {
    return {{-a.d[0], -a.d[1], -a.d[2], -a.d[3]}, a.ring};
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b, "mul");
    if (a.ring == RingId::E) {
        // (p1 + q1 s i)(p2 + q2 s i) / 4 with s = sqrt(3), s^2 = 3.
        const std::int64_t p = a.d[0] * b.d[0] - 3 * a.d[1] * b.d[1];
        const std::int64_t q = a.d[0] * b.d[1] + a.d[1] * b.d[0];
        assert(even(p) && even(q));
        return {{p / 2, q / 2, 0, 0}, a.ring};
    }
    const auto h = hamilton(a.d, b.d);
    assert(even(h[0]) && even(h[1]) && even(h[2]) && even(h[3]));
    return {{h[0] / 2, h[1] / 2, h[2] / 2, h[3] / 2}, a.ring};
}

RingElem conj(const RingElem& a) {
    return {{a.d[0], -a.d[1], -a.d[2], -a.d[3]}, a.ring};
}

Scalar to_scalar(const RingElem& e) {
    switch (e.ring) {
        case RingId::Z:
            return Scalar::real(e.d[0] / 2.0);
        case RingId::G:
            return Scalar::complex(e.d[0] / 2.0, e.d[1] / 2.0);
        case RingId::E:
            return Scalar::complex(e.d[0] / 2.0, e.d[1] * (kSqrt3 / 2.0));
        default:
            return Scalar::quat(e.d[0] / 2.0, e.d[1] / 2.0, e.d[2] / 2.0, e.d[3] / 2.0);
    }
}

double norm2(const RingElem& e) { return static_cast<double>(e.norm2_x4()) / 4.0; }

RingElem make_z(std::int64_t n) { return {{2 * n, 0, 0, 0}, RingId::Z}; }

RingElem make_g(std::int64_t re, std::int64_t im) {
    return {{2 * re, 2 * im, 0, 0}, RingId::G};
}

RingElem make_e(std::int64_t a, std::int64_t b) {
    // a + b*omega = (2a - b)/2 + b sqrt(3)/2 i
    return {{2 * a - b, b, 0, 0}, RingId::E};
}

RingElem make_l(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {{2 * a, 2 * b, 2 * c, 2 * d}, RingId::L};
}

RingElem make_h(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                bool half_shift) {
    const std::int64_t s = half_shift ? 1 : 0;
    return {{2 * a + s, 2 * b + s, 2 * c + s, 2 * d + s}, RingId::H};
}

RingElem omega_unit() { return make_e(0, 1); }

RingElem hurwitz_unit() { return make_h(0, 0, 0, 0, true); }

bool valid_elem(const RingElem& e) {
    switch (e.ring) {
        case RingId::Z:
            return even(e.d[0]) && e.d[1] == 0 && e.d[2] == 0 && e.d[3] == 0;
        case RingId::G:
            return even(e.d[0]) && even(e.d[1]) && e.d[2] == 0 && e.d[3] == 0;
        case RingId::E:
            return even(e.d[0] - e.d[1]) && e.d[2] == 0 && e.d[3] == 0;
        case RingId::L:
            return even(e.d[0]) && even(e.d[1]) && even(e.d[2]) && even(e.d[3]);
        default:
            // Hurwitz: all four coordinates of equal parity.
            return even(e.d[0] - e.d[1]) && even(e.d[0] - e.d[2]) && even(e.d[0] - e.d[3]);
    }
}

namespace {

void require_domain_fits(RingId ring, const Scalar& s, const char* op) {
    if (components(s.dom) > components(ambient(ring)))
        throw UsageError(std::string(op) + ": scalar domain " + domain_name(s.dom) +
                         " exceeds ambient domain of ring " + ring_name(ring));
}

double dist2(const Scalar& s, const RingElem& e) {
    const Scalar v = to_scalar(e);
    const double a = s.c1 - v.c1, b = s.c2 - v.c2, c = s.c3 - v.c3, d = s.c4 - v.c4;
    return a * a + b * b + c * c + d * d;
}

// Quantization without the domain-tag gate; used by is_ring_element.
RingElem quantize_raw(RingId ring, const Scalar& s) {
    switch (ring) {
        case RingId::Z:
            return {{2 * round_half_up(s.c1), 0, 0, 0}, ring};
        case RingId::G:
            return {{2 * round_half_up(s.c1), 2 * round_half_up(s.c2), 0, 0}, ring};
        case RingId::E: {
            // Nearest point of each rectangular coset, then the closer one;
            // ties go to the integer-component coset E1.
            const RingElem e1{{2 * round_half_up(s.c1),
                               2 * round_half_up(s.c2 / kSqrt3), 0, 0},
                              ring};
            const RingElem e2{{2 * round_half_up(s.c1 - 0.5) + 1,
                               2 * round_half_up((s.c2 - kSqrt3 / 2.0) / kSqrt3) + 1, 0, 0},
                              ring};
            return dist2(s, e2) < dist2(s, e1) ? e2 : e1;
        }
        case RingId::L:
            return {{2 * round_half_up(s.c1), 2 * round_half_up(s.c2),
                     2 * round_half_up(s.c3), 2 * round_half_up(s.c4)},
                    ring};
        default: {
            const RingElem h1{{2 * round_half_up(s.c1), 2 * round_half_up(s.c2),
                               2 * round_half_up(s.c3), 2 * round_half_up(s.c4)},
                              ring};
            const RingElem h2{{2 * round_half_up(s.c1 - 0.5) + 1,
                               2 * round_half_up(s.c2 - 0.5) + 1,
                               2 * round_half_up(s.c3 - 0.5) + 1,
                               2 * round_half_up(s.c4 - 0.5) + 1},
                              ring};
            return dist2(s, h2) < dist2(s, h1) ? h2 : h1;
        }
    }
}

}  // namespace

RingElem quantize_exact(RingId ring, const Scalar& s) {
    require_domain_fits(ring, s, "quantize");
    return quantize_raw(ring, s);
}

Scalar quantize(RingId ring, const Scalar& s) {
    const Scalar v = to_scalar(quantize_exact(ring, s));
    return {v.c1, v.c2, v.c3, v.c4, s.dom};
}

Scalar ring_mod(RingId ring, const Scalar& s) {
    const Scalar q = quantize(ring, s);
    return s - q;
}

bool is_ring_element(RingId ring, const Scalar& s, double tol) {
    return dist2(s, quantize_raw(ring, s)) <= tol * tol;
}

}  // namespace latq
