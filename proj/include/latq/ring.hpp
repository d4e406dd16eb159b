#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "latq/scalar.hpp"

namespace latq {

// The five integer rings: rational, Gaussian, Eisenstein, Lipschitz, Hurwitz.
enum class RingId : std::uint8_t { Z, G, E, L, H };

const char* ring_name(RingId r);
RingId ring_from_name(const std::string& name);

Domain ambient(RingId r);

struct RingProps {
    int Dr;             // real components per scalar
    double eps2;        // maximum squared quantization error
    bool euclidean;     // false exactly for the Lipschitz integers
    double delta_min;   // open lower end of the admissible delta range
};

const RingProps& props(RingId r);

// delta is admissible for LLL over the ring: (eps2, 1] for Euclidean rings,
// exactly 1 for the Lipschitz pseudo-reduction.
bool valid_delta(RingId r, double delta);

// Exact ring element.  Stores doubled coordinates d[0..3] as integers:
//   Z, G, L, H : value = (d0 + d1 i + d2 j + d3 k) / 2
//   E          : value = d0/2 + d1 (sqrt(3)/2) i
// Valid elements satisfy, per ring: Z/G/L all even coordinates; H all
// coordinates of equal parity; E: d0 and d1 of equal parity.  This keeps
// sums, differences and products exact in integer arithmetic.
struct RingElem {
    std::array<std::int64_t, 4> d{0, 0, 0, 0};
    RingId ring = RingId::Z;

    static RingElem zero(RingId r) { return RingElem{{0, 0, 0, 0}, r}; }
    static RingElem one(RingId r) { return RingElem{{2, 0, 0, 0}, r}; }

    bool is_zero() const { return d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0; }
    // 4 * |elem|^2 as an exact integer.
    std::int64_t norm2_x4() const;
    bool is_unit() const { return norm2_x4() == 4; }
};

bool operator==(const RingElem& a, const RingElem& b);
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem conj(const RingElem& a);

Scalar to_scalar(const RingElem& e);
double norm2(const RingElem& e);

// Constructors from natural coordinates.
RingElem make_z(std::int64_t n);
RingElem make_g(std::int64_t re, std::int64_t im);
RingElem make_e(std::int64_t a, std::int64_t b);  // a + b*omega
RingElem make_l(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
// Hurwitz element from a Lipschitz part plus an optional o_H shift.
RingElem make_h(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                bool half_shift);

RingElem omega_unit();   // e^{2 pi i / 3}, Eisenstein unit
RingElem hurwitz_unit(); // (1 + i + j + k) / 2

// Structural validity of the doubled-coordinate representation.
bool valid_elem(const RingElem& e);

// Nearest ring element; per-coordinate rounding ties resolve towards +inf,
// coset ties (Eisenstein/Hurwitz) resolve to the integer-component coset.
// Throws UsageError when the scalar's domain exceeds the ring's ambient one.
RingElem quantize_exact(RingId ring, const Scalar& s);
Scalar quantize(RingId ring, const Scalar& s);

// s - quantize(ring, s); lies in the Voronoi cell of the origin.
Scalar ring_mod(RingId ring, const Scalar& s);

// True iff s is within tol of a ring element.  Never throws: values outside
// the ring's ambient domain simply are not ring elements.
bool is_ring_element(RingId ring, const Scalar& s, double tol = 1e-9);

// Real-multiplication cost of one scalar multiplication per domain.
enum class MultVariant : std::uint8_t { Naive, Reduced };

struct MultCostModel {
    MultVariant variant = MultVariant::Naive;

    int n_real(Domain d) const {
        switch (d) {
            case Domain::Real: return 1;
            case Domain::Complex: return variant == MultVariant::Naive ? 4 : 3;
            default: return variant == MultVariant::Naive ? 16 : 8;
        }
    }
};

}  // namespace latq
