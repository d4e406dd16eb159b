#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "latq/errors.hpp"

namespace latq {

// Ambient arithmetic domain of a scalar or matrix.
enum class Domain : std::uint8_t { Real, Complex, Quat };

inline int components(Domain d) {
    switch (d) {
        case Domain::Real: return 1;
        case Domain::Complex: return 2;
        default: return 4;
    }
}

inline const char* domain_name(Domain d) {
    switch (d) {
        case Domain::Real: return "R";
        case Domain::Complex: return "C";
        default: return "H";
    }
}

// A number of the form c1 + c2 i + c3 j + c4 k, tagged with its domain.
// Real values carry c2 = c3 = c4 = 0, complex values c3 = c4 = 0; the tag
// makes accidental cross-domain arithmetic an error instead of a silent
// promotion.
struct Scalar {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
    Domain dom = Domain::Real;

    Scalar() = default;
    Scalar(double r) : c1(r), dom(Domain::Real) {}
    Scalar(double a, double b, double c, double d, Domain dm)
        : c1(a), c2(b), c3(c), c4(d), dom(dm) {}

    static Scalar real(double r) { return {r, 0, 0, 0, Domain::Real}; }
    static Scalar complex(double re, double im) { return {re, im, 0, 0, Domain::Complex}; }
    static Scalar quat(double a, double b, double c, double d) {
        return {a, b, c, d, Domain::Quat};
    }
    static Scalar zero(Domain d) { return {0, 0, 0, 0, d}; }
    static Scalar one(Domain d) { return {1, 0, 0, 0, d}; }

    double comp(int m) const {
        switch (m) {
            case 0: return c1;
            case 1: return c2;
            case 2: return c3;
            default: return c4;
        }
    }
};

inline void require_same_domain(const Scalar& u, const Scalar& v, const char* op) {
    if (u.dom != v.dom)
        throw UsageError(std::string(op) + ": cross-domain operands (" +
                         domain_name(u.dom) + " vs " + domain_name(v.dom) + ")");
}

inline Scalar operator+(const Scalar& u, const Scalar& v) {
    require_same_domain(u, v, "add");
    return {u.c1 + v.c1, u.c2 + v.c2, u.c3 + v.c3, u.c4 + v.c4, u.dom};
}

inline Scalar operator-(const Scalar& u, const Scalar& v) {
    require_same_domain(u, v, "sub");
    return {u.c1 - v.c1, u.c2 - v.c2, u.c3 - v.c3, u.c4 - v.c4, u.dom};
}

inline Scalar operator-(const Scalar& u) { return {-u.c1, -u.c2, -u.c3, -u.c4, u.dom}; }

// Hamilton product.  For complex and real tags the general formula collapses
// to the usual complex/real product; the cheap paths below keep the hot
// reduction loops from paying the 16-multiplication quaternion cost.
inline Scalar qmul(const Scalar& u, const Scalar& v) {
    require_same_domain(u, v, "qmul");
    switch (u.dom) {
        case Domain::Real:
            return Scalar::real(u.c1 * v.c1);
        case Domain::Complex:
            return Scalar::complex(u.c1 * v.c1 - u.c2 * v.c2, u.c1 * v.c2 + u.c2 * v.c1);
        default:
            return Scalar::quat(
                u.c1 * v.c1 - u.c2 * v.c2 - u.c3 * v.c3 - u.c4 * v.c4,
                u.c1 * v.c2 + u.c2 * v.c1 + u.c3 * v.c4 - u.c4 * v.c3,
                u.c1 * v.c3 - u.c2 * v.c4 + u.c3 * v.c1 + u.c4 * v.c2,
                u.c1 * v.c4 + u.c2 * v.c3 - u.c3 * v.c2 + u.c4 * v.c1);
    }
    return Scalar::zero(u.dom);
}

inline Scalar operator*(const Scalar& u, const Scalar& v) { return qmul(u, v); }

// Scaling by a plain real factor is domain-neutral.
inline Scalar operator*(const Scalar& u, double t) {
    return {u.c1 * t, u.c2 * t, u.c3 * t, u.c4 * t, u.dom};
}
inline Scalar operator*(double t, const Scalar& u) { return u * t; }

inline Scalar conj(const Scalar& s) { return {s.c1, -s.c2, -s.c3, -s.c4, s.dom}; }

inline double norm2(const Scalar& s) {
    return s.c1 * s.c1 + s.c2 * s.c2 + s.c3 * s.c3 + s.c4 * s.c4;
}

inline double abs(const Scalar& s) { return std::sqrt(norm2(s)); }

// v^-1 = v* (v* v)^-1; both a left and a right inverse.
inline Scalar inv(const Scalar& s) {
    const double n2 = norm2(s);
    if (n2 == 0.0) throw NumericError("inv: zero divisor");
    return conj(s) * (1.0 / n2);
}

inline bool approx_eq(const Scalar& u, const Scalar& v, double tol) {
    return std::abs(u.c1 - v.c1) <= tol && std::abs(u.c2 - v.c2) <= tol &&
           std::abs(u.c3 - v.c3) <= tol && std::abs(u.c4 - v.c4) <= tol;
}

inline bool is_zero(const Scalar& s) { return norm2(s) == 0.0; }

}  // namespace latq
