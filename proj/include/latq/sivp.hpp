#pragma once

#include <vector>

#include "latq/linalg.hpp"
#include "latq/matrix.hpp"

namespace latq {

// All nonzero integer coefficient vectors c with ||G_real c||^2 <= radius2,
// one representative per +-c pair (sign of the first nonzero coordinate
// positive).  The ball is closed; a 1e-9 relative slack absorbs floating
// round-off on the boundary.
struct CandidateList {
    IntMat C;        // D_r K x N_c coefficient columns
    long long n_c = 0;  // canonical list size (= C.cols())
    double radius2 = 0.0;
};

// Depth-first GSO-based search with Schnorr-Euchner zig-zag ordering.
CandidateList list_sphere_decode(const Matrix& g_real, double radius2);

// Squared norm of the shortest nonzero lattice vector of a real generator
// matrix (internally LLL-preprocessed, radius-shrinking enumeration).
double shortest_vector_norm2(const Matrix& g_real);

struct SmpResult {
    RingMatrix T;              // K x K, full rank over the ring
    Matrix G_tra;              // G * T
    std::vector<double> minima;  // mu_1 <= ... <= mu_K
    long long n_c = 0;           // lattice points in the ball (2x canonical count)
    long long n_c_canonical = 0;
    double radius2 = 0.0;
};

// List-based determination of the successive minima over the ring.
SmpResult smp(const Matrix& g, RingId ring);

// Indices of the columns of a sorted candidate matrix where a new dimension
// is established (row-echelon steps).  Row normalization multiplies by the
// pivot's inverse from the left; elimination subtracts left-multiplied rows,
// preserving quaternion order.
std::vector<int> row_echelon(const Matrix& c);

struct RepetitionReport {
    std::vector<double> ring_minima;
    std::vector<double> real_minima;
    bool ok = false;
};

// Checks that the minima of the equivalent real representation equal the
// ring minima, each repeated D_r times (within 1e-7).
RepetitionReport verify_minima_repetition(const Matrix& g, RingId ring);

}  // namespace latq
