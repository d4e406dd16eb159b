#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "latq/matrix.hpp"

namespace latq {

// Tally of scalar multiplications by kind.  A "full" multiplication is
// scalar*scalar in the matrix domain, a "scaled" one is scalar*real
// (component-wise), "real" is a plain double multiplication.  The mapping to
// real-multiplication counts happens in MultCostModel.
struct OpCount {
    long long full = 0;
    long long scaled = 0;
    long long real = 0;

    long long real_mults(const MultCostModel& model, Domain dom) const {
        return full * model.n_real(dom) + scaled * components(dom) + real;
    }
    OpCount& operator+=(const OpCount& o) {
        full += o.full;
        scaled += o.scaled;
        real += o.real;
        return *this;
    }
};

// Gram-Schmidt orthogonalization G P = Q R with unnormalized orthogonal Q,
// unit-diagonal upper-triangular R and a sorting permutation P.
struct GsoResult {
    Matrix Q;
    Matrix R;
    std::vector<int> perm;  // column j of G*P is column perm[j] of G

    Matrix permutation_matrix(Domain dom) const;
};

// Pivoted GSO: at each step the shortest remaining projected column moves to
// the front.  Ties pick the lowest index.  Throws NumericError
// ("rank_deficient at column k") when a projected column falls below
// 1e-10 times the largest input column norm.
GsoResult gso_pivot(const Matrix& g, OpCount* cnt = nullptr);

// GSO in the given column order (perm is the identity).
GsoResult gso_unpivoted(const Matrix& g, OpCount* cnt = nullptr);

// Equivalent real representation: complex N x K -> 2N x 2K,
// quaternion N x K -> 4N x 4K (components stacked in the left-most column).
Matrix to_real(const Matrix& m);

// Equivalent complex representation of a quaternion matrix (2N x 2K), with
// the conjugation in the second block row.
Matrix to_complex(const Matrix& m);

// Inverse of to_complex for a structured 2N x 2K complex matrix; block
// mismatch beyond tol is averaged away (numerical round-off only).
Matrix complex_rep_to_quat(const Matrix& mc);

// Lattice volume sqrt(det(G^H G)); quaternion Gramians evaluate through the
// equivalent complex representation.
double volume(const Matrix& g);

// Orthogonality defect: product of column norms over the volume; >= 1.
double orth_defect(const Matrix& g);

// Equivalent real-valued generator matrix over Z of a lattice over the ring:
// to_real(G) times the ring's generator (identity for Z/G/L, the hexagonal
// A2 factor for E, the D4 factor for H).
Matrix ring_to_Z(const Matrix& g, RingId ring);

// Real generator matrix of the ring itself (the right factor above).
Matrix ring_generator_factor(RingId ring, int k);

// |det(G_I)| for the ring generator factor at rank K.
double ring_factor_abs_det(RingId ring, int k);

// Integer coefficient matrix (candidate vectors over Z).
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(j) * rows_ + i]; }
    std::int64_t operator()(int i, int j) const {
        return a_[static_cast<size_t>(j) * rows_ + i];
    }
    const std::int64_t* col(int j) const { return &a_[static_cast<size_t>(j) * rows_]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

// Reconversion of integer coefficient columns (w.r.t. G_{r,I}) into K x N_c
// ring-element columns.  Exact.
RingMatrix z_to_ring_exact(const IntMat& c, RingId ring);

// Spec surface: same conversion returning an ambient-domain matrix.
Matrix z_to_ring(const IntMat& c, RingId ring, int k, int n_c);

// Integer coordinates of a ring element w.r.t. the ring generator basis
// (inverse of the column stacking in z_to_ring); exact.
std::array<std::int64_t, 4> elem_coords(const RingElem& e);

// Eigen bridges.
Eigen::MatrixXd eig_real(const Matrix& m);
Eigen::MatrixXcd eig_cx(const Matrix& m);
Matrix from_eig(const Eigen::MatrixXd& m);
Matrix from_eig(const Eigen::MatrixXcd& m);

// Left pseudoinverse (G^H G)^{-1} G^H; quaternion input goes through the
// equivalent complex representation and back.
Matrix pinv(const Matrix& m);

// det(T^H T) of a square transformation matrix, evaluated via the equivalent
// real representation; equals 1 for unimodular T.
double unimodular_gram_det(const RingMatrix& t);

}  // namespace latq
