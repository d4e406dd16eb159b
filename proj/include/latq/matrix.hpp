#pragma once

#include <vector>

#include "latq/ring.hpp"
#include "latq/scalar.hpp"

namespace latq {

// Dense column-major matrix over one scalar domain; columns are basis
// vectors.  Value type: operations return new matrices.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, Domain dom)
        : rows_(rows), cols_(cols), dom_(dom), a_(static_cast<size_t>(rows) * cols,
                                                  Scalar::zero(dom)) {
        if (rows < 1 || cols < 1) throw UsageError("Matrix: dimensions must be >= 1");
    }

    static Matrix identity(int n, Domain dom);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Domain domain() const { return dom_; }

    Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(j) * rows_ + i]; }
    const Scalar& operator()(int i, int j) const {
        return a_[static_cast<size_t>(j) * rows_ + i];
    }

    Scalar* col(int j) { return &a_[static_cast<size_t>(j) * rows_]; }
    const Scalar* col(int j) const { return &a_[static_cast<size_t>(j) * rows_]; }

    void swap_cols(int j1, int j2);

  private:
    int rows_ = 0, cols_ = 0;
    Domain dom_ = Domain::Real;
    std::vector<Scalar> a_;
};

// Dense column-major matrix of exact ring elements (transformation matrices,
// candidate lists).
class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols, RingId ring)
        : rows_(rows), cols_(cols), ring_(ring),
          a_(static_cast<size_t>(rows) * cols, RingElem::zero(ring)) {
        if (rows < 1 || cols < 1) throw UsageError("RingMatrix: dimensions must be >= 1");
    }

    static RingMatrix identity(int n, RingId ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RingId ring() const { return ring_; }

    RingElem& operator()(int i, int j) { return a_[static_cast<size_t>(j) * rows_ + i]; }
    const RingElem& operator()(int i, int j) const {
        return a_[static_cast<size_t>(j) * rows_ + i];
    }

    void swap_cols(int j1, int j2);

    Matrix to_matrix() const;

  private:
    int rows_ = 0, cols_ = 0;
    RingId ring_ = RingId::Z;
    std::vector<RingElem> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const RingMatrix& b);
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Conjugate transpose (plain transpose over the reals).
Matrix hermitian(const Matrix& m);
RingMatrix hermitian(const RingMatrix& m);

// Inner product q^H v over the column span (sum of conj(q_i) * v_i); the
// conjugated vector enters from the left, preserving quaternion order.
Scalar dot_left(const Scalar* q, const Scalar* v, int n);

double col_norm2(const Matrix& m, int j);
double max_col_norm(const Matrix& m);
double frobenius(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace latq
