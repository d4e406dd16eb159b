#include "latq/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace latq {

Matrix Matrix::identity(int n, Domain dom) {
    Matrix m(n, n, dom);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(dom);
    return m;
}

void Matrix::swap_cols(int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j1), (*this)(i, j2));
}

RingMatrix RingMatrix::identity(int n, RingId ring) {
    RingMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) m(i, i) = RingElem::one(ring);
    return m;
}

void RingMatrix::swap_cols(int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j1), (*this)(i, j2));
}

Matrix RingMatrix::to_matrix() const {
    Matrix m(rows_, cols_, ambient(ring_));
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i) m(i, j) = to_scalar((*this)(i, j));
    return m;
}

namespace {
void require_mul_shapes(int ac, int br, const char* op) {
    if (ac != br) throw UsageError(std::string(op) + ": inner dimensions differ");
}
}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_mul_shapes(a.cols(), b.rows(), "matmul");
    require_same_domain(a(0, 0), b(0, 0), "matmul");
    Matrix w(a.rows(), b.cols(), a.domain());
    for (int j = 0; j < b.cols(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& bkj = b(k, j);
            if (is_zero(bkj)) continue;
            for (int i = 0; i < a.rows(); ++i) w(i, j) = w(i, j) + a(i, k) * bkj;
        }
    return w;
}

Matrix operator*(const Matrix& a, const RingMatrix& b) {
    require_mul_shapes(a.cols(), b.rows(), "matmul");
    if (a.domain() != ambient(b.ring()))
        throw UsageError("matmul: matrix domain does not match ring ambient domain");
    Matrix w(a.rows(), b.cols(), a.domain());
    for (int j = 0; j < b.cols(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            if (b(k, j).is_zero()) continue;
            const Scalar bkj = to_scalar(b(k, j));
            for (int i = 0; i < a.rows(); ++i) w(i, j) = w(i, j) + a(i, k) * bkj;
        }
    return w;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    require_mul_shapes(a.cols(), b.rows(), "matmul");
    if (a.ring() != b.ring()) throw UsageError("matmul: ring mismatch");
    RingMatrix w(a.rows(), b.cols(), a.ring());
    for (int j = 0; j < b.cols(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            if (b(k, j).is_zero()) continue;
            for (int i = 0; i < a.rows(); ++i)
                w(i, j) = w(i, j) + a(i, k) * b(k, j);
        }
    return w;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("add: shape mismatch");
    Matrix w(a.rows(), a.cols(), a.domain());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) w(i, j) = a(i, j) + b(i, j);
    return w;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("sub: shape mismatch");
    Matrix w(a.rows(), a.cols(), a.domain());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) w(i, j) = a(i, j) - b(i, j);
    return w;
}

Matrix hermitian(const Matrix& m) {
    Matrix h(m.cols(), m.rows(), m.domain());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) h(j, i) = conj(m(i, j));
    return h;
}

RingMatrix hermitian(const RingMatrix& m) {
    RingMatrix h(m.cols(), m.rows(), m.ring());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) h(j, i) = conj(m(i, j));
    return h;
}

Scalar dot_left(const Scalar* q, const Scalar* v, int n) {
    Scalar acc = Scalar::zero(q[0].dom);
    for (int i = 0; i < n; ++i) acc = acc + conj(q[i]) * v[i];
    return acc;
}

double col_norm2(const Matrix& m, int j) {
    double acc = 0.0;
    const Scalar* c = m.col(j);
    for (int i = 0; i < m.rows(); ++i) acc += norm2(c[i]);
    return acc;
}

double max_col_norm(const Matrix& m) {
    double mx = 0.0;
    for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, std::sqrt(col_norm2(m, j)));
    return mx;
}

double frobenius(const Matrix& m) {
    double acc = 0.0;
    for (int j = 0; j < m.cols(); ++j) acc += col_norm2(m, j);
    return std::sqrt(acc);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("max_abs_diff: shape mismatch");
    double mx = 0.0;
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) {
            const Scalar d = a(i, j) - b(i, j);
            mx = std::max({mx, std::abs(d.c1), std::abs(d.c2), std::abs(d.c3),
                           std::abs(d.c4)});
        }
    return mx;
}

}  // namespace latq
