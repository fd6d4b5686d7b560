#pragma once

#include "frolicher/exact_matrix.hpp"

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace frolicher {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Relative tolerance used for numerical ranks and kernels unless a caller
// overrides it.
inline constexpr double kRankTolerance = 1e-10;

// Rank cut-off: max(rows, cols) * max(sigma_max, scale) * rel.  `scale` lets a
// caller say "entries of this matrix are measured against norm `scale`", so a
// block that is pure roundoff relative to its parent operator counts as zero.
double rank_cutoff(const RVector &singular_values, int rows, int cols, double scale, double rel);

int numerical_rank(const CMatrix &m, double scale = 0.0, double rel = kRankTolerance);
// Orthonormal basis of the numerical kernel (columns).
CMatrix null_space(const CMatrix &m, double scale = 0.0, double rel = kRankTolerance);
// Orthonormal basis of the numerical column space.
CMatrix range_basis(const CMatrix &m, double scale = 0.0, double rel = kRankTolerance);
// Moore-Penrose inverse with the same cut-off.
CMatrix pseudo_inverse(const CMatrix &m, double scale = 0.0, double rel = kRankTolerance);

// Ascending eigenvalues of the Hermitian part of m.
RVector hermitian_eigenvalues(const CMatrix &m);
double min_eigenvalue(const CMatrix &m);
double max_eigenvalue(const CMatrix &m);
double hermitian_residual(const CMatrix &m);  // ||m - m^H||
RVector singular_values(const CMatrix &m);    // descending

CMatrix hstack(const CMatrix &a, const CMatrix &b);
CMatrix vstack(const CMatrix &a, const CMatrix &b);
CMatrix to_complex(const ExactMatrix &m);

// The two scalar back-ends used by the generic page computations.  Both
// expose the same small vocabulary over their own matrix type.
struct ExactOps {
    using Matrix = ExactMatrix;
    static Matrix zero(int r, int c) { return Matrix::Zero(r, c); }
    int rank(const Matrix &m) const { return exact_rank(m); }
    Matrix null_space(const Matrix &m) const { return exact_null_space(m); }
    static Matrix block(const Matrix &m, int r0, int c0, int nr, int nc) { return m.block(r0, c0, nr, nc); }
    static Matrix hstack(const Matrix &a, const Matrix &b);
    static Matrix vstack(const Matrix &a, const Matrix &b);
    static void place(Matrix &m, int r0, int c0, const Matrix &b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    }
    static Matrix product(const Matrix &a, const Matrix &b) { return a * b; }
    static Matrix negate(const Matrix &a) { return GaussianRational(-1) * a; }
};

struct FloatOps {
    using Matrix = CMatrix;
    double scale = 1.0;
    double rel = kRankTolerance;
    static Matrix zero(int r, int c) { return Matrix::Zero(r, c); }
    int rank(const Matrix &m) const { return numerical_rank(m, scale, rel); }
    Matrix null_space(const Matrix &m) const { return frolicher::null_space(m, scale, rel); }
    static Matrix block(const Matrix &m, int r0, int c0, int nr, int nc) { return m.block(r0, c0, nr, nc); }
    static Matrix hstack(const Matrix &a, const Matrix &b) { return frolicher::hstack(a, b); }
    static Matrix vstack(const Matrix &a, const Matrix &b) { return frolicher::vstack(a, b); }
    static void place(Matrix &m, int r0, int c0, const Matrix &b) {
        if (b.size()) m.block(r0, c0, b.rows(), b.cols()) = b;
    }
    static Matrix product(const Matrix &a, const Matrix &b) { return a * b; }
    static Matrix negate(const Matrix &a) { return -a; }
};

}  // namespace frolicher
