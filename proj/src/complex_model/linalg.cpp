#include "frolicher/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frolicher {

namespace {

Eigen::BDCSVD<CMatrix> svd_of(const CMatrix &m, unsigned options) { return Eigen::BDCSVD<CMatrix>(m, options); }

}  // namespace

double rank_cutoff(const RVector &sv, int rows, int cols, double scale, double rel) {
    double top = sv.size() ? sv(0) : 0.0;
    return std::max(rows, cols) * std::max(top, scale) * rel;
}

RVector singular_values(const CMatrix &m) {
    if (m.size() == 0) return RVector();
    return svd_of(m, 0).singularValues();
}

int numerical_rank(const CMatrix &m, double scale, double rel) {
    if (m.size() == 0) return 0;
    RVector sv = singular_values(m);
    double cut = rank_cutoff(sv, int(m.rows()), int(m.cols()), scale, rel);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return r;
}

CMatrix null_space(const CMatrix &m, double scale, double rel) {
    if (m.cols() == 0) return CMatrix(0, 0);
    if (m.rows() == 0) return CMatrix::Identity(m.cols(), m.cols());
    auto svd = svd_of(m, Eigen::ComputeFullV);
    RVector sv = svd.singularValues();
    double cut = rank_cutoff(sv, int(m.rows()), int(m.cols()), scale, rel);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

CMatrix range_basis(const CMatrix &m, double scale, double rel) {
    if (m.rows() == 0) return CMatrix(0, 0);
    if (m.cols() == 0) return CMatrix(m.rows(), 0);
    auto svd = svd_of(m, Eigen::ComputeThinU);
    RVector sv = svd.singularValues();
    double cut = rank_cutoff(sv, int(m.rows()), int(m.cols()), scale, rel);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixU().leftCols(r);
}

CMatrix pseudo_inverse(const CMatrix &m, double scale, double rel) {
    if (m.size() == 0) return CMatrix::Zero(m.cols(), m.rows());
    auto svd = svd_of(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    RVector sv = svd.singularValues();
    double cut = rank_cutoff(sv, int(m.rows()), int(m.cols()), scale, rel);
    CMatrix out = CMatrix::Zero(m.cols(), m.rows());
    for (int i = 0; i < sv.size() && sv(i) > cut; ++i)
        out += svd.matrixV().col(i) * (1.0 / sv(i)) * svd.matrixU().col(i).adjoint();
    return out;
}

RVector hermitian_eigenvalues(const CMatrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    if (m.size() == 0) return RVector();
    CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double min_eigenvalue(const CMatrix &m) {
    RVector ev = hermitian_eigenvalues(m);
    return ev.size() ? ev(0) : 0.0;
}

double max_eigenvalue(const CMatrix &m) {
    RVector ev = hermitian_eigenvalues(m);
    return ev.size() ? ev(ev.size() - 1) : 0.0;
}

double hermitian_residual(const CMatrix &m) { return (m - m.adjoint()).norm(); }

CMatrix hstack(const CMatrix &a, const CMatrix &b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    CMatrix out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

CMatrix vstack(const CMatrix &a, const CMatrix &b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    CMatrix out(a.rows() + b.rows(), a.cols());
    out << a, b;
    return out;
}

CMatrix to_complex(const ExactMatrix &m) {
    CMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

ExactMatrix ExactOps::hstack(const Matrix &a, const Matrix &b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

ExactMatrix ExactOps::vstack(const Matrix &a, const Matrix &b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
    }
    return out;
}

}  // namespace frolicher
