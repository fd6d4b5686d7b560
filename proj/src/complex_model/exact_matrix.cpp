#include "frolicher/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace frolicher {

ExactMatrix ExactMatrix::Identity(int size) {
    ExactMatrix m(size, size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::block(int r0, int c0, int nr, int nc) const {
    ExactMatrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix product: shape mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int l = 0; l < a.cols_; ++l) {
            const auto &x = a(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const auto &y = b(l, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ExactMatrix sum: shape mismatch");
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ExactMatrix difference: shape mismatch");
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

ExactMatrix operator*(const GaussianRational &s, const ExactMatrix &a) {
    ExactMatrix out = a;
    for (auto &x : out.data_)
        if (!x.is_zero()) x *= s;
    return out;
}

bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<int> row_reduce(ExactMatrix &m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        GaussianRational inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            GaussianRational f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int exact_rank(ExactMatrix m) { return static_cast<int>(row_reduce(m).size()); }

ExactMatrix exact_null_space(ExactMatrix m) {
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    ExactMatrix basis(m.cols(), m.cols() - static_cast<int>(pivots.size()));
    int out = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = -m(int(r), free);
        ++out;
    }
    return basis;
}

}  // namespace frolicher
