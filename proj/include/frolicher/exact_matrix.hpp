#pragma once

#include "frolicher/gaussian_rational.hpp"

#include <vector>

namespace frolicher {

// Dense row-major matrix over Q(i).  Sizes here are at most 4^4, so no
// attempt is made at anything cleverer than skipping zero entries.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static ExactMatrix Zero(int rows, int cols) { return {rows, cols}; }
    static ExactMatrix Identity(int size);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational &operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const GaussianRational &operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    ExactMatrix block(int r0, int c0, int nr, int nc) const;
    ExactMatrix adjoint() const;  // conjugate transpose
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator*(const GaussianRational &s, const ExactMatrix &a);
    friend bool operator==(const ExactMatrix &a, const ExactMatrix &b);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianRational> data_;
};

// Reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(ExactMatrix &m);
int exact_rank(ExactMatrix m);
// Columns form a basis of {x : m x = 0}.
ExactMatrix exact_null_space(ExactMatrix m);

}  // namespace frolicher
