#pragma once

#include <cstddef>
#include <vector>

#include "hdbf/errors.hpp"

namespace hdbf {

// Dense row-major matrix of doubles. Row pointers are contiguous, which is
// what the kernel layer wants.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// tr(A) for a square matrix.
inline double trace(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("trace: matrix not square");
    double t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

// Relative symmetry check; entries further apart than tol * scale are an
// error, smaller asymmetries are averaged away in place.
void symmetrize(Matrix& a, double tol = 1e-10);

}  // namespace hdbf
