#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qwalk {

/// Dense row-major matrix of doubles. Sized for the networks this library
/// targets (N up to ~1000); no sparse storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    bool is_square() const { return rows_ == cols_; }

    /// Largest absolute asymmetry max_ij |M_ij - M_ji|; 0 for non-square input
    /// is never reported (call only on square matrices).
    double max_asymmetry() const {
        double worst = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        return worst;
    }

    double max_abs() const {
        double worst = 0.0;
        for (double v : data_) worst = std::max(worst, std::abs(v));
        return worst;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

    bool operator==(const Matrix& other) const = default;

private:
    int rows_, cols_;
    std::vector<double> data_;
};

} // namespace qwalk
