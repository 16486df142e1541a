#ifndef RCNORM_MATRIX_HPP
#define RCNORM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rcnorm/errors.hpp"

namespace rcnorm {

/// Dense rectangular array of doubles, row-major. Immutable use is the
/// norm: polishing operations return fresh matrices.
class Matrix {
public:
    Matrix(std::size_t n_rows, std::size_t n_cols, double fill = 0.0);
    Matrix(std::size_t n_rows, std::size_t n_cols, std::vector<double> values);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }
    std::size_t size() const { return values_.size(); }

    double operator()(std::size_t i, std::size_t j) const {
        return values_[i * n_cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return values_[i * n_cols_ + j];
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool same_shape(const Matrix& other) const {
        return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_;
    }

    /// True when no entry is NaN or infinite.
    bool all_finite() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ &&
               a.values_ == b.values_;
    }

private:
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<double> values_;
};

/// Per-line means and population standard deviations along one axis.
struct RowColumnStats {
    std::vector<double> means;
    std::vector<double> std_devs;
    Axis axis;
};

/// Mean and population standard deviation (divisor = n_cols) of every row.
RowColumnStats row_stats(const Matrix& m);

/// Mean and population standard deviation (divisor = n_rows) of every column.
RowColumnStats column_stats(const Matrix& m);

/// Sum of squared entrywise differences. Throws ShapeMismatchError.
double squared_frobenius_diff(const Matrix& a, const Matrix& b);

} // namespace rcnorm

#endif
