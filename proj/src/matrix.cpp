#include "rcnorm/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rcnorm {

Matrix::Matrix(std::size_t n_rows, std::size_t n_cols, double fill)
    : n_rows_(n_rows), n_cols_(n_cols), values_(n_rows * n_cols, fill) {
    if (n_rows == 0 || n_cols == 0)
        throw InvalidInputError("matrix dimensions must be at least 1x1");
}

Matrix::Matrix(std::size_t n_rows, std::size_t n_cols, std::vector<double> values)
    : n_rows_(n_rows), n_cols_(n_cols), values_(std::move(values)) {
    if (n_rows == 0 || n_cols == 0)
        throw InvalidInputError("matrix dimensions must be at least 1x1");
    if (values_.size() != n_rows * n_cols)
        throw InvalidInputError("value count does not match matrix shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_rows_(rows.size()), n_cols_(rows.begin() == rows.end() ? 0 : rows.begin()->size()) {
    if (n_rows_ == 0 || n_cols_ == 0)
        throw InvalidInputError("matrix dimensions must be at least 1x1");
    values_.reserve(n_rows_ * n_cols_);
    for (const auto& row : rows) {
        if (row.size() != n_cols_)
            throw InvalidInputError("rows of unequal length in matrix literal");
        values_.insert(values_.end(), row.begin(), row.end());
    }
}

bool Matrix::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

RowColumnStats row_stats(const Matrix& m) {
    const std::size_t n = m.rows(), k = m.cols();
    RowColumnStats stats{std::vector<double>(n), std::vector<double>(n), Axis::Rows};
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += m(i, j);
        const double mean = sum / static_cast<double>(k);
        double ss = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double d = m(i, j) - mean;
            ss += d * d;
        }
        stats.means[i] = mean;
        stats.std_devs[i] = std::sqrt(ss / static_cast<double>(k));
    }
    return stats;
}

RowColumnStats column_stats(const Matrix& m) {
    const std::size_t n = m.rows(), k = m.cols();
    RowColumnStats stats{std::vector<double>(k, 0.0), std::vector<double>(k, 0.0),
                         Axis::Columns};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) stats.means[j] += m(i, j);
    for (std::size_t j = 0; j < k; ++j) stats.means[j] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double d = m(i, j) - stats.means[j];
            stats.std_devs[j] += d * d;
        }
    for (std::size_t j = 0; j < k; ++j)
        stats.std_devs[j] = std::sqrt(stats.std_devs[j] / static_cast<double>(n));
    return stats;
}

double squared_frobenius_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw ShapeMismatchError(a.rows(), a.cols(), b.rows(), b.cols());
    double sum = 0.0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t i = 0; i < va.size(); ++i) {
        const double d = va[i] - vb[i];
        sum += d * d;
    }
    return sum;
}

} // namespace rcnorm
