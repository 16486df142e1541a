#include "rcnorm/polish.hpp"

#include <algorithm>
#include <cmath>

namespace rcnorm {

namespace {

// Degeneracy threshold for one line: relative to the line's largest
// magnitude, floored at 1 so all-zero lines are caught too.
double degeneracy_threshold(const Matrix& m, Axis axis, std::size_t index) {
    double max_abs = 0.0;
    if (axis == Axis::Rows) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            max_abs = std::max(max_abs, std::abs(m(index, j)));
    } else {
        for (std::size_t i = 0; i < m.rows(); ++i)
            max_abs = std::max(max_abs, std::abs(m(i, index)));
    }
    return kDegeneracyFloor * std::max(1.0, max_abs);
}

} // namespace

Matrix mean_polish(const Matrix& m, Axis axis) {
    const RowColumnStats stats = axis == Axis::Rows ? row_stats(m) : column_stats(m);
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j) - stats.means[axis == Axis::Rows ? i : j];
    return out;
}

Matrix std_polish(const Matrix& m, Axis axis) {
    const RowColumnStats stats = axis == Axis::Rows ? row_stats(m) : column_stats(m);
    for (std::size_t l = 0; l < stats.std_devs.size(); ++l)
        if (stats.std_devs[l] <= degeneracy_threshold(m, axis, l))
            throw DegenerateAxisError(axis, l, stats.std_devs[l]);
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j) / stats.std_devs[axis == Axis::Rows ? i : j];
    return out;
}

Matrix standardize(const Matrix& m, Axis axis) {
    return std_polish(mean_polish(m, axis), axis);
}

Matrix apply(const Matrix& m, PolishStep step) {
    switch (step.kind) {
        case PolishKind::MeanPolish: return mean_polish(m, step.axis);
        case PolishKind::StdPolish: return std_polish(m, step.axis);
        case PolishKind::Standardize: break;
    }
    return standardize(m, step.axis);
}

void check_dimensions(const Matrix& m, Mode mode) {
    const std::size_t required = mode == Mode::Full ? 3 : 1;
    if (std::min(m.rows(), m.cols()) < required)
        throw DimensionGateError(required, m.rows(), m.cols());
}

} // namespace rcnorm
