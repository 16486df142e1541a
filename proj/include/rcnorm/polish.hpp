#ifndef RCNORM_POLISH_HPP
#define RCNORM_POLISH_HPP

#include "rcnorm/matrix.hpp"

namespace rcnorm {

enum class PolishKind { MeanPolish, StdPolish, Standardize };

struct PolishStep {
    Axis axis;
    PolishKind kind;
};

enum class Mode { Full, MeanOnly };

// A line whose population std falls below
//   kDegeneracyFloor * max(1, max |entry of the line|)
// is treated as constant and refused.
inline constexpr double kDegeneracyFloor = 1e-13;

/// Subtract from each entry the mean of its line along the given axis.
Matrix mean_polish(const Matrix& m, Axis axis);

/// Divide each entry by the population std of its line along the given axis.
/// Throws DegenerateAxisError naming the first line at or below the floor.
Matrix std_polish(const Matrix& m, Axis axis);

/// Mean polish followed by std polish on the same axis; afterwards every
/// line along the axis has mean 0 and population std 1.
Matrix standardize(const Matrix& m, Axis axis);

Matrix apply(const Matrix& m, PolishStep step);

/// Full mode requires min(rows, cols) >= 3; mean-only accepts any matrix.
/// Throws DimensionGateError.
void check_dimensions(const Matrix& m, Mode mode);

} // namespace rcnorm

#endif
