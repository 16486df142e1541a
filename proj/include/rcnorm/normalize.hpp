#ifndef RCNORM_NORMALIZE_HPP
#define RCNORM_NORMALIZE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rcnorm/matrix.hpp"
#include "rcnorm/polish.hpp"

namespace rcnorm {

/// Which axis a full iteration standardizes first. Limits generally
/// differ between the two choices, so it is echoed into the outcome.
enum class Orientation { RowFirst, ColumnFirst };

struct NormalizeConfig {
    Orientation orientation = Orientation::ColumnFirst;
    Mode mode = Mode::Full;
    double tolerance = 1e-8;          // threshold on the squared step difference
    std::size_t max_iterations = 1000;
    bool capture_snapshots = false;
};

struct IterationRecord {
    std::size_t index;       // 1-based
    double step_diff_sq;     // squared Frobenius distance to the previous iterate
    double log_step_diff;    // ln(step_diff_sq); -inf when the step was exactly 0
    std::size_t sign_changes;
    std::optional<Matrix> snapshot;
};

enum class Status { Converged, MaxIterationsReached, Degenerate, DimensionGate };

const char* to_string(Status status);

struct NormalizationOutcome {
    Matrix final;
    Status status;
    std::size_t iterations;  // equals trace.size()
    std::vector<IterationRecord> trace;
    NormalizeConfig config_echo;
};

/// One full iteration: both polishes on the first axis, then both on the
/// second (Full mode), or a mean polish on each axis (MeanOnly mode).
Matrix step(const Matrix& m, Orientation orientation, Mode mode);

/// Iterate `step` until the squared Frobenius difference between
/// consecutive iterates drops below cfg.tolerance. Iteration 1's
/// difference is measured against the original input. A degenerate line
/// mid-run stops with status Degenerate and the trace up to the failure.
/// Throws InvalidInputError for non-finite entries; an undersized shape
/// yields status DimensionGate.
NormalizationOutcome run(const Matrix& m, const NormalizeConfig& cfg);

/// run() with the mode forced to MeanOnly. The first iteration already
/// zeroes every row and column mean, so at most two iterations are
/// recorded and the second never moves the matrix.
NormalizationOutcome run_mean_only(const Matrix& m, NormalizeConfig cfg = {});

} // namespace rcnorm

#endif
