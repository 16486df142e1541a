#ifndef RCNORM_DIAGNOSTICS_HPP
#define RCNORM_DIAGNOSTICS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rcnorm/matrix.hpp"

namespace rcnorm {

struct NormalizationOutcome;

struct RunDiagnostics {
    double one_step_ratio = 0.0;  // squared-distance convention, as reported
    std::vector<std::size_t> sign_changes_per_iteration;
    std::vector<double> sign_change_relative_freq;  // empty when no sign change occurred
    std::size_t sort_stable_from = 1;
};

/// ||x1 - xf||_F / ||x0 - xf||_F with plain (unsquared) Frobenius norms;
/// 0 when the denominator is 0.
double one_step_ratio(const Matrix& x0, const Matrix& x1, const Matrix& xf);

/// Same ratio with squared distances. This is the convention behind the
/// reported one-step percentages (~2.8% at 10x10), so it is what the
/// simulation summaries carry.
double one_step_ratio_squared(const Matrix& x0, const Matrix& x1, const Matrix& xf);

/// Number of positions whose strict sign (-, 0, +) differs; exact 0.0 is
/// its own category.
std::size_t sign_changes(const Matrix& prev, const Matrix& next);

/// Smallest iteration index s such that from s on, every row and column
/// of each snapshot sorts in the same strict order as in the final
/// snapshot. Throws TieDetectedError when the final matrix has two equal
/// entries in some line.
std::size_t sort_stability(std::span<const Matrix> snapshots);

/// Overload pulling the snapshots out of a run's trace.
/// Throws MissingSnapshotsError when the run did not capture them.
std::size_t sort_stability(const NormalizationOutcome& outcome);

/// The printed band-area heuristic sqrt(2/e) * 2*pi*e / (k - 3) for the
/// sphere in k-space orthogonal to the equiangular line. Requires k >= 4.
double sphere_band_area(std::int64_t k);

/// Bundle of post-hoc diagnostics for a snapshot-capturing run.
RunDiagnostics analyze(const Matrix& x0, const NormalizationOutcome& outcome);

} // namespace rcnorm

#endif
