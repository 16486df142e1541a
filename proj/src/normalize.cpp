#include "rcnorm/normalize.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "rcnorm/diagnostics.hpp"

namespace rcnorm {

const char* to_string(Status status) {
    switch (status) {
        case Status::Converged: return "converged";
        case Status::MaxIterationsReached: return "max_iterations_reached";
        case Status::Degenerate: return "degenerate";
        case Status::DimensionGate: return "dimension_gate";
    }
    return "unknown";
}

Matrix step(const Matrix& m, Orientation orientation, Mode mode) {
    const Axis first = orientation == Orientation::RowFirst ? Axis::Rows : Axis::Columns;
    const Axis second = first == Axis::Rows ? Axis::Columns : Axis::Rows;
    if (mode == Mode::MeanOnly)
        return mean_polish(mean_polish(m, first), second);
    return standardize(standardize(m, first), second);
}

NormalizationOutcome run(const Matrix& m, const NormalizeConfig& cfg) {
    if (!m.all_finite())
        throw InvalidInputError("input matrix contains NaN or infinite entries");
    if (cfg.tolerance <= 0.0)
        throw ConfigError("tolerance must be positive");
    if (cfg.max_iterations < 1)
        throw ConfigError("max_iterations must be at least 1");

    try {
        check_dimensions(m, cfg.mode);
    } catch (const DimensionGateError&) {
        return {m, Status::DimensionGate, 0, {}, cfg};
    }

    Matrix current = m;
    std::vector<IterationRecord> trace;
    Status status = Status::MaxIterationsReached;

    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        try {
            Matrix next = step(current, cfg.orientation, cfg.mode);
            IterationRecord rec;
            rec.index = it;
            rec.step_diff_sq = squared_frobenius_diff(next, current);
            rec.log_step_diff = rec.step_diff_sq > 0.0
                                    ? std::log(rec.step_diff_sq)
                                    : -std::numeric_limits<double>::infinity();
            rec.sign_changes = sign_changes(current, next);
            if (cfg.capture_snapshots) rec.snapshot = next;
            trace.push_back(std::move(rec));
            current = std::move(next);
        } catch (const DegenerateAxisError&) {
            status = Status::Degenerate;
            break;
        }
        if (trace.back().step_diff_sq < cfg.tolerance) {
            status = Status::Converged;
            break;
        }
    }

    const std::size_t iterations = trace.size();
    return {std::move(current), status, iterations, std::move(trace), cfg};
}

NormalizationOutcome run_mean_only(const Matrix& m, NormalizeConfig cfg) {
    cfg.mode = Mode::MeanOnly;
    return run(m, cfg);
}

} // namespace rcnorm
