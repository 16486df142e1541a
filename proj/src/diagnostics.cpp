#include "rcnorm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rcnorm/normalize.hpp"

namespace rcnorm {

double one_step_ratio(const Matrix& x0, const Matrix& x1, const Matrix& xf) {
    const double denom = squared_frobenius_diff(x0, xf);
    if (denom == 0.0) return 0.0;
    return std::sqrt(squared_frobenius_diff(x1, xf)) / std::sqrt(denom);
}

double one_step_ratio_squared(const Matrix& x0, const Matrix& x1, const Matrix& xf) {
    const double denom = squared_frobenius_diff(x0, xf);
    if (denom == 0.0) return 0.0;
    return squared_frobenius_diff(x1, xf) / denom;
}

namespace {

int strict_sign(double v) {
    if (v == 0.0) return 0;
    return v < 0.0 ? -1 : 1;
}

// Index permutation sorting one line ascending; ties broken by position
// (ties only ever matter in intermediate iterates, where the comparison
// below still behaves deterministically).
std::vector<std::size_t> line_order(const Matrix& m, Axis axis, std::size_t index) {
    const std::size_t len = axis == Axis::Rows ? m.cols() : m.rows();
    std::vector<std::size_t> order(len);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto at = [&](std::size_t p) {
        return axis == Axis::Rows ? m(index, p) : m(p, index);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (at(a) != at(b)) return at(a) < at(b);
        return a < b;
    });
    return order;
}

std::vector<std::vector<std::size_t>> all_orderings(const Matrix& m) {
    std::vector<std::vector<std::size_t>> orders;
    orders.reserve(m.rows() + m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        orders.push_back(line_order(m, Axis::Rows, i));
    for (std::size_t j = 0; j < m.cols(); ++j)
        orders.push_back(line_order(m, Axis::Columns, j));
    return orders;
}

void require_strict_sorts(const Matrix& m) {
    std::vector<double> line;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        line.clear();
        for (std::size_t j = 0; j < m.cols(); ++j) line.push_back(m(i, j));
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end())
            throw TieDetectedError(Axis::Rows, i);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        line.clear();
        for (std::size_t i = 0; i < m.rows(); ++i) line.push_back(m(i, j));
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end())
            throw TieDetectedError(Axis::Columns, j);
    }
}

} // namespace

std::size_t sign_changes(const Matrix& prev, const Matrix& next) {
    if (!prev.same_shape(next))
        throw ShapeMismatchError(prev.rows(), prev.cols(), next.rows(), next.cols());
    std::size_t count = 0;
    const auto& a = prev.values();
    const auto& b = next.values();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (strict_sign(a[i]) != strict_sign(b[i])) ++count;
    return count;
}

std::size_t sort_stability(std::span<const Matrix> snapshots) {
    if (snapshots.empty()) throw MissingSnapshotsError();
    const Matrix& final = snapshots.back();
    require_strict_sorts(final);
    const auto final_orders = all_orderings(final);

    std::size_t stable_from = snapshots.size() + 1;
    for (std::size_t s = snapshots.size(); s >= 1; --s) {
        if (all_orderings(snapshots[s - 1]) != final_orders) break;
        stable_from = s;
    }
    return stable_from;
}

std::size_t sort_stability(const NormalizationOutcome& outcome) {
    std::vector<Matrix> snapshots;
    snapshots.reserve(outcome.trace.size());
    for (const auto& rec : outcome.trace) {
        if (!rec.snapshot) throw MissingSnapshotsError();
        snapshots.push_back(*rec.snapshot);
    }
    return sort_stability(snapshots);
}

double sphere_band_area(std::int64_t k) {
    if (k <= 3)
        throw DomainError("sphere_band_area requires k >= 4, got " + std::to_string(k));
    const double e = std::numbers::e;
    return std::sqrt(2.0 / e) * (2.0 * std::numbers::pi * e / static_cast<double>(k - 3));
}

RunDiagnostics analyze(const Matrix& x0, const NormalizationOutcome& outcome) {
    if (outcome.trace.empty() || !outcome.trace.front().snapshot)
        throw MissingSnapshotsError();

    RunDiagnostics diag;
    diag.one_step_ratio =
        one_step_ratio_squared(x0, *outcome.trace.front().snapshot, outcome.final);

    diag.sign_changes_per_iteration.reserve(outcome.trace.size());
    std::size_t total = 0;
    for (const auto& rec : outcome.trace) {
        diag.sign_changes_per_iteration.push_back(rec.sign_changes);
        total += rec.sign_changes;
    }
    if (total > 0) {
        diag.sign_change_relative_freq.reserve(outcome.trace.size());
        for (std::size_t c : diag.sign_changes_per_iteration)
            diag.sign_change_relative_freq.push_back(static_cast<double>(c) /
                                                     static_cast<double>(total));
    }

    diag.sort_stable_from = sort_stability(outcome);
    return diag;
}

} // namespace rcnorm
