#include "rcnorm/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rcnorm/diagnostics.hpp"
#include "rcnorm/polish.hpp"

namespace rcnorm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate_index) {
    return splitmix64(splitmix64(seed) + replicate_index);
}

namespace {

// Draws with portable mappings from the raw 64-bit stream, so the same
// (seed, index) yields the same matrix on every standard library.
class EntryStream {
public:
    explicit EntryStream(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {  // [0, 1), 53-bit resolution
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {  // Box-Muller, pairs cached
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void validate(const ExperimentSpec& spec) {
    if (spec.replicates < 1)
        throw ConfigError("replicates must be at least 1");
    if (spec.n_rows < 1 || spec.n_cols < 1)
        throw ConfigError("matrix dimensions must be at least 1x1");
    const std::size_t required = spec.normalize_cfg.mode == Mode::Full ? 3 : 1;
    if (std::min(spec.n_rows, spec.n_cols) < required)
        throw ConfigError("shape " + std::to_string(spec.n_rows) + "x" +
                          std::to_string(spec.n_cols) +
                          " fails the dimension gate: min(rows, cols) must be >= " +
                          std::to_string(required));
    if (spec.normalize_cfg.tolerance <= 0.0)
        throw ConfigError("tolerance must be positive");
    if (spec.normalize_cfg.max_iterations < 1)
        throw ConfigError("max_iterations must be at least 1");
}

double sample_mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mean = sample_mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace

Matrix generate(const ExperimentSpec& spec, std::size_t replicate_index) {
    EntryStream stream(replicate_seed(spec.seed, replicate_index));
    Matrix m(spec.n_rows, spec.n_cols);
    for (double& v : m.values())
        v = spec.distribution == EntryDistribution::UniformUnit ? stream.uniform01()
                                                                : stream.gaussian();
    return m;
}

SimulationSummary run_experiment(const ExperimentSpec& spec) {
    validate(spec);

    SimulationSummary summary;
    summary.seed_echo = spec.seed;

    NormalizeConfig cfg = spec.normalize_cfg;
    cfg.capture_snapshots = false;

    std::vector<double> sign_freq_sum(kSignChangeBuckets, 0.0);
    std::size_t sign_freq_runs = 0;

    for (std::size_t r = 0; r < spec.replicates; ++r) {
        const Matrix x0 = generate(spec, r);
        const NormalizationOutcome outcome = run(x0, cfg);
        if (outcome.status != Status::Converged) {
            ++summary.failures;
            continue;
        }
        summary.iteration_counts.push_back(outcome.iterations);

        const Matrix x1 = step(x0, cfg.orientation, cfg.mode);
        summary.one_step_ratios.push_back(one_step_ratio_squared(x0, x1, outcome.final));

        std::size_t total_changes = 0;
        for (const auto& rec : outcome.trace) total_changes += rec.sign_changes;
        if (total_changes > 0) {
            for (const auto& rec : outcome.trace) {
                const std::size_t bucket = std::min(rec.index, kSignChangeBuckets) - 1;
                sign_freq_sum[bucket] += static_cast<double>(rec.sign_changes) /
                                         static_cast<double>(total_changes);
            }
            ++sign_freq_runs;
        }
    }

    if (sign_freq_runs > 0) {
        summary.sign_change_freq_by_iteration.assign(kSignChangeBuckets, 0.0);
        for (std::size_t b = 0; b < kSignChangeBuckets; ++b)
            summary.sign_change_freq_by_iteration[b] =
                sign_freq_sum[b] / static_cast<double>(sign_freq_runs);
    }

    std::vector<double> counts(summary.iteration_counts.begin(),
                               summary.iteration_counts.end());
    summary.mean_iterations = sample_mean(counts);
    summary.std_iterations = sample_std(counts);
    summary.mean_ratio = sample_mean(summary.one_step_ratios);
    return summary;
}

SweepResult run_sweep(std::span<const std::pair<std::size_t, std::size_t>> shapes,
                      std::size_t replicates, std::uint64_t seed,
                      const NormalizeConfig& cfg) {
    SweepResult result;
    result.rows.reserve(shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        ExperimentSpec spec;
        spec.n_rows = shapes[s].first;
        spec.n_cols = shapes[s].second;
        spec.replicates = replicates;
        spec.seed = splitmix64(seed) + s;
        spec.normalize_cfg = cfg;
        const SimulationSummary summary = run_experiment(spec);

        SweepRow row;
        row.n_rows = spec.n_rows;
        row.n_cols = spec.n_cols;
        row.mean_iterations = summary.mean_iterations;
        row.std_iterations = summary.std_iterations;
        row.mean_ratio_pct = 100.0 * summary.mean_ratio;
        row.std_ratio_pct = 100.0 * sample_std(summary.one_step_ratios);
        result.rows.push_back(row);
        result.total_failures += summary.failures;
    }
    return result;
}

double degeneracy_frequency_2x2(std::size_t replicates, std::uint64_t seed) {
    if (replicates < 1) throw ConfigError("replicates must be at least 1");
    ExperimentSpec spec;
    spec.n_rows = 2;
    spec.n_cols = 2;
    spec.replicates = replicates;
    spec.seed = seed;

    std::size_t degenerate = 0;
    for (std::size_t r = 0; r < replicates; ++r) {
        const Matrix x0 = generate(spec, r);
        try {
            standardize(standardize(x0, Axis::Rows), Axis::Columns);
        } catch (const DegenerateAxisError&) {
            ++degenerate;
        }
    }
    return static_cast<double>(degenerate) / static_cast<double>(replicates);
}

} // namespace rcnorm
