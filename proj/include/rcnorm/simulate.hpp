#ifndef RCNORM_SIMULATE_HPP
#define RCNORM_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rcnorm/matrix.hpp"
#include "rcnorm/normalize.hpp"

namespace rcnorm {

enum class EntryDistribution { UniformUnit, StandardGaussian };

struct ExperimentSpec {
    std::size_t n_rows = 10;
    std::size_t n_cols = 10;
    std::size_t replicates = 1000;
    std::uint64_t seed = 0;
    EntryDistribution distribution = EntryDistribution::UniformUnit;
    NormalizeConfig normalize_cfg;
};

// Sign-change frequencies are bucketed per iteration 1..9 plus a
// "10 and above" tail.
inline constexpr std::size_t kSignChangeBuckets = 10;

struct SimulationSummary {
    std::vector<std::size_t> iteration_counts;  // converged replicates only
    double mean_iterations = 0.0;
    double std_iterations = 0.0;                // sample (n-1) convention
    std::vector<double> one_step_ratios;        // squared-distance ratios
    double mean_ratio = 0.0;
    std::vector<double> sign_change_freq_by_iteration;  // kSignChangeBuckets entries
    std::size_t failures = 0;
    std::uint64_t seed_echo = 0;
};

struct SweepRow {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    double mean_iterations = 0.0;
    double std_iterations = 0.0;
    double mean_ratio_pct = 0.0;
    double std_ratio_pct = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t total_failures = 0;
};

/// splitmix64 of Sebastiano Vigna; the documented sub-seed mixer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the mt19937_64 stream for one replicate:
/// splitmix64(splitmix64(seed) + replicate_index). A replicate's matrix
/// depends only on (seed, index), never on execution order.
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate_index);

/// The replicate's input matrix, filled row-major from its own stream.
/// Uniform entries lie in [0,1); gaussians come from Box-Muller on the
/// same stream, so results are identical across platforms and threads.
Matrix generate(const ExperimentSpec& spec, std::size_t replicate_index);

/// Normalize every replicate and aggregate iteration counts, one-step
/// ratios and sign-change frequencies. Non-converged or degenerate
/// replicates are counted as failures and excluded from the means.
/// Throws ConfigError for an invalid spec.
SimulationSummary run_experiment(const ExperimentSpec& spec);

/// One experiment per (rows, cols) shape, each with a sub-seed derived
/// from `seed` and the shape's position in the list.
SweepResult run_sweep(std::span<const std::pair<std::size_t, std::size_t>> shapes,
                      std::size_t replicates, std::uint64_t seed,
                      const NormalizeConfig& cfg = {});

/// Fraction of uniform 2x2 matrices whose row standardization leaves a
/// column with (numerically) zero variance. Tends to 1/2.
double degeneracy_frequency_2x2(std::size_t replicates, std::uint64_t seed);

} // namespace rcnorm

#endif
