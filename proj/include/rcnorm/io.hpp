#ifndef RCNORM_IO_HPP
#define RCNORM_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcnorm/matrix.hpp"
#include "rcnorm/normalize.hpp"
#include "rcnorm/simulate.hpp"

namespace rcnorm {

inline constexpr const char* kSchemaVersion = "1";

struct ReadOptions {
    std::optional<char> delimiter;  // unset: sniff comma, then tab
    bool has_header = false;
};

struct WriteOptions {
    std::optional<int> fixed_decimals;  // unset: 17 significant digits
    char delimiter = ',';
};

/// Parse delimiter-separated numeric text (LF or CRLF) into a Matrix.
/// Throws ParseError, RaggedRowsError, EmptyFileError, IoError.
Matrix read_matrix(const std::filesystem::path& path, const ReadOptions& options = {});

/// Same parser over an in-memory string (the file reader delegates here).
Matrix parse_matrix(const std::string& text, const ReadOptions& options = {});

void write_matrix(const Matrix& m, const std::filesystem::path& path,
                  const WriteOptions& options = {});

std::string format_matrix(const Matrix& m, const WriteOptions& options = {});

/// JSON trace of one normalization run: config echo, per-iteration
/// records and the final line statistics. log_step_diff of an exactly
/// zero step serializes as null.
nlohmann::json trace_report(const NormalizationOutcome& outcome,
                            bool embed_snapshots = false);

nlohmann::json summary_report(const ExperimentSpec& spec,
                              const SimulationSummary& summary);

nlohmann::json sweep_report(const SweepResult& sweep, std::size_t replicates,
                            std::uint64_t seed);

/// `normalize` command. Exit codes: 0 converged, 1 IO/parse/config error,
/// 2 degenerate, 3 dimension gate, 4 iteration cap reached.
int cli_normalize(const std::vector<std::string>& args);

/// `simulate` command. Exit codes: 0 ok, 1 config error, 5 when any
/// replicate failed to converge.
int cli_simulate(const std::vector<std::string>& args);

} // namespace rcnorm

#endif
