#include "rcnorm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcnorm/diagnostics.hpp"
#include "rcnorm/polish.hpp"

namespace rcnorm {

namespace {

char sniff_delimiter(const std::string& text) {
    for (char c : text) {
        if (c == ',') return ',';
        if (c == '\t') return '\t';
        if (c == '\n') break;
    }
    return ',';
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// One physical line into fields; `line_no` and the field's starting
// column (both 1-based) feed the error messages.
std::vector<double> parse_line(const std::string& line, char delimiter,
                               std::size_t line_no) {
    std::vector<double> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = line.find(delimiter, pos);
        if (end == std::string::npos) end = line.size();
        std::size_t begin = pos;
        while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
        std::size_t last = end;
        while (last > begin && (line[last - 1] == ' ' || line[last - 1] == '\t' ||
                                line[last - 1] == '\r'))
            --last;
        if (begin == last)
            throw ParseError(line_no, begin + 1, "empty field");
        double value = 0.0;
        const char* first = line.data() + begin;
        const auto [ptr, ec] = std::from_chars(first, line.data() + last, value);
        if (ec != std::errc{} || ptr != line.data() + last)
            throw ParseError(line_no, begin + 1,
                             "not a number: '" + line.substr(begin, last - begin) + "'");
        if (!std::isfinite(value))
            throw ParseError(line_no, begin + 1, "non-finite value");
        fields.push_back(value);
        if (end == line.size()) break;
        pos = end + 1;
    }
    return fields;
}

} // namespace

Matrix parse_matrix(const std::string& text, const ReadOptions& options) {
    const char delimiter = options.delimiter.value_or(sniff_delimiter(text));

    std::vector<double> values;
    std::size_t n_cols = 0, n_rows = 0;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = options.has_header;
    while (std::getline(stream, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        std::vector<double> fields = parse_line(line, delimiter, line_no);
        if (n_rows == 0) {
            n_cols = fields.size();
        } else if (fields.size() != n_cols) {
            throw RaggedRowsError(line_no, n_cols, fields.size());
        }
        values.insert(values.end(), fields.begin(), fields.end());
        ++n_rows;
    }
    if (n_rows == 0) throw EmptyFileError("input");
    return Matrix(n_rows, n_cols, std::move(values));
}

Matrix read_matrix(const std::filesystem::path& path, const ReadOptions& options) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    if (text.empty()) throw EmptyFileError(path.string());
    try {
        return parse_matrix(text, options);
    } catch (const EmptyFileError&) {
        throw EmptyFileError(path.string());
    }
}

std::string format_matrix(const Matrix& m, const WriteOptions& options) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (options.fixed_decimals)
                std::snprintf(buf, sizeof buf, "%.*f", *options.fixed_decimals, m(i, j));
            else
                std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j > 0) out.push_back(options.delimiter);
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

void write_matrix(const Matrix& m, const std::filesystem::path& path,
                  const WriteOptions& options) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file << format_matrix(m, options);
    if (!file) throw IoError("write failed for " + path.string());
}

namespace {

const char* to_string(Orientation o) {
    return o == Orientation::RowFirst ? "row-first" : "column-first";
}

const char* to_string(Mode m) { return m == Mode::Full ? "full" : "mean-only"; }

nlohmann::json config_json(const NormalizeConfig& cfg) {
    return {{"orientation", to_string(cfg.orientation)},
            {"mode", to_string(cfg.mode)},
            {"tolerance", cfg.tolerance},
            {"max_iterations", cfg.max_iterations},
            {"capture_snapshots", cfg.capture_snapshots}};
}

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

nlohmann::json trace_report(const NormalizationOutcome& outcome, bool embed_snapshots) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : outcome.trace) {
        nlohmann::json j = {{"index", rec.index},
                            {"step_diff_sq", rec.step_diff_sq},
                            {"sign_changes", rec.sign_changes}};
        if (std::isfinite(rec.log_step_diff))
            j["log_step_diff"] = rec.log_step_diff;
        else
            j["log_step_diff"] = nullptr;
        if (embed_snapshots && rec.snapshot) j["snapshot"] = matrix_json(*rec.snapshot);
        records.push_back(std::move(j));
    }

    const RowColumnStats row = row_stats(outcome.final);
    const RowColumnStats col = column_stats(outcome.final);
    return {{"schema_version", kSchemaVersion},
            {"shape", {{"rows", outcome.final.rows()}, {"cols", outcome.final.cols()}}},
            {"config", config_json(outcome.config_echo)},
            {"status", to_string(outcome.status)},
            {"iterations", outcome.iterations},
            {"records", std::move(records)},
            {"final_row_means", row.means},
            {"final_col_means", col.means},
            {"final_row_stds", row.std_devs},
            {"final_col_stds", col.std_devs}};
}

nlohmann::json summary_report(const ExperimentSpec& spec, const SimulationSummary& summary) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "simulation_summary"},
            {"spec",
             {{"rows", spec.n_rows},
              {"cols", spec.n_cols},
              {"replicates", spec.replicates},
              {"seed", spec.seed},
              {"distribution",
               spec.distribution == EntryDistribution::UniformUnit ? "uniform" : "gaussian"},
              {"config", config_json(spec.normalize_cfg)}}},
            {"iteration_counts", summary.iteration_counts},
            {"mean_iterations", summary.mean_iterations},
            {"std_iterations", summary.std_iterations},
            {"one_step_ratios", summary.one_step_ratios},
            {"mean_ratio", summary.mean_ratio},
            {"sign_change_freq_by_iteration", summary.sign_change_freq_by_iteration},
            {"failures", summary.failures},
            {"seed_echo", summary.seed_echo}};
}

nlohmann::json sweep_report(const SweepResult& sweep, std::size_t replicates,
                            std::uint64_t seed) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : sweep.rows)
        rows.push_back({{"rows", row.n_rows},
                        {"cols", row.n_cols},
                        {"mean_iterations", row.mean_iterations},
                        {"std_iterations", row.std_iterations},
                        {"mean_ratio_pct", row.mean_ratio_pct},
                        {"std_ratio_pct", row.std_ratio_pct}});
    return {{"schema_version", kSchemaVersion},
            {"kind", "sweep"},
            {"replicates", replicates},
            {"seed", seed},
            {"total_failures", sweep.total_failures},
            {"shapes", std::move(rows)}};
}

namespace {

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file << j.dump(2) << '\n';
    if (!file) throw IoError("write failed for " + path.string());
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t consumed = 0;
        const std::uint64_t value = std::stoull(text, &consumed, 0);
        if (consumed != text.size()) throw ConfigError("bad seed: '" + text + "'");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("bad seed: '" + text + "'");
    }
}

void print_iteration_table(const std::vector<IterationRecord>& trace) {
    if (trace.empty()) return;
    std::printf("%-15s %15s %18s\n", "Iteration no.", "Difference", "log(difference)");
    for (const auto& rec : trace) {
        if (std::isfinite(rec.log_step_diff))
            std::printf("%-15zu %15.4f %18.4f\n", rec.index, rec.step_diff_sq,
                        rec.log_step_diff);
        else
            std::printf("%-15zu %15.4f %18s\n", rec.index, rec.step_diff_sq, "-inf");
    }
}

int run_normalize(const std::vector<std::string>& args) {
    CLI::App app{"Successive row/column normalization of a numeric matrix"};
    app.name("normalize");

    std::string input;
    std::string orientation = "column-first";
    std::string mode = "full";
    NormalizeConfig cfg;
    std::string out_path, trace_path;
    bool snapshots = false;
    std::string delimiter;
    bool header = false;
    int precision = -1;

    app.add_option("input", input, "matrix file (delimiter-separated numeric text)")
        ->required();
    app.add_option("--orientation", orientation, "row-first|column-first")
        ->check(CLI::IsMember({"row-first", "column-first"}))
        ->capture_default_str();
    app.add_option("--mode", mode, "full|mean-only")
        ->check(CLI::IsMember({"full", "mean-only"}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tolerance, "convergence threshold on the squared step difference")
        ->capture_default_str();
    app.add_option("--max-iters", cfg.max_iterations, "iteration cap")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the final matrix here");
    app.add_option("--trace", trace_path, "write the JSON trace report here");
    app.add_flag("--snapshots", snapshots, "embed per-iteration matrices in the trace");
    app.add_option("--delimiter", delimiter, "input field delimiter (default: sniff comma/tab)");
    app.add_flag("--header", header, "skip one header row");
    app.add_option("--precision", precision, "fixed decimals for --out (default: round-trip)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "normalize: " << e.what() << "\n";
        return 1;
    }

    cfg.orientation =
        orientation == "row-first" ? Orientation::RowFirst : Orientation::ColumnFirst;
    cfg.mode = mode == "full" ? Mode::Full : Mode::MeanOnly;
    cfg.capture_snapshots = snapshots;

    try {
        ReadOptions read_opts;
        if (!delimiter.empty()) read_opts.delimiter = delimiter[0];
        read_opts.has_header = header;
        const Matrix m = read_matrix(input, read_opts);

        const NormalizationOutcome outcome = run(m, cfg);

        print_iteration_table(outcome.trace);
        std::printf("status: %s after %zu iterations\n", to_string(outcome.status),
                    outcome.iterations);

        if (!out_path.empty()) {
            WriteOptions write_opts;
            if (precision >= 0) write_opts.fixed_decimals = precision;
            write_matrix(outcome.final, out_path, write_opts);
        }
        if (!trace_path.empty()) write_json(trace_report(outcome, snapshots), trace_path);

        switch (outcome.status) {
            case Status::Converged: return 0;
            case Status::Degenerate:
                std::cerr << "normalize: a line lost all variance mid-run\n";
                return 2;
            case Status::DimensionGate:
                std::cerr << "normalize: shape " << m.rows() << "x" << m.cols()
                          << " rejected; full polishing requires min(rows, cols) >= 3\n";
                return 3;
            case Status::MaxIterationsReached:
                std::cerr << "normalize: iteration cap " << cfg.max_iterations
                          << " reached before convergence\n";
                return 4;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "normalize: " << e.what() << "\n";
        return 1;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> parse_shapes(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const std::size_t x = item.find('x');
        if (x == std::string::npos || x == 0 || x + 1 == item.size())
            throw ConfigError("bad shape '" + item + "', expected ROWSxCOLS");
        try {
            shapes.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
        } catch (const std::exception&) {
            throw ConfigError("bad shape '" + item + "', expected ROWSxCOLS");
        }
    }
    if (shapes.empty()) throw ConfigError("no shapes given");
    return shapes;
}

void print_sweep_grid(const SweepResult& sweep) {
    auto print_row = [&](const char* label, auto get) {
        std::printf("%-13s", label);
        for (const auto& row : sweep.rows) std::printf(" %9s", get(row).c_str());
        std::printf("\n");
    };
    auto fmt_size = [](std::size_t v) { return std::to_string(v); };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };
    print_row("rows", [&](const SweepRow& r) { return fmt_size(r.n_rows); });
    print_row("cols", [&](const SweepRow& r) { return fmt_size(r.n_cols); });
    print_row("mean(count)", [&](const SweepRow& r) { return fmt(r.mean_iterations); });
    print_row("std(count)", [&](const SweepRow& r) { return fmt(r.std_iterations); });
    print_row("mean(ratio%)", [&](const SweepRow& r) { return fmt(r.mean_ratio_pct); });
    print_row("std(ratio%)", [&](const SweepRow& r) { return fmt(r.std_ratio_pct); });
}

int run_simulate(const std::vector<std::string>& args) {
    CLI::App app{"Seeded Monte-Carlo experiments over random matrices"};
    app.name("simulate");

    std::size_t rows = 0, cols = 0, reps = 1000;
    std::string seed_text = "0";
    std::string dist = "uniform";
    std::string report_path, shapes_text;
    bool two_by_two = false;
    std::string orientation = "column-first";
    NormalizeConfig cfg;

    app.add_option("--rows", rows, "matrix rows");
    app.add_option("--cols", cols, "matrix columns");
    app.add_option("--reps", reps, "replicates per experiment")->capture_default_str();
    app.add_option("--seed", seed_text, "64-bit seed, decimal or 0x-prefixed hex")
        ->capture_default_str();
    app.add_option("--dist", dist, "uniform|gaussian")
        ->check(CLI::IsMember({"uniform", "gaussian"}))
        ->capture_default_str();
    app.add_option("--report", report_path, "write the JSON report here");
    app.add_option("--shapes", shapes_text,
                   "comma-separated ROWSxCOLS list; runs one experiment per shape");
    app.add_flag("--two-by-two-frequency", two_by_two,
                 "estimate how often a random 2x2 degenerates");
    app.add_option("--orientation", orientation, "row-first|column-first")
        ->check(CLI::IsMember({"row-first", "column-first"}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tolerance, "convergence threshold")->capture_default_str();
    app.add_option("--max-iters", cfg.max_iterations, "iteration cap")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return 1;
    }

    cfg.orientation =
        orientation == "row-first" ? Orientation::RowFirst : Orientation::ColumnFirst;

    try {
        const std::uint64_t seed = parse_seed(seed_text);

        if (two_by_two) {
            const double freq = degeneracy_frequency_2x2(reps, seed);
            std::printf("2x2 degeneracy frequency over %zu replicates: %.5f\n", reps, freq);
            if (!report_path.empty())
                write_json({{"schema_version", kSchemaVersion},
                            {"kind", "two_by_two_frequency"},
                            {"replicates", reps},
                            {"seed", seed},
                            {"frequency", freq}},
                           report_path);
            return 0;
        }

        if (!shapes_text.empty()) {
            const auto shapes = parse_shapes(shapes_text);
            const SweepResult sweep = run_sweep(shapes, reps, seed, cfg);
            print_sweep_grid(sweep);
            if (!report_path.empty()) write_json(sweep_report(sweep, reps, seed), report_path);
            return sweep.total_failures > 0 ? 5 : 0;
        }

        if (rows == 0 || cols == 0)
            throw ConfigError("give --rows and --cols, or --shapes, or --two-by-two-frequency");

        ExperimentSpec spec;
        spec.n_rows = rows;
        spec.n_cols = cols;
        spec.replicates = reps;
        spec.seed = seed;
        spec.distribution = dist == "uniform" ? EntryDistribution::UniformUnit
                                              : EntryDistribution::StandardGaussian;
        spec.normalize_cfg = cfg;

        const SimulationSummary summary = run_experiment(spec);
        std::printf("replicates    %zu\n", spec.replicates);
        std::printf("converged     %zu\n", summary.iteration_counts.size());
        std::printf("failures      %zu\n", summary.failures);
        std::printf("mean(count)   %.4f\n", summary.mean_iterations);
        std::printf("std(count)    %.4f\n", summary.std_iterations);
        std::printf("mean(ratio%%)  %.4f\n", 100.0 * summary.mean_ratio);
        if (!summary.sign_change_freq_by_iteration.empty()) {
            std::printf("sign-change relative frequency by iteration:\n");
            for (std::size_t b = 0; b < summary.sign_change_freq_by_iteration.size(); ++b) {
                const char* label = b + 1 < kSignChangeBuckets ? "" : "+";
                std::printf("  %zu%s: %.2f%%\n", b + 1, label,
                            100.0 * summary.sign_change_freq_by_iteration[b]);
            }
        }
        if (!report_path.empty()) write_json(summary_report(spec, summary), report_path);
        return summary.failures > 0 ? 5 : 0;
    } catch (const Error& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int cli_normalize(const std::vector<std::string>& args) { return run_normalize(args); }

int cli_simulate(const std::vector<std::string>& args) { return run_simulate(args); }

} // namespace rcnorm
