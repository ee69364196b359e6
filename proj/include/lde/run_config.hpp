#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lde::cli {

enum class Command {
    SweepLength,
    SweepCouplings,
    Gap,
    Disorder,
    BoseHubbard,
    Teleport,
    Tc,
};

enum class OutputFormat { Csv, Json };

/// "lo:hi:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);

struct RunConfig {
    Command command = Command::SweepLength;

    // chain sweeps / disorder
    std::string pattern = "uniform";
    std::vector<int> n_list;
    double temperature = 0.0;

    // sweep-couplings
    std::vector<double> lambda_grid;
    std::vector<double> mu_grid;

    // disorder
    double chi_bar = 0.0;
    int samples = 1;
    std::uint64_t seed = 0;

    // bose-hubbard
    std::string lattice = "endprobe";  // endprobe | superlattice
    int bh_sites = 10;
    int bh_bosons = 4;
    std::optional<int> bh_cap;
    double eps = 12.0;
    std::vector<double> u_grid;

    // teleport
    double lambda = 0.5;
    double mu = 4.0;
    double nu = 50.0;
    int alpha_points = 21;
    int phase_points = 16;
    double t_star = -1.0;

    // tc
    int grid_lambda = 40;
    int grid_mu = 40;

    // output
    std::string output_path;  // empty -> derived from command under output_dir
    OutputFormat format = OutputFormat::Csv;
    int threads = 0;  // 0 -> hardware concurrency
};

/// Tabular result with the config line echoed into the emitted file.
struct Table {
    std::string config_line;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Execute the command and return the table; throws std::invalid_argument
/// for config errors and std::runtime_error for numerical failures.
Table run(const RunConfig& config);

/// Serialize with 17 significant digits; CSV gets a '#' config comment and
/// a header row, JSON mirrors the same fields.
void emit(const Table& table, OutputFormat format, std::ostream& out);

/// Full pipeline: run, then write to the configured path (or stdout when
/// the path is "-").  Returns the process exit code (0 ok, 1 config error,
/// 2 numerical failure) and logs a short summary to `log`.
int run_and_emit(const RunConfig& config, std::ostream& log);

std::string default_output_name(Command command, OutputFormat format);

}  // namespace lde::cli
