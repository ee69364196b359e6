#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "lde/run_config.hpp"
#include "lde/version.hpp"

namespace {

using lde::cli::Command;
using lde::cli::RunConfig;

struct GridOptions {
    std::string n;
    std::string lambda_grid;
    std::string mu_grid;
    std::string u_grid;
};

void add_output_options(CLI::App* cmd, RunConfig& config, std::string& format) {
    cmd->add_option("-o,--output", config.output_path,
                    "output file ('-' for stdout; default <command>.<ext> under "
                    "$LDESIM_OUTPUT_DIR or the working directory)");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", config.threads, "worker threads (default: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ldesim: end-to-end entanglement in open XX chains, Bose-Hubbard "
                 "lattices and coupled-cavity arrays"};
    app.set_version_flag("--version", std::string("ldesim ") + lde::kVersion);
    app.set_config("--config", "", "read options from an INI/TOML config file");
    app.require_subcommand(1);

    RunConfig config;
    GridOptions grids;
    std::string format = "csv";

    auto* sweep = app.add_subcommand("sweep-length",
                                     "concurrence/fidelity/gap vs chain length");
    sweep->add_option("--pattern", config.pattern, "coupling pattern spec")->required();
    sweep->add_option("--n", grids.n, "chain lengths lo:hi:step or list")->required();
    sweep->add_option("--temp", config.temperature, "temperature in units of J");
    add_output_options(sweep, config, format);

    auto* couplings = app.add_subcommand("sweep-couplings",
                                         "long-format (lambda, mu) sweep at fixed N");
    couplings->add_option("--pattern", config.pattern, "base pattern spec")->required();
    couplings->add_option("--n", grids.n, "chain length")->required();
    couplings->add_option("--lambda-grid", grids.lambda_grid, "lambda grid lo:hi:step")
        ->required();
    couplings->add_option("--mu-grid", grids.mu_grid, "mu grid lo:hi:step");
    couplings->add_option("--temp", config.temperature, "temperature in units of J");
    add_output_options(couplings, config, format);

    auto* gap = app.add_subcommand("gap", "many-body gap vs chain length");
    gap->add_option("--pattern", config.pattern, "coupling pattern spec")->required();
    gap->add_option("--n", grids.n, "chain lengths lo:hi:step or list")->required();
    add_output_options(gap, config, format);

    auto* disorder = app.add_subcommand("disorder",
                                        "concurrence statistics under coupling noise");
    disorder->add_option("--pattern", config.pattern, "coupling pattern spec")->required();
    disorder->add_option("--n", grids.n, "chain lengths lo:hi:step or list")->required();
    disorder->add_option("--chi", config.chi_bar, "noise half-width, 0 <= chi < 1")
        ->required();
    disorder->add_option("--samples", config.samples, "samples per length")->required();
    disorder->add_option("--seed", config.seed, "RNG seed");
    disorder->add_option("--temp", config.temperature, "temperature in units of J");
    add_output_options(disorder, config, format);

    auto* bose = app.add_subcommand("bose-hubbard",
                                    "end-site entanglement of the Bose-Hubbard chain");
    bose->add_option("--lattice", config.lattice, "endprobe or superlattice")
        ->check(CLI::IsMember({"endprobe", "superlattice"}));
    bose->add_option("--sites", config.bh_sites, "number of lattice sites");
    bose->add_option("--bosons", config.bh_bosons, "number of bosons");
    bose->add_option("--eps", config.eps, "local field strength in units of t");
    int cap = -1;
    bose->add_option("--cap", cap, "per-site occupancy cap (default min(n, 4))");
    bose->add_option("--u-grid", grids.u_grid, "on-site repulsion grid lo:hi:step or list")
        ->required();
    add_output_options(bose, config, format);

    auto* teleport = app.add_subcommand("teleport",
                                        "phase-averaged teleportation fidelity vs |alpha|");
    teleport->add_option("--n", grids.n, "channel length (sites)");
    teleport->add_option("--lambda", config.lambda, "channel end bond ratio");
    teleport->add_option("--mu", config.mu, "channel near-end bond ratio");
    teleport->add_option("--nu", config.nu, "sender bond ratio J0/Jb");
    teleport->add_option("--temp", config.temperature, "channel temperature in units of Jb");
    teleport->add_option("--alpha-points", config.alpha_points, "|alpha| grid size");
    teleport->add_option("--phases", config.phase_points, "phase quadrature points");
    teleport->add_option("--t-star", config.t_star, "evolution time (default pi/(4 J0))");
    add_output_options(teleport, config, format);

    auto* tc = app.add_subcommand("tc", "critical temperature of the lambda-mu fidelity map");
    tc->add_option("--n", grids.n, "chain lengths lo:hi:step or list")->required();
    std::string grid = "40x40";
    tc->add_option("--grid", grid, "lambda x mu grid, e.g. 40x40");
    add_output_options(tc, config, format);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) config.command = Command::SweepLength;
        if (couplings->parsed()) config.command = Command::SweepCouplings;
        if (gap->parsed()) config.command = Command::Gap;
        if (disorder->parsed()) config.command = Command::Disorder;
        if (bose->parsed()) config.command = Command::BoseHubbard;
        if (teleport->parsed()) config.command = Command::Teleport;
        if (tc->parsed()) config.command = Command::Tc;

        if (!grids.n.empty()) config.n_list = lde::cli::parse_int_grid(grids.n);
        if (!grids.lambda_grid.empty()) config.lambda_grid = lde::cli::parse_grid(grids.lambda_grid);
        if (!grids.mu_grid.empty()) config.mu_grid = lde::cli::parse_grid(grids.mu_grid);
        if (!grids.u_grid.empty()) config.u_grid = lde::cli::parse_grid(grids.u_grid);
        if (cap >= 0) config.bh_cap = cap;
        config.format = format == "json" ? lde::cli::OutputFormat::Json
                                         : lde::cli::OutputFormat::Csv;
        if (tc->parsed()) {
            auto x = grid.find('x');
            if (x == std::string::npos) throw std::invalid_argument("--grid must be LxM");
            config.grid_lambda = std::stoi(grid.substr(0, x));
            config.grid_mu = std::stoi(grid.substr(x + 1));
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    return lde::cli::run_and_emit(config, std::cerr);
}
