#include "lde/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lde/bose_hubbard.hpp"
#include "lde/cca_teleport.hpp"
#include "lde/parallel.hpp"
#include "lde/pipeline.hpp"
#include "lde/version.hpp"

namespace lde::cli {

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::SweepLength: return "sweep-length";
        case Command::SweepCouplings: return "sweep-couplings";
        case Command::Gap: return "gap";
        case Command::Disorder: return "disorder";
        case Command::BoseHubbard: return "bose-hubbard";
        case Command::Teleport: return "teleport";
        case Command::Tc: return "tc";
    }
    return "?";
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty grid specification");
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream in(text);
        if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0) {
            throw std::invalid_argument("grid must be lo:hi:step with step > 0: '" + text + "'");
        }
        for (double v = lo; v <= hi + 1e-9 * step; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("empty grid specification");
    return out;
}

std::vector<int> parse_int_grid(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_grid(text)) {
        int i = static_cast<int>(std::lround(v));
        if (std::abs(v - i) > 1e-9) {
            throw std::invalid_argument("expected integers in grid '" + text + "'");
        }
        out.push_back(i);
    }
    return out;
}

namespace {

std::string config_line(const RunConfig& c) {
    std::ostringstream out;
    out << "command=" << command_name(c.command);
    auto list = [&out](const char* key, const auto& values) {
        out << ' ' << key << '=';
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ',';
            out << values[i];
        }
    };
    switch (c.command) {
        case Command::SweepLength:
        case Command::Gap:
            out << " pattern=" << c.pattern;
            list("n", c.n_list);
            out << " temp=" << c.temperature;
            break;
        case Command::SweepCouplings:
            out << " pattern=" << c.pattern;
            list("n", c.n_list);
            list("lambda", c.lambda_grid);
            list("mu", c.mu_grid);
            out << " temp=" << c.temperature;
            break;
        case Command::Disorder:
            out << " pattern=" << c.pattern;
            list("n", c.n_list);
            out << " chi=" << c.chi_bar << " samples=" << c.samples << " seed=" << c.seed
                << " temp=" << c.temperature;
            break;
        case Command::BoseHubbard:
            out << " lattice=" << c.lattice << " sites=" << c.bh_sites
                << " bosons=" << c.bh_bosons << " eps=" << c.eps;
            if (c.bh_cap) out << " cap=" << *c.bh_cap;
            list("u", c.u_grid);
            break;
        case Command::Teleport:
            out << " n=" << (c.n_list.empty() ? 12 : c.n_list.front())
                << " lambda=" << c.lambda << " mu=" << c.mu << " nu=" << c.nu
                << " temp=" << c.temperature << " alpha-points=" << c.alpha_points
                << " phases=" << c.phase_points;
            if (c.t_star > 0) out << " t-star=" << c.t_star;
            break;
        case Command::Tc:
            list("n", c.n_list);
            out << " grid=" << c.grid_lambda << 'x' << c.grid_mu;
            break;
    }
    return out.str();
}

int thread_count(const RunConfig& c) {
    return c.threads > 0 ? c.threads : default_threads();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Table run_sweep_length(const RunConfig& c) {
    require(!c.n_list.empty(), "sweep-length needs --n");
    auto pattern = chains::parse_pattern(c.pattern);
    Table t;
    t.columns = {"n", "x", "concurrence", "fidelity", "gap"};
    t.rows.resize(c.n_list.size());
    parallel_for(c.n_list.size(), thread_count(c), [&](std::size_t i) {
        auto r = end_to_end(pattern, c.n_list[i], c.temperature);
        t.rows[i] = {static_cast<double>(r.n), r.x, r.concurrence, r.fidelity, r.gap};
    });
    return t;
}

Table run_gap(const RunConfig& c) {
    require(!c.n_list.empty(), "gap needs --n");
    auto pattern = chains::parse_pattern(c.pattern);
    Table t;
    t.columns = {"n", "gap"};
    t.rows.resize(c.n_list.size());
    parallel_for(c.n_list.size(), thread_count(c), [&](std::size_t i) {
        auto r = end_to_end(pattern, c.n_list[i], c.temperature);
        t.rows[i] = {static_cast<double>(r.n), r.gap};
    });
    return t;
}

Table run_sweep_couplings(const RunConfig& c) {
    require(c.n_list.size() == 1, "sweep-couplings needs exactly one --n value");
    require(!c.lambda_grid.empty(), "sweep-couplings needs --lambda-grid");
    auto base = chains::parse_pattern(c.pattern);
    std::vector<double> mus = c.mu_grid;
    if (mus.empty()) mus.push_back(base.mu);
    require(base.kind == chains::PatternKind::LambdaMu || c.mu_grid.empty(),
            "--mu-grid only applies to lambdamu patterns");

    Table t;
    t.columns = {"lambda", "mu", "x", "concurrence", "fidelity", "gap"};
    t.rows.resize(c.lambda_grid.size() * mus.size());
    parallel_for(t.rows.size(), thread_count(c), [&](std::size_t idx) {
        std::size_t i = idx / mus.size();
        std::size_t j = idx % mus.size();
        auto pattern = base;
        pattern.lambda = c.lambda_grid[i];
        pattern.mu = mus[j];
        auto r = end_to_end(pattern, c.n_list.front(), c.temperature);
        t.rows[idx] = {pattern.lambda, pattern.mu, r.x, r.concurrence, r.fidelity, r.gap};
    });
    return t;
}

Table run_disorder(const RunConfig& c) {
    require(!c.n_list.empty(), "disorder needs --n");
    require(c.samples >= 1, "disorder needs --samples >= 1");
    auto pattern = chains::parse_pattern(c.pattern);
    chains::DisorderSpec spec{c.chi_bar, c.seed, c.samples};

    Table t;
    t.columns = {"n", "clean_concurrence", "min", "max", "mean", "fraction_above_clean"};
    for (int n : c.n_list) {
        auto bonds = chains::build_couplings(pattern, n);
        double clean = end_to_end(bonds, c.temperature).concurrence;
        std::vector<double> cs(static_cast<std::size_t>(c.samples));
        parallel_for(cs.size(), thread_count(c), [&](std::size_t s) {
            auto noisy = chains::apply_disorder(bonds, spec, static_cast<int>(s));
            cs[s] = end_to_end(noisy, c.temperature).concurrence;
        });
        double mn = cs[0], mx = cs[0], sum = 0.0;
        std::size_t above = 0;
        for (double v : cs) {
            mn = std::min(mn, v);
            mx = std::max(mx, v);
            sum += v;
            if (v > clean) ++above;
        }
        t.rows.push_back({static_cast<double>(n), clean, mn, mx, sum / c.samples,
                          static_cast<double>(above) / c.samples});
    }
    return t;
}

Table run_bose_hubbard(const RunConfig& c) {
    require(!c.u_grid.empty(), "bose-hubbard needs --u-grid");
    Eigen::VectorXd fields;
    if (c.lattice == "endprobe") {
        fields = bh::end_probe_fields(c.bh_sites, c.eps);
    } else if (c.lattice == "superlattice") {
        fields = bh::superlattice_fields(c.bh_sites, c.eps);
    } else {
        throw std::invalid_argument("lattice must be endprobe or superlattice");
    }
    int cap = c.bh_cap.value_or(bh::BHParams::default_cap(c.bh_bosons));

    Table t;
    t.columns = {"u", "c_eff", "log_negativity", "gap", "c_spin_ref", "lambda_eff"};
    t.rows.resize(c.u_grid.size());
    parallel_for(c.u_grid.size(), thread_count(c), [&](std::size_t i) {
        bh::BHParams params{c.bh_sites, c.bh_bosons, c.u_grid[i], 1.0, fields, cap};
        auto ent = bh::end_site_entanglement(params);
        double gap = bh::bh_gap(params);
        auto map = bh::effective_spin_couplings(params);
        double c_spin = end_to_end(map.pattern, map.n_spins, 0.0).concurrence;
        t.rows[i] = {c.u_grid[i], ent.qubit_concurrence, ent.log_negativity, gap, c_spin,
                     map.lambda};
    });
    return t;
}

Table run_teleport(const RunConfig& c) {
    int n = c.n_list.empty() ? 12 : c.n_list.front();
    cca::TeleportConfig cfg{n, c.lambda, c.mu, c.nu, c.temperature, c.t_star};
    cca::TeleportEngine engine(cfg);

    Table t;
    t.columns = {"alpha_abs", "fidelity", "success_probability"};
    auto alphas = cca::linspace(0.0, 1.0, c.alpha_points);
    t.rows.resize(alphas.size());
    parallel_for(alphas.size(), thread_count(c), [&](std::size_t i) {
        double beta_abs = std::sqrt(std::max(0.0, 1.0 - alphas[i] * alphas[i]));
        double fid = 0.0, succ = 0.0;
        for (int k = 0; k < c.phase_points; ++k) {
            double phase = 2.0 * std::numbers::pi * k / c.phase_points;
            auto res = engine.run({alphas[i], 0.0},
                                  beta_abs * std::exp(std::complex<double>(0.0, phase)));
            fid += res.fidelity;
            succ += res.success_probability;
        }
        t.rows[i] = {alphas[i], fid / c.phase_points, succ / c.phase_points};
    });
    return t;
}

Table run_tc(const RunConfig& c) {
    require(!c.n_list.empty(), "tc needs --n");
    Table t;
    t.columns = {"n", "t_c"};
    for (int n : c.n_list) {
        t.rows.push_back({static_cast<double>(n),
                          cca::critical_temperature(n, c.grid_lambda, c.grid_mu)});
    }
    return t;
}

}  // namespace

Table run(const RunConfig& config) {
    Table t;
    switch (config.command) {
        case Command::SweepLength: t = run_sweep_length(config); break;
        case Command::SweepCouplings: t = run_sweep_couplings(config); break;
        case Command::Gap: t = run_gap(config); break;
        case Command::Disorder: t = run_disorder(config); break;
        case Command::BoseHubbard: t = run_bose_hubbard(config); break;
        case Command::Teleport: t = run_teleport(config); break;
        case Command::Tc: t = run_tc(config); break;
    }
    t.config_line = config_line(config);
    return t;
}

void emit(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv) {
        out << "# ldesim " << kVersion << ' ' << table.config_line << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) out << ',';
            out << table.columns[i];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << fmt17(row[i]);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = table.config_line;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    out << j.dump(2) << '\n';
}

std::string default_output_name(Command command, OutputFormat format) {
    return std::string(command_name(command)) +
           (format == OutputFormat::Csv ? ".csv" : ".json");
}

int run_and_emit(const RunConfig& config, std::ostream& log) {
    try {
        Table table = run(config);

        std::string path = config.output_path;
        if (path.empty()) {
            const char* dir = std::getenv("LDESIM_OUTPUT_DIR");
            std::filesystem::path base = dir ? dir : ".";
            path = (base / default_output_name(config.command, config.format)).string();
        }
        if (path == "-") {
            emit(table, config.format, std::cout);
        } else {
            std::ofstream file(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            emit(table, config.format, file);
            log << "wrote " << table.rows.size() << " rows to " << path << '\n';
        }
        if (config.command == Command::Tc) {
            for (const auto& row : table.rows) {
                log << "T_c(N=" << static_cast<int>(row[0]) << ") = " << row[1] << '\n';
            }
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        log << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace lde::cli
