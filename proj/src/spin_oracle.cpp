#include "lde/spin_oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lde::oracle {

namespace {

constexpr int kDenseSiteLimit = 14;  // sector eigensolves stay dense at oracle scale

void check_bonds(const std::vector<double>& bonds, int site_limit) {
    int n_sites = static_cast<int>(bonds.size()) + 1;
    if (n_sites < 2) throw std::invalid_argument("need at least one bond");
    if (n_sites > site_limit) {
        throw std::invalid_argument("chain too long for dense sector diagonalization");
    }
}

SectorSpectrum diagonalize_sector(const std::vector<double>& bonds, int n_up) {
    int n_sites = static_cast<int>(bonds.size()) + 1;
    SectorSpectrum spectrum;
    spectrum.basis = SectorBasis::build(n_sites, n_up);
    Eigen::MatrixXd h(build_sector_hamiltonian(bonds, spectrum.basis));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("sector eigensolver failed");
    }
    spectrum.energies = solver.eigenvalues();
    spectrum.vectors = solver.eigenvectors();
    return spectrum;
}

// Scatter one sector eigenvector's two-site end reduction into a 4x4
// accumulator with weight w.
void accumulate_reduced(const SectorBasis& basis, const Eigen::VectorXd& vec, double w,
                        Eigen::Matrix4d& rho) {
    const int n = basis.n_sites;
    const std::uint32_t bulk_mask = n > 2 ? ((1u << (n - 2)) - 1) : 0u;
    std::unordered_map<std::uint32_t, std::array<double, 4>> groups;
    groups.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint32_t m = basis.states[i];
        std::uint32_t key = (m >> 1) & bulk_mask;
        int local = static_cast<int>(((m & 1u) << 1) | ((m >> (n - 1)) & 1u));
        auto& slot = groups.try_emplace(key, std::array<double, 4>{}).first->second;
        slot[local] += vec[static_cast<Eigen::Index>(i)];
    }
    for (const auto& [key, amp] : groups) {
        for (int a = 0; a < 4; ++a) {
            if (amp[a] == 0.0) continue;
            for (int b = 0; b < 4; ++b) rho(a, b) += w * amp[a] * amp[b];
        }
    }
}

}  // namespace

Eigen::SparseMatrix<double> build_sector_hamiltonian(const std::vector<double>& bonds,
                                                     const SectorBasis& basis) {
    check_bonds(bonds, 24);
    if (static_cast<int>(bonds.size()) + 1 != basis.n_sites) {
        throw std::invalid_argument("bond count does not match basis");
    }
    const int n = basis.n_sites;
    const auto dim = static_cast<Eigen::Index>(basis.size());

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(basis.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint32_t m = basis.states[i];
        for (int b = 0; b < n - 1; ++b) {
            std::uint32_t pair = 3u << b;
            std::uint32_t bits = (m >> b) & 3u;
            if (bits == 1u || bits == 2u) {
                std::uint32_t flipped = m ^ pair;
                if (flipped > m) {
                    auto j = static_cast<Eigen::Index>(basis.index_of(flipped));
                    double v = bonds[static_cast<std::size_t>(b)] / 2.0;
                    triplets.emplace_back(static_cast<Eigen::Index>(i), j, v);
                    triplets.emplace_back(j, static_cast<Eigen::Index>(i), v);
                }
            }
        }
    }
    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(triplets.begin(), triplets.end());
    return h;
}

SectorSpectrum sector_spectrum(const std::vector<double>& bonds, int n_up) {
    check_bonds(bonds, kDenseSiteLimit);
    return diagonalize_sector(bonds, n_up);
}

SectorState ground_state(const std::vector<double>& bonds) {
    check_bonds(bonds, kDenseSiteLimit);
    const int n = static_cast<int>(bonds.size()) + 1;
    SectorState best;
    bool found = false;
    for (int n_up = 0; n_up <= n; ++n_up) {
        SectorSpectrum spectrum = diagonalize_sector(bonds, n_up);
        double e0 = spectrum.energies[0];
        if (!found || e0 < best.energy) {
            best.basis = std::move(spectrum.basis);
            best.amplitudes = spectrum.vectors.col(0);
            best.energy = e0;
            found = true;
        }
    }
    return best;
}

ThermalEnsemble thermal_ensemble(const std::vector<double>& bonds, double temperature) {
    check_bonds(bonds, kDenseSiteLimit);
    if (temperature < 0.0) throw std::invalid_argument("temperature must be >= 0");
    const int n = static_cast<int>(bonds.size()) + 1;

    ThermalEnsemble ensemble;
    ensemble.n_sites = n;
    ensemble.temperature = temperature;
    ensemble.sectors.reserve(n + 1);
    double e0 = 0.0;
    for (int n_up = 0; n_up <= n; ++n_up) {
        ensemble.sectors.push_back(diagonalize_sector(bonds, n_up));
        double sector_min = ensemble.sectors.back().energies[0];
        if (n_up == 0 || sector_min < e0) e0 = sector_min;
    }
    ensemble.ground_energy = e0;

    double z = 0.0;
    ensemble.weights.reserve(n + 1);
    for (const auto& sector : ensemble.sectors) {
        Eigen::VectorXd w(sector.energies.size());
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            double shifted = sector.energies[k] - e0;
            if (temperature == 0.0) {
                w[k] = shifted <= 1e-12 * (1.0 + std::abs(e0)) ? 1.0 : 0.0;
            } else {
                w[k] = std::exp(-shifted / temperature);
            }
        }
        z += w.sum();
        ensemble.weights.push_back(std::move(w));
    }
    for (auto& w : ensemble.weights) w /= z;
    return ensemble;
}

Eigen::MatrixXd thermal_density_matrix(const std::vector<double>& bonds,
                                       double temperature) {
    const int n = static_cast<int>(bonds.size()) + 1;
    if (n > 14) throw std::invalid_argument("full Gibbs matrix limited to N <= 14");
    ThermalEnsemble ensemble = thermal_ensemble(bonds, temperature);

    const auto dim = static_cast<Eigen::Index>(1) << n;
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < ensemble.sectors.size(); ++s) {
        const auto& sector = ensemble.sectors[s];
        const auto& weights = ensemble.weights[s];
        for (Eigen::Index k = 0; k < weights.size(); ++k) {
            if (weights[k] < 1e-18) continue;
            const auto& v = sector.vectors.col(k);
            for (std::size_t i = 0; i < sector.basis.size(); ++i) {
                for (std::size_t j = 0; j < sector.basis.size(); ++j) {
                    rho(sector.basis.states[i], sector.basis.states[j]) +=
                        weights[k] * v[static_cast<Eigen::Index>(i)] *
                        v[static_cast<Eigen::Index>(j)];
                }
            }
        }
    }
    return rho;
}

Eigen::Matrix4d reduced_two_site_ends(const SectorState& state) {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    accumulate_reduced(state.basis, state.amplitudes, 1.0, rho);
    return rho;
}

Eigen::Matrix4d reduced_two_site_ends(const ThermalEnsemble& ensemble) {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (std::size_t s = 0; s < ensemble.sectors.size(); ++s) {
        const auto& sector = ensemble.sectors[s];
        const auto& weights = ensemble.weights[s];
        for (Eigen::Index k = 0; k < weights.size(); ++k) {
            if (weights[k] < 1e-18) continue;
            accumulate_reduced(sector.basis, sector.vectors.col(k), weights[k], rho);
        }
    }
    return rho;
}

double transverse_correlation(const Eigen::Matrix4d& rho_ends) {
    return 0.5 * (rho_ends(1, 2) + rho_ends(2, 1));
}

double oracle_gap(const std::vector<double>& bonds) {
    check_bonds(bonds, kDenseSiteLimit);
    const int n = static_cast<int>(bonds.size()) + 1;
    double e0 = std::numeric_limits<double>::infinity();
    double e1 = std::numeric_limits<double>::infinity();
    for (int n_up = 0; n_up <= n; ++n_up) {
        SectorSpectrum spectrum = diagonalize_sector(bonds, n_up);
        for (Eigen::Index k = 0; k < spectrum.energies.size(); ++k) {
            double e = spectrum.energies[k];
            if (e < e0) {
                e1 = e0;
                e0 = e;
            } else if (e < e1) {
                e1 = e;
            }
        }
    }
    return e1 - e0;
}

}  // namespace lde::oracle
