#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "lde/sector_basis.hpp"

namespace lde::oracle {

/// XX Hamiltonian H = sum_i J_i (Sx Sx + Sy Sy) restricted to one
/// magnetization sector: element J_i/2 between masks differing by one
/// adjacent transposition, zero diagonal.  Guarded at n_sites <= 24.
Eigen::SparseMatrix<double> build_sector_hamiltonian(const std::vector<double>& bonds,
                                                     const SectorBasis& basis);

struct SectorState {
    SectorBasis basis;
    Eigen::VectorXd amplitudes;  // unit norm
    double energy = 0.0;
};

/// Dense eigendecomposition of one sector.
struct SectorSpectrum {
    SectorBasis basis;
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;
};

/// Dense eigendecomposition of the n_up sector of an N = bonds.size()+1
/// chain (N <= 14).
SectorSpectrum sector_spectrum(const std::vector<double>& bonds, int n_up);

/// Global ground state over all sectors (for even N it sits at zero total
/// magnetization).  Ties across sectors resolve to the lowest n_up.
SectorState ground_state(const std::vector<double>& bonds);

/// Gibbs state in sector-blocked spectral form.  T = 0 degenerates to the
/// equal-weight mixture over the ground space.  Weights are normalized so
/// that their total over all sectors is 1.
struct ThermalEnsemble {
    int n_sites = 0;
    double temperature = 0.0;
    double ground_energy = 0.0;
    std::vector<SectorSpectrum> sectors;        // indexed by n_up
    std::vector<Eigen::VectorXd> weights;       // per sector, aligned with energies
};

ThermalEnsemble thermal_ensemble(const std::vector<double>& bonds, double temperature);

/// Materialized 2^N x 2^N Gibbs matrix, assembled sector-by-sector.
/// Memory guard: n_sites <= 14.
Eigen::MatrixXd thermal_density_matrix(const std::vector<double>& bonds,
                                       double temperature);

/// Two-site reduced density matrix of the end sites (1, N) in the basis
/// {|dd>, |du>, |ud>, |uu>} with index (bit_1 << 1) | bit_N (bit = up).
Eigen::Matrix4d reduced_two_site_ends(const SectorState& state);
Eigen::Matrix4d reduced_two_site_ends(const ThermalEnsemble& ensemble);

/// Transverse end-to-end correlation <S_1^+ S_N^- + S_1^- S_N^+> / 2 read
/// off the reduced state; equals the fermionic correlator x up to a sign.
double transverse_correlation(const Eigen::Matrix4d& rho_ends);

/// E1 - E0 over the union of all sectors.
double oracle_gap(const std::vector<double>& bonds);

}  // namespace lde::oracle
