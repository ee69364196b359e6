#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <string>
#include <vector>

#include "lde/chain_models.hpp"

namespace lde::bh {

/// 1-D Bose-Hubbard chain with site-dependent local fields, in units of
/// the hopping amplitude t.
struct BHParams {
    int n_sites = 0;
    int n_bosons = 0;
    double u = 0.0;               // on-site repulsion (units of t)
    double t = 1.0;               // hopping amplitude (energy unit)
    Eigen::VectorXd fields;       // local fields eps_i >= 0 (units of t)
    int n_max = 4;                // per-site occupancy cap

    static int default_cap(int n_bosons) { return n_bosons < 4 ? n_bosons : 4; }
};

/// Occupation-number basis at fixed total boson number with per-site cap,
/// ordered lexicographically.
struct BoseBasis {
    int n_sites = 0;
    int n_bosons = 0;
    int n_max = 0;
    std::vector<std::vector<std::uint8_t>> states;

    static BoseBasis build(int n_sites, int n_bosons, int n_max);
    std::size_t size() const { return states.size(); }
    std::size_t index_of(const std::vector<std::uint8_t>& occ) const;

  private:
    std::vector<std::uint64_t> keys_;  // packed occupations, sorted
    std::uint64_t pack(const std::vector<std::uint8_t>& occ) const;
    friend BoseBasis make_basis_impl(int, int, int);
};

/// Super-lattice field profile: eps on sites 2, 5, 8, ..., N-1 (1-indexed),
/// zero elsewhere.  Requires N divisible by 3.
Eigen::VectorXd superlattice_fields(int n_sites, double eps);

/// End-probe field profile: eps on sites 2 and N-1, zero elsewhere.
Eigen::VectorXd end_probe_fields(int n_sites, double eps);

Eigen::SparseMatrix<double> build_bh_hamiltonian(const BHParams& params,
                                                 const BoseBasis& basis);

enum class EigenMethod { Auto, Dense, Lanczos };

struct BHGroundState {
    BoseBasis basis;
    Eigen::VectorXd amplitudes;
    double energy = 0.0;
    double first_excited = 0.0;
};

/// Lowest two levels of the Bose-Hubbard chain.  Dense below dimension
/// 4000, Lanczos (full reorthogonalization) above.
BHGroundState bh_ground_state(const BHParams& params,
                              EigenMethod method = EigenMethod::Auto);

double bh_gap(const BHParams& params, EigenMethod method = EigenMethod::Auto);

struct EndEntanglement {
    double log_negativity = 0.0;   // sites (1, N) of the full bosonic state
    double qubit_concurrence = 0.0;  // ends projected onto occupations {0,1}
    double projection_weight = 0.0;  // trace captured by the {0,1} block
};

EndEntanglement end_site_entanglement(const BHParams& params,
                                      EigenMethod method = EigenMethod::Auto);

/// Second-order perturbative spin mapping: 2t between zero-field
/// neighbors, 2t^2/eps_k across a strong-field site k.  Valid for
/// t << eps_k << U; violations are reported, not fatal.
struct EffectiveMapping {
    chains::CouplingPattern pattern;  // Custom ratios, scale j = 2t
    int n_spins = 0;                  // effective chain length N'
    double lambda = 1.0;              // weak/strong ratio t/eps (min over sites)
    bool regime_ok = true;
    std::string warning;
};

EffectiveMapping effective_spin_couplings(const BHParams& params);

}  // namespace lde::bh
