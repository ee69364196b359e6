#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "lde/chain_models.hpp"
#include "lde/spin_oracle.hpp"

namespace lde::cca {

/// Jaynes-Cummings cavity: photon energy omega, atomic gap omega', coupling g.
struct CavityParams {
    double omega = 0.0;
    double omega_prime = 0.0;
    double g = 0.0;

    double detuning() const { return omega_prime - omega; }
    /// Photon energy realizing the degenerate {|empty>, |1->} ground doublet.
    static double resonance_omega(double g, double detuning);
};

struct PolaritonEnergies {
    double vacuum = 0.0;  // eps_0
    double plus = 0.0;    // eps_{n+}
    double minus = 0.0;   // eps_{n-}
};

/// eps_0 = 0, eps_{n+-} = n omega +- sqrt(n g^2 + Delta^2).
PolaritonEnergies polariton_energies(const CavityParams& params, int n);

struct TwoLevelReport {
    double gap = 0.0;             // eps_{2-}, the protecting energy scale
    double coupling_ratio = 0.0;  // J_max / eps_{2-}
    double thermal_ratio = 0.0;   // T / eps_{2-}
    double threshold = 0.1;
    bool pass = false;
};

/// Validity of the two-level (polariton qubit) reduction at the resonance
/// point: both ratios must stay below the threshold.
TwoLevelReport two_level_validity(const CavityParams& params, double j_max,
                                  double temperature, double threshold = 0.1);

// ---------------------------------------------------------------------------
// lambda-mu coupled-cavity arrays.
//
// Photon hopping between polariton qubits gives the flip-flop Hamiltonian
//   H = -sum_k J_k (S_k^+ S_{k+1}^- + S_k^- S_{k+1}^+),
// i.e. an XX chain with exchange 2 J_k.  All couplings and temperatures in
// this module are in units of the bulk hopping J_b.
// ---------------------------------------------------------------------------

/// Static teleportation fidelity f(lambda, mu) of the thermal chain,
/// row index = lambda grid, column index = mu grid.
Eigen::MatrixXd thermal_fidelity_map(int n_sites, const std::vector<double>& lambdas,
                                     const std::vector<double>& mus, double temperature);

std::vector<double> linspace(double lo, double hi, int count);

/// Temperature where max_{lambda, mu} f drops to the classical threshold
/// 2/3, located by bisection to tolerance tol (absolute, units of J_b).
/// Throws std::runtime_error if f is still nonclassical at the ceiling.
double critical_temperature(int n_sites, int grid_lambda = 40, int grid_mu = 40,
                            double tol = 0.005, double ceiling = 0.5);

struct TeleportConfig {
    int channel_length = 2;   // N (sites 1..N); sender qubit is site 0
    double lambda = 1.0;      // channel end bonds (J_b units)
    double mu = 1.0;          // channel near-end bonds
    double nu = 1.0;          // J_0 / J_b, sender bond
    double temperature = 0.0; // channel temperature (J_b units)
    double t_star = -1.0;     // evolution time; < 0 means pi / (4 J_0)
};

struct TeleportResult {
    /// Probabilities of the (S_0^z, S_1^z) outcomes: index (s0 << 1) | s1
    /// with 1 = up, i.e. {dd, du, ud, uu}.
    std::array<double, 4> outcome_probabilities{};
    double success_probability = 0.0;  // P(ud) + P(du)
    double fidelity_ud = 0.0;          // post-correction, outcome (up, down)
    double fidelity_du = 0.0;
    double fidelity = 0.0;             // success-weighted average
};

/// Measurement-based teleportation through a thermal lambda-mu channel.
/// The engine precomputes the channel Gibbs ensemble and the sector
/// spectra of the (N+1)-spin chain; run() is then cheap per input state.
class TeleportEngine {
  public:
    explicit TeleportEngine(const TeleportConfig& config);
    ~TeleportEngine();
    TeleportEngine(TeleportEngine&&) noexcept;
    TeleportEngine& operator=(TeleportEngine&&) noexcept;

    const TeleportConfig& config() const;
    double t_star() const;

    /// Input |phi> = alpha |up_0> + beta |down_0>; requires unit norm.
    TeleportResult run(std::complex<double> alpha, std::complex<double> beta) const;

    /// Fidelity at fixed |alpha|, averaged over the relative phase of
    /// (alpha, beta) with an n_phases-point uniform quadrature.
    double phase_averaged_fidelity(double alpha_abs, int n_phases = 16) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

TeleportResult teleport_protocol(const TeleportConfig& config,
                                 std::complex<double> alpha,
                                 std::complex<double> beta);

}  // namespace lde::cca
