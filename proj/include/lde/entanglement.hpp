#pragma once

#include <Eigen/Dense>

namespace lde::ent {

/// C = 2 max{0, x^2 + |x| - 1/4}.  Accepts |x| up to 1/2 + 1e-9 and clamps
/// the overshoot; larger |x| signals an upstream bug and throws.
double concurrence_from_x(double x);

/// Thermodynamic-limit saturation value of the alternating-chain
/// end-to-end concurrence: 2 max{0, 1/2 - lambda^2 + lambda^4/4}.
double saturation_concurrence(double lambda);

struct Fidelity {
    double full_fraction;  // F in [1/4, 1]
    double fidelity;       // f = (2F + 1)/3 in [1/2, 1]
};

/// F = 1/4 + |x| + x^2 and the associated teleportation fidelity.
Fidelity fidelity_from_x(double x);

/// Inverse companion of fidelity_from_x: C = 2 max{0, (3/2) f - 1}.
double concurrence_from_fidelity(double fidelity);

/// Wootters concurrence of an arbitrary two-qubit density matrix.
/// Requires rho Hermitian, unit trace and PSD to 1e-9; throws otherwise.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

/// Two-site reduced state of the symmetric x-family:
///   rho = I/4 + (x/2)(sx sx + sy sy) - x^2 sz sz
/// in the product basis {|00>,|01>,|10>,|11>}.  The transverse sign is a
/// convention (unobservable in C, F, f, E_N) and is fixed to +1.
Eigen::Matrix4d two_site_reduced_from_x(double x);

/// Logarithmic negativity log2 || rho^{T_B} ||_1 for a state on
/// dim_a * dim_b dimensions (partial transpose over the second factor).
double log_negativity(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

/// One row of the end-to-end pipeline output at a given (pattern, N, T).
struct EndToEndReport {
    int n = 0;
    double temperature = 0.0;
    double x = 0.0;
    double concurrence = 0.0;
    double full_fraction = 0.25;
    double fidelity = 0.5;
    double gap = 0.0;
    bool degenerate = false;
};

}  // namespace lde::ent
