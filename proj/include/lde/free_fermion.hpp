#pragma once

#include <Eigen/Dense>

#include "lde/tridiag_eig.hpp"

namespace lde::fermion {

/// Spectrum of the one-body adjacency matrix M.  Eigenvalues ascend;
/// eigenvectors are the columns of an orthonormal matrix with a fixed
/// sign convention (first significant component positive).
struct SingleParticleSpectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;

    int size() const { return static_cast<int>(values.size()); }
    /// Threshold below which a mode counts as a zero mode: 1e-12 * max|Lambda|.
    double zero_tolerance() const;
};

SingleParticleSpectrum diagonalize(const Tridiagonal& m);

struct Correlator {
    double x = 0.0;
    bool degenerate = false;  // zero modes participated at T = 0
};

/// End-to-end fermionic correlator x = <c_1^dag c_N>.
///
/// T = 0: sum of xi_k(1) xi_k(N) over filled (negative) modes.  Zero modes
/// are handled separately: an odd-sized zero group is occupied with weight
/// 1/2 (the T->0 limit of the Fermi factor); a pair of numerically
/// degenerate zero modes is resolved into its end-localized combinations,
/// which restores the physical filled-sea value when the dimerization
/// splitting underflows (see free_fermion.cpp).  Either case sets the
/// degenerate flag.
///
/// T > 0: sum over all modes weighted by the Fermi factor 1/(1+e^{L/T}).
Correlator end_correlator(const SingleParticleSpectrum& spec, double temperature);

/// Many-body energy gap over the union of all magnetization sectors:
/// min_k |Lambda_k|, reported as exactly 0 below the zero-mode threshold.
double many_body_gap(const SingleParticleSpectrum& spec);

}  // namespace lde::fermion
