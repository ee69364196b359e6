#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lde/tridiag_eig.hpp"

namespace lde::chains {

enum class PatternKind { Uniform, Alternating, HybridLDE, EndProbe, LambdaMu, Custom };

/// Declarative description of a site-dependent nearest-neighbor coupling
/// profile.  All bond strengths are expressed relative to the energy
/// scale `j` (default 1), so downstream results come out in units of J.
struct CouplingPattern {
    PatternKind kind = PatternKind::Uniform;
    double lambda = 1.0;          // weak-bond ratio, 0 < lambda <= 1
    double mu = 1.0;              // strong near-end ratio, mu >= 1
    int n_tilde = 0;              // alternating segment extent (HybridLDE)
    std::vector<double> ratios;   // explicit bond ratios (Custom)
    double j = 1.0;               // energy unit

    static CouplingPattern uniform(double j = 1.0);
    static CouplingPattern alternating(double lambda, double j = 1.0);
    static CouplingPattern hybrid_lde(double lambda, int n_tilde, double j = 1.0);
    static CouplingPattern end_probe(double lambda, double j = 1.0);
    static CouplingPattern lambda_mu(double lambda, double mu, double j = 1.0);
    static CouplingPattern custom(std::vector<double> ratios, double j = 1.0);
};

/// Uniform multiplicative noise on the couplings: every bond is scaled by
/// (1 + chi_i) with chi_i i.i.d. uniform on [-chi_bar, chi_bar].  The noise
/// stream is a counter-based generator keyed on (seed, sample_index), so a
/// given sample is bit-reproducible and samples can run concurrently.
struct DisorderSpec {
    double chi_bar = 0.0;  // 0 <= chi_bar < 1
    std::uint64_t seed = 0;
    int samples = 1;
};

/// Bond strengths J_i, i = 1..N-1, for a pattern on an open chain of
/// n_sites spins.  Validates the pattern/length combination and throws
/// std::invalid_argument on violations (odd N for Alternating, N < 6 for
/// LambdaMu, n_tilde out of range for HybridLDE, ...).
std::vector<double> build_couplings(const CouplingPattern& pattern, int n_sites);

std::vector<double> apply_disorder(const std::vector<double>& bonds,
                                   const DisorderSpec& spec, int sample_index);

/// Adjacency matrix of the free-fermion image: M_{i,i+1} = J_i / 2, zero
/// diagonal.
Tridiagonal build_adjacency(const std::vector<double>& bonds);

/// Parse the CLI pattern grammar:
///   uniform
///   alternating:lambda=0.2
///   hybrid:lambda=0.2,ntilde=4
///   endprobe:lambda=0.04
///   lambdamu:lambda=0.1,mu=4
///   custom:0.1,5,1,1,5,0.1
CouplingPattern parse_pattern(std::string_view text);

std::string to_string(const CouplingPattern& pattern);

}  // namespace lde::chains
