#include "lde/cca_teleport.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "lde/pipeline.hpp"

namespace lde::cca {

using std::complex;

double CavityParams::resonance_omega(double g, double detuning) {
    return std::sqrt(g * g + detuning * detuning);
}

PolaritonEnergies polariton_energies(const CavityParams& params, int n) {
    if (params.g <= 0.0 || params.omega <= 0.0) {
        throw std::invalid_argument("cavity requires g > 0 and omega > 0");
    }
    if (n < 1) throw std::invalid_argument("polariton branch index n must be >= 1");
    double delta = params.detuning();
    double root = std::sqrt(n * params.g * params.g + delta * delta);
    return {0.0, n * params.omega + root, n * params.omega - root};
}

TwoLevelReport two_level_validity(const CavityParams& params, double j_max,
                                  double temperature, double threshold) {
    TwoLevelReport report;
    report.threshold = threshold;
    report.gap = polariton_energies(params, 2).minus;
    if (report.gap <= 0.0) {
        report.coupling_ratio = std::numeric_limits<double>::infinity();
        report.thermal_ratio = std::numeric_limits<double>::infinity();
        report.pass = false;
        return report;
    }
    report.coupling_ratio = j_max / report.gap;
    report.thermal_ratio = temperature / report.gap;
    report.pass = report.coupling_ratio < threshold && report.thermal_ratio < threshold;
    return report;
}

// ---------------------------------------------------------------------------
// Thermal fidelity map and critical temperature.
// ---------------------------------------------------------------------------

namespace {

// The polariton flip-flop H = -sum J_k (S+S- + S-S+) is an XX chain with
// exchange 2 J_k (the sign is a gauge on a bipartite chain and drops out of
// |x|), so the spin pipeline runs with the pattern scale J = 2 J_b.
chains::CouplingPattern channel_pattern(double lambda, double mu, double scale) {
    if (lambda == 1.0 && mu == 1.0) return chains::CouplingPattern::uniform(scale);
    return chains::CouplingPattern::lambda_mu(lambda, mu, scale);
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw std::invalid_argument("linspace needs at least one point");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = hi;
        return out;
    }
    double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = lo + i * step;
    out.back() = hi;
    return out;
}

Eigen::MatrixXd thermal_fidelity_map(int n_sites, const std::vector<double>& lambdas,
                                     const std::vector<double>& mus, double temperature) {
    if (lambdas.empty() || mus.empty()) throw std::invalid_argument("empty coupling grid");
    for (double l : lambdas) {
        if (!(l > 0.0 && l <= 1.0)) throw std::invalid_argument("lambda grid must lie in (0, 1]");
    }
    for (double m : mus) {
        if (!(m >= 1.0 && m <= 8.0)) throw std::invalid_argument("mu grid must lie in [1, 8]");
    }
    Eigen::MatrixXd map(lambdas.size(), mus.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t j = 0; j < mus.size(); ++j) {
            auto report = end_to_end(channel_pattern(lambdas[i], mus[j], 2.0), n_sites,
                                     temperature);
            map(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = report.fidelity;
        }
    }
    return map;
}

double critical_temperature(int n_sites, int grid_lambda, int grid_mu, double tol,
                            double ceiling) {
    if (grid_lambda < 20 || grid_mu < 20) {
        throw std::invalid_argument("critical_temperature needs at least a 20x20 grid");
    }
    auto lambdas = linspace(1.0 / grid_lambda, 1.0, grid_lambda);
    auto mus = linspace(1.0, 8.0, grid_mu);
    auto excess = [&](double t) {
        return thermal_fidelity_map(n_sites, lambdas, mus, t).maxCoeff() - 2.0 / 3.0;
    };

    double lo = 1e-4;
    double hi = ceiling;
    if (excess(lo) <= 0.0) {
        throw std::runtime_error("fidelity already classical at the bisection floor");
    }
    if (excess(hi) > 0.0) {
        throw std::runtime_error("fidelity still nonclassical at the bisection ceiling");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Teleportation protocol.
// ---------------------------------------------------------------------------

struct TeleportEngine::Impl {
    TeleportConfig config;
    double t_star = 0.0;
    int n_total = 0;

    struct ChannelTerm {
        double weight = 0.0;
        // Evolved (N+1)-spin components for spin0 = up / down; the input
        // amplitudes alpha, beta only multiply these at run time.
        int sector_up = 0;
        int sector_dn = 0;
        Eigen::VectorXcd evolved_up;
        Eigen::VectorXcd evolved_dn;
    };
    std::vector<ChannelTerm> terms;
    std::map<int, oracle::SectorSpectrum> full_sectors;  // (N+1)-chain, by n_up

    const oracle::SectorSpectrum& full_sector(const std::vector<double>& bonds, int n_up) {
        auto it = full_sectors.find(n_up);
        if (it == full_sectors.end()) {
            it = full_sectors.emplace(n_up, oracle::sector_spectrum(bonds, n_up)).first;
        }
        return it->second;
    }
};

TeleportEngine::TeleportEngine(const TeleportConfig& config)
    : impl_(std::make_unique<Impl>()) {
    const int n = config.channel_length;
    if (n < 2) throw std::invalid_argument("channel needs at least 2 sites");
    if (n + 1 > 14) throw std::invalid_argument("teleport simulation limited to N+1 <= 14 spins");
    if (!(config.nu > 0.0)) throw std::invalid_argument("sender bond ratio nu must be positive");
    if (config.temperature < 0.0) throw std::invalid_argument("temperature must be >= 0");

    impl_->config = config;
    impl_->n_total = n + 1;
    impl_->t_star = config.t_star > 0.0
                        ? config.t_star
                        : std::numbers::pi / (4.0 * config.nu);

    // Channel bonds in J_b units; spin-equivalent couplings are -2 J_k
    // (ferromagnetic flip-flop, so the two-site resource is the symmetric
    // combination as required by the protocol).
    auto cca_bonds = chains::build_couplings(channel_pattern(config.lambda, config.mu, 1.0), n);
    std::vector<double> channel_spin(cca_bonds.size());
    for (std::size_t i = 0; i < cca_bonds.size(); ++i) channel_spin[i] = -2.0 * cca_bonds[i];

    std::vector<double> full_spin;
    full_spin.reserve(cca_bonds.size() + 1);
    full_spin.push_back(-2.0 * config.nu);
    full_spin.insert(full_spin.end(), channel_spin.begin(), channel_spin.end());

    auto channel = oracle::thermal_ensemble(channel_spin, config.temperature);

    constexpr double kWeightCutoff = 1e-15;
    const complex<double> minus_i(0.0, -1.0);
    for (int n_up = 0; n_up <= n; ++n_up) {
        const auto& sector = channel.sectors[n_up];
        const auto& weights = channel.weights[n_up];
        for (Eigen::Index k = 0; k < weights.size(); ++k) {
            if (weights[k] < kWeightCutoff) continue;
            Impl::ChannelTerm term;
            term.weight = weights[k];
            term.sector_dn = n_up;
            term.sector_up = n_up + 1;

            for (int spin0 = 0; spin0 <= 1; ++spin0) {
                const auto& full = impl_->full_sector(full_spin, n_up + spin0);
                Eigen::VectorXd psi = Eigen::VectorXd::Zero(
                    static_cast<Eigen::Index>(full.basis.size()));
                for (std::size_t i = 0; i < sector.basis.size(); ++i) {
                    std::uint32_t mask = (sector.basis.states[i] << 1) |
                                         static_cast<std::uint32_t>(spin0);
                    psi[static_cast<Eigen::Index>(full.basis.index_of(mask))] =
                        sector.vectors(static_cast<Eigen::Index>(i), k);
                }
                Eigen::VectorXcd coeffs = (full.vectors.transpose() * psi).cast<complex<double>>();
                for (Eigen::Index m = 0; m < coeffs.size(); ++m) {
                    coeffs[m] *= std::exp(minus_i * full.energies[m] * impl_->t_star);
                }
                Eigen::VectorXcd evolved = full.vectors.cast<complex<double>>() * coeffs;
                (spin0 == 1 ? term.evolved_up : term.evolved_dn) = std::move(evolved);
            }
            impl_->terms.push_back(std::move(term));
        }
    }
}

TeleportEngine::~TeleportEngine() = default;
TeleportEngine::TeleportEngine(TeleportEngine&&) noexcept = default;
TeleportEngine& TeleportEngine::operator=(TeleportEngine&&) noexcept = default;

const TeleportConfig& TeleportEngine::config() const { return impl_->config; }
double TeleportEngine::t_star() const { return impl_->t_star; }

TeleportResult TeleportEngine::run(complex<double> alpha, complex<double> beta) const {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9) {
        throw std::invalid_argument("input state must be normalized");
    }
    const int n = impl_->config.channel_length;
    const std::uint32_t bulk_mask = (1u << n) - 1;  // bits 0..N-1 of the full mask

    TeleportResult result;
    Eigen::Matrix2cd rho_du = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd rho_ud = Eigen::Matrix2cd::Zero();

    // Amplitude pairs (site-N bit 0/1) keyed by the remaining bits.
    std::unordered_map<std::uint32_t, std::array<complex<double>, 2>> acc;

    for (const auto& term : impl_->terms) {
        for (int outcome = 0; outcome < 4; ++outcome) {
            const auto s0 = static_cast<std::uint32_t>((outcome >> 1) & 1);
            const auto s1 = static_cast<std::uint32_t>(outcome & 1);
            acc.clear();

            auto gather = [&](const oracle::SectorSpectrum& full,
                              const Eigen::VectorXcd& evolved, complex<double> coef) {
                for (std::size_t i = 0; i < full.basis.size(); ++i) {
                    std::uint32_t mask = full.basis.states[i];
                    if ((mask & 1u) != s0 || ((mask >> 1) & 1u) != s1) continue;
                    complex<double> a = coef * evolved[static_cast<Eigen::Index>(i)];
                    auto& slot = acc.try_emplace(mask & bulk_mask,
                                                 std::array<complex<double>, 2>{})
                                     .first->second;
                    slot[(mask >> n) & 1u] += a;
                }
            };
            gather(impl_->full_sectors.at(term.sector_up), term.evolved_up, alpha);
            gather(impl_->full_sectors.at(term.sector_dn), term.evolved_dn, beta);

            Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
            for (const auto& [key, amps] : acc) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) rho(a, b) += amps[a] * std::conj(amps[b]);
                }
            }
            double p = rho(0, 0).real() + rho(1, 1).real();
            result.outcome_probabilities[outcome] += term.weight * p;
            if (outcome == 0b01) rho_du += term.weight * rho;
            if (outcome == 0b10) rho_ud += term.weight * rho;
        }
    }

    // Conditional corrections (site-N basis index: 0 = down, 1 = up):
    // outcome (up, down) -> Rz(-pi/2) = diag(-i, 1); (down, up) -> Rz(+pi/2).
    auto corrected_fidelity = [&](Eigen::Matrix2cd rho, complex<double> down_phase,
                                  double p) {
        Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
        u(0, 0) = down_phase;
        rho = u * rho * u.adjoint();
        Eigen::Vector2cd phi(beta, alpha);
        return (phi.adjoint() * rho * phi)(0, 0).real() / p;
    };
    double p_du = result.outcome_probabilities[0b01];
    double p_ud = result.outcome_probabilities[0b10];
    result.fidelity_du = corrected_fidelity(rho_du, complex<double>(0.0, 1.0), p_du);
    result.fidelity_ud = corrected_fidelity(rho_ud, complex<double>(0.0, -1.0), p_ud);
    result.success_probability = p_du + p_ud;
    result.fidelity = (p_du * result.fidelity_du + p_ud * result.fidelity_ud) /
                      result.success_probability;
    return result;
}

double TeleportEngine::phase_averaged_fidelity(double alpha_abs, int n_phases) const {
    if (alpha_abs < 0.0 || alpha_abs > 1.0) {
        throw std::invalid_argument("|alpha| must lie in [0, 1]");
    }
    if (n_phases < 1) throw std::invalid_argument("need at least one phase point");
    double beta_abs = std::sqrt(std::max(0.0, 1.0 - alpha_abs * alpha_abs));
    double sum = 0.0;
    for (int k = 0; k < n_phases; ++k) {
        double phase = 2.0 * std::numbers::pi * k / n_phases;
        complex<double> beta = beta_abs * std::exp(complex<double>(0.0, phase));
        sum += run(complex<double>(alpha_abs, 0.0), beta).fidelity;
    }
    return sum / n_phases;
}

TeleportResult teleport_protocol(const TeleportConfig& config, complex<double> alpha,
                                 complex<double> beta) {
    return TeleportEngine(config).run(alpha, beta);
}

}  // namespace lde::cca
