#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#define CHECK_CLOSE(a, b, tol) \
    CHECK(std::abs(static_cast<double>(a) - static_cast<double>(b)) <= (tol))

#include <cmath>
#include <complex>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "lde/cca_teleport.hpp"

using namespace lde;
using namespace lde::cca;
using std::complex;

namespace {

struct Rng {
    std::uint64_t state;
    double next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    complex<double> amp() { return {next() - 0.5, next() - 0.5}; }
};

}  // namespace

TEST_CASE("polariton energies") {
    CavityParams resonant{CavityParams::resonance_omega(1.0, 0.5), 1.5 + 0.61803398874989485,
                          1.0};
    // omega' chosen so detuning = 0.5 exactly
    resonant.omega = CavityParams::resonance_omega(1.0, 0.5);
    resonant.omega_prime = resonant.omega + 0.5;
    auto one = polariton_energies(resonant, 1);
    CHECK_CLOSE(one.vacuum == 0.0); CHECK(one.minus, 0.0, 1e-12);  // degenerate doublet

    auto two = polariton_energies(resonant, 2);
    double root = std::sqrt(1.0 * 1.0 + 0.5 * 0.5);
    CHECK_CLOSE(two.minus, 2.0 * root - std::sqrt(2.0 + 0.25)).epsilon(1e-12)); CavityParams simple{1.0, 1.0, 1.0}; // delta = 0 CHECK(polariton_energies(simple, 2).minus == doctest::Approx(2.0 - std::sqrt(2.0))); CHECK_THROWS(polariton_energies(simple, 0)); } TEST_CASE("two-level validity report") { CavityParams simple{1.0, 1.0, 1.0}; CHECK(two_level_validity(simple, 0.0, 0.0).pass); auto ok = two_level_validity(simple, 0.05, 0.0); CHECK(ok.coupling_ratio == doctest::Approx(0.05 / (2.0 - std::sqrt(2.0))).epsilon(1e-12)); CHECK(ok.coupling_ratio == doctest::Approx(0.0854).epsilon(1e-2)); CHECK(ok.pass); auto warn = two_level_validity(simple, 2.0 - std::sqrt(2.0), 0.0); CHECK(warn.coupling_ratio == doctest::Approx(1.0).epsilon(1e-12)); CHECK_FALSE(warn.pass); CHECK_FALSE(two_level_validity(simple, 0.0, 1.0).pass); // thermal ratio too big } TEST_CASE("thermal fidelity map limits") { auto lambdas = linspace(0.1, 1.0, 6); auto mus = linspace(1.0, 8.0, 6); auto hot = thermal_fidelity_map(12, lambdas, mus, 1e6); CHECK((hot.array() - 0.5).abs().maxCoeff() < 1e-6); auto cold = thermal_fidelity_map(12, {0.1}, {4.0}, 1e-9); CHECK(cold(0, 0) > 2.0 / 3.0); // pointwise nonincreasing in T auto t1 = thermal_fidelity_map(10, lambdas, mus, 0.01); auto t2 = thermal_fidelity_map(10, lambdas, mus, 0.02); CHECK(((t1 - t2).array() >= -1e-12).all()); CHECK_THROWS(thermal_fidelity_map(10, {0.0}, {4.0}, 0.1)); // lambda out of range CHECK_THROWS(thermal_fidelity_map(10, {0.5}, {9.0}, 0.1)); // mu out of range } TEST_CASE("ideal two-site channel teleports exactly") { TeleportConfig cfg; cfg.channel_length = 2; cfg.nu = 1e3; cfg.temperature = 0.0; TeleportEngine engine(cfg); CHECK(engine.t_star() == doctest::Approx(std::numbers::pi / 4e3)); Rng rng{314159}; for (int rep = 0; rep < 10; ++rep) { complex<double> a = rng.amp(), b = rng.amp(); double norm = std::sqrt(std::norm(a) + std::norm(b)); a /= norm; b /= norm; auto res = engine.run(a, b); CHECK(res.fidelity == doctest::Approx(1.0, 1e-6);
        CHECK_CLOSE(res.success_probability, 0.5, 1e-6);
        double total = 0.0;
        for (double p : res.outcome_probabilities) total += p;
        CHECK_CLOSE(total, 1.0, 1e-10);
    }

    // basis-state inputs
    CHECK_CLOSE(engine.run(1.0, 0.0).fidelity, 1.0, 1e-6);
    CHECK_CLOSE(engine.run(0.0, 1.0).fidelity, 1.0, 1e-6);
}

TEST_CASE("outcome probabilities ignore the global phase") {
    TeleportConfig cfg;
    cfg.channel_length = 6;
    cfg.lambda = 0.4;
    cfg.mu = 2.0;
    cfg.nu = 20.0;
    cfg.temperature = 0.01;
    TeleportEngine engine(cfg);

    complex<double> a(0.6, 0.2);
    complex<double> b(0.5, -0.4);
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    auto res1 = engine.run(a, b);
    complex<double> phase = std::exp(complex<double>(0.0, 1.234));
    auto res2 = engine.run(a * phase, b * phase);
    for (int o = 0; o < 4; ++o) {
        CHECK_CLOSE(res1.outcome_probabilities[o], res2.outcome_probabilities[o], 1e-12);
    }
    CHECK_CLOSE(res1.fidelity, res2.fidelity, 1e-12);
}

TEST_CASE("sector populations survive the evolution") {
    TeleportConfig cfg;
    cfg.channel_length = 6;
    cfg.lambda = 0.3;
    cfg.mu = 3.0;
    cfg.nu = 10.0;
    cfg.temperature = 0.05;
    auto res = TeleportEngine(cfg).run(std::sqrt(0.3), std::sqrt(0.7));
    double total = 0.0;
    for (double p : res.outcome_probabilities) total += p;
    CHECK_CLOSE(total, 1.0, 1e-10);
    CHECK_CLOSE(res.success_probability > 0.0); CHECK(res.fidelity >= 0.0); CHECK(res.fidelity <= 1.0); } TEST_CASE("matrix-exponential oracle matches the sector evolution at finite nu") { // three spins (sender + 2-site channel), T = 0, modest nu const double nu = 3.0; TeleportConfig cfg; cfg.channel_length = 2; cfg.nu = nu; cfg.temperature = 0.0; TeleportEngine engine(cfg); Rng rng{271828}; for (int rep = 0; rep < 4; ++rep) { complex<double> a = rng.amp(), b = rng.amp(); double norm = std::sqrt(std::norm(a) + std::norm(b)); a /= norm; b /= norm; // dense 8x8 flip-flop Hamiltonian H = -sum J (S+S- + S-S+), // bonds [nu, 1], bit i = site i Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(8, 8); const double bonds[2] = {nu, 1.0}; for (int m = 0; m < 8; ++m) { for (int bond = 0; bond < 2; ++bond) { int bits = (m >> bond) & 3; if (bits == 1 || bits == 2) h(m ^ (3 << bond), m) += -bonds[bond]; } } // channel ground state (|ud> + |du>)/sqrt2 on sites 1,2 Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8); auto set_amp = [&](int s0, int s1, int s2, complex<double> v) { psi[s0 | (s1 << 1) | (s2 << 2)] += v; }; double inv = 1.0 / std::sqrt(2.0); set_amp(1, 1, 0, a * inv); set_amp(1, 0, 1, a * inv); set_amp(0, 1, 0, b * inv); set_amp(0, 0, 1, b * inv); double tstar = std::numbers::pi / (4.0 * nu); Eigen::MatrixXcd u = (complex<double>(0.0, -1.0) * tstar * h).exp(); Eigen::VectorXcd evolved = u * psi; // outcome (up0, down1): project, reduce site 2, rotate down-amp by -i auto fidelity_of = [&](int s0, int s1, complex<double> down_phase, double& prob) { complex<double> amp_dn = 0.0, amp_up = 0.0; Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero(); for (int m = 0; m < 8; ++m) { if (((m >> 0) & 1) != s0 || ((m >> 1) & 1) != s1) continue; int bit2 = (m >> 2) & 1; (bit2 ? amp_up : amp_dn) = evolved[m]; } rho(0, 0) = amp_dn * std::conj(amp_dn); rho(0, 1) = amp_dn * std::conj(amp_up); rho(1, 0) = amp_up * std::conj(amp_dn); rho(1, 1) = amp_up * std::conj(amp_up); prob = rho(0, 0).real() + rho(1, 1).real(); Eigen::Matrix2cd corr = Eigen::Matrix2cd::Identity(); corr(0, 0) = down_phase; rho = corr * rho * corr.adjoint(); Eigen::Vector2cd phi(b, a); return (phi.adjoint() * rho * phi)(0, 0).real() / prob; }; double p_ud = 0.0, p_du = 0.0; double f_ud = fidelity_of(1, 0, complex<double>(0.0, -1.0), p_ud); double f_du = fidelity_of(0, 1, complex<double>(0.0, 1.0), p_du); auto res = engine.run(a, b); CHECK(res.outcome_probabilities[0b10], p_ud, 1e-10);
        CHECK_CLOSE(res.outcome_probabilities[0b01], p_du, 1e-10);
        CHECK_CLOSE(res.fidelity_ud, f_ud, 1e-10);
        CHECK_CLOSE(res.fidelity_du, f_du, 1e-10);
        CHECK_CLOSE(res.fidelity, (p_ud * f_ud + p_du * f_du) / (p_ud + p_du), 1e-10);
    }
}

TEST_CASE("phase-averaged fidelity is symmetric under alpha <-> beta in the ideal case") {
    TeleportConfig cfg;
    cfg.channel_length = 2;
    cfg.nu = 1e3;
    cfg.temperature = 0.0;
    TeleportEngine engine(cfg);
    for (double alpha : {0.2, 0.35, 0.6}) {
        double mirrored = std::sqrt(1.0 - alpha * alpha);
        CHECK_CLOSE(engine.phase_averaged_fidelity(alpha, 8), engine.phase_averaged_fidelity(mirrored, 8), 1e-9);
    }
}

TEST_CASE("teleport configuration guards") {
    TeleportConfig cfg;
    cfg.channel_length = 14;  // 15 spins total
    CHECK_THROWS(TeleportEngine{cfg});
    cfg.channel_length = 4;
    cfg.lambda = 0.5;  // lambda-mu needs N >= 6
    cfg.mu = 2.0;
    CHECK_THROWS(TeleportEngine{cfg});
    cfg.channel_length = 6;
    cfg.nu = -1.0;
    CHECK_THROWS(TeleportEngine{cfg});
    cfg.nu = 10.0;
    TeleportEngine engine(cfg);
    CHECK_THROWS(engine.run(1.0, 1.0));  // not normalized
}
