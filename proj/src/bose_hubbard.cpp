#include "lde/bose_hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lde/entanglement.hpp"
#include "lde/tridiag_eig.hpp"

namespace lde::bh {

namespace {

constexpr std::size_t kBasisLimit = 200000;
constexpr int kDenseDimLimit = 4000;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void validate(const BHParams& p) {
    if (p.n_sites < 2) throw std::invalid_argument("Bose-Hubbard chain needs >= 2 sites");
    if (p.n_bosons < 1) throw std::invalid_argument("need at least one boson");
    if (!(p.u > 0.0)) throw std::invalid_argument("on-site repulsion U must be positive");
    if (!(p.t > 0.0)) throw std::invalid_argument("hopping t must be positive");
    if (p.n_max < std::min(p.n_bosons, 4)) {
        throw std::invalid_argument("occupancy cap below min(n, 4) truncation guard");
    }
    if (p.fields.size() != 0 && p.fields.size() != p.n_sites) {
        throw std::invalid_argument("field vector length must match n_sites");
    }
    for (Eigen::Index i = 0; i < p.fields.size(); ++i) {
        if (!(p.fields[i] >= 0.0) || !std::isfinite(p.fields[i])) {
            throw std::invalid_argument("local fields must be finite and >= 0");
        }
    }
}

double field_at(const BHParams& p, int site) {
    return p.fields.size() == 0 ? 0.0 : p.fields[site];
}

}  // namespace

std::uint64_t BoseBasis::pack(const std::vector<std::uint8_t>& occ) const {
    std::uint64_t key = 0;
    for (std::uint8_t m : occ) key = (key << 4) | m;
    return key;
}

BoseBasis BoseBasis::build(int n_sites, int n_bosons, int n_max) {
    if (n_sites < 1 || n_sites > 16) {
        throw std::invalid_argument("Bose basis limited to 1..16 sites");
    }
    if (n_max < 0 || n_max > 15) throw std::invalid_argument("n_max out of range");
    BoseBasis basis;
    basis.n_sites = n_sites;
    basis.n_bosons = n_bosons;
    basis.n_max = n_max;

    std::vector<std::uint8_t> occ(n_sites, 0);
    // Lexicographic enumeration of restricted compositions.
    auto recurse = [&](auto&& self, int site, int left) -> void {
        if (site == n_sites - 1) {
            if (left <= n_max) {
                occ[site] = static_cast<std::uint8_t>(left);
                basis.states.push_back(occ);
            }
            return;
        }
        int cap = std::min(n_max, left);
        for (int m = 0; m <= cap; ++m) {
            occ[site] = static_cast<std::uint8_t>(m);
            self(self, site + 1, left - m);
        }
    };
    recurse(recurse, 0, n_bosons);
    if (basis.states.size() > kBasisLimit) {
        throw std::invalid_argument("Bose basis exceeds the 2e5 size guard");
    }

    basis.keys_.reserve(basis.states.size());
    for (const auto& s : basis.states) basis.keys_.push_back(basis.pack(s));
    // Lexicographic enumeration yields ascending packed keys already.
    return basis;
}

std::size_t BoseBasis::index_of(const std::vector<std::uint8_t>& occ) const {
    std::uint64_t key = pack(occ);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) throw std::out_of_range("state not in Bose basis");
    return static_cast<std::size_t>(it - keys_.begin());
}

Eigen::VectorXd superlattice_fields(int n_sites, double eps) {
    if (n_sites % 3 != 0) {
        throw std::invalid_argument("super-lattice profile requires N divisible by 3");
    }
    Eigen::VectorXd fields = Eigen::VectorXd::Zero(n_sites);
    for (int site = 2; site <= n_sites; site += 3) fields[site - 1] = eps;  // 1-indexed 2,5,8,...
    return fields;
}

Eigen::VectorXd end_probe_fields(int n_sites, double eps) {
    if (n_sites < 4) throw std::invalid_argument("end-probe profile requires N >= 4");
    Eigen::VectorXd fields = Eigen::VectorXd::Zero(n_sites);
    fields[1] = eps;
    fields[n_sites - 2] = eps;
    return fields;
}

Eigen::SparseMatrix<double> build_bh_hamiltonian(const BHParams& params,
                                                 const BoseBasis& basis) {
    validate(params);
    if (basis.n_sites != params.n_sites || basis.n_bosons != params.n_bosons) {
        throw std::invalid_argument("basis does not match parameters");
    }
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(basis.size() * static_cast<std::size_t>(params.n_sites + 1));

    std::vector<std::uint8_t> hopped;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& occ = basis.states[i];
        double diag = 0.0;
        for (int s = 0; s < params.n_sites; ++s) {
            double m = occ[s];
            diag += 0.5 * params.u * m * (m - 1.0) + field_at(params, s) * m;
        }
        triplets.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i),
                              diag);
        for (int s = 0; s < params.n_sites - 1; ++s) {
            // b_s^dag b_{s+1}: build each undirected pair once from the higher key.
            if (occ[s + 1] >= 1 && occ[s] + 1 <= params.n_max) {
                hopped = occ;
                hopped[s] += 1;
                hopped[s + 1] -= 1;
                auto j = static_cast<Eigen::Index>(basis.index_of(hopped));
                double amp = -params.t * std::sqrt(static_cast<double>(occ[s + 1])) *
                             std::sqrt(static_cast<double>(occ[s] + 1));
                triplets.emplace_back(static_cast<Eigen::Index>(i), j, amp);
                triplets.emplace_back(j, static_cast<Eigen::Index>(i), amp);
            }
        }
    }
    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(triplets.begin(), triplets.end());
    return h;
}

namespace {

// Lanczos with full reorthogonalization for the two lowest levels.
void lanczos_lowest(const Eigen::SparseMatrix<double>& h, double& e0, double& e1,
                    Eigen::VectorXd& ground) {
    const Eigen::Index dim = h.rows();
    const int max_iter = static_cast<int>(std::min<Eigen::Index>(dim, 400));

    std::uint64_t rng = 0x5eed5eed5eedULL;
    Eigen::VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = static_cast<double>(splitmix64(rng) >> 11) * 0x1.0p-53 - 0.5;
    }
    v.normalize();

    std::vector<Eigen::VectorXd> vs{v};
    std::vector<double> alpha, beta;
    double prev_e0 = 0.0, prev_e1 = 0.0;

    for (int j = 0; j < max_iter; ++j) {
        Eigen::VectorXd w = h * vs.back();
        if (j > 0) w -= beta.back() * vs[j - 1];
        double a = vs.back().dot(w);
        alpha.push_back(a);
        w -= a * vs.back();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : vs) w -= u.dot(w) * u;
        }
        double b = w.norm();

        if (j >= 2 || b < 1e-13) {
            Tridiagonal t{alpha, beta};
            TridiagEigen ritz = eigh_tridiagonal(t);
            double r0 = ritz.values[0];
            double r1 = ritz.values.size() > 1 ? ritz.values[1] : r0;
            bool tiny_residual = b < 1e-13;
            bool settled = j >= 3 && std::abs(r0 - prev_e0) < 1e-13 * (1.0 + std::abs(r0)) &&
                           std::abs(r1 - prev_e1) < 1e-11 * (1.0 + std::abs(r1));
            prev_e0 = r0;
            prev_e1 = r1;
            if (tiny_residual || settled || j == max_iter - 1) {
                e0 = r0;
                e1 = r1;
                ground = Eigen::VectorXd::Zero(dim);
                for (std::size_t k = 0; k < vs.size(); ++k) {
                    ground += ritz.vectors(static_cast<Eigen::Index>(k), 0) * vs[k];
                }
                ground.normalize();
                return;
            }
        }
        if (b < 1e-13) break;
        beta.push_back(b);
        vs.push_back(w / b);
    }
    throw std::runtime_error("Lanczos failed to converge");
}

BHGroundState solve(const BHParams& params, EigenMethod method) {
    BHGroundState out;
    out.basis = BoseBasis::build(params.n_sites, params.n_bosons, params.n_max);
    Eigen::SparseMatrix<double> h = build_bh_hamiltonian(params, out.basis);

    bool dense = method == EigenMethod::Dense ||
                 (method == EigenMethod::Auto && h.rows() <= kDenseDimLimit);
    if (dense) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver((Eigen::MatrixXd(h)));
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("Bose-Hubbard dense eigensolver failed");
        }
        out.energy = solver.eigenvalues()[0];
        out.first_excited = solver.eigenvalues()[1];
        out.amplitudes = solver.eigenvectors().col(0);
    } else {
        lanczos_lowest(h, out.energy, out.first_excited, out.amplitudes);
    }
    return out;
}

}  // namespace

BHGroundState bh_ground_state(const BHParams& params, EigenMethod method) {
    return solve(params, method);
}

double bh_gap(const BHParams& params, EigenMethod method) {
    BHGroundState gs = solve(params, method);
    return gs.first_excited - gs.energy;
}

EndEntanglement end_site_entanglement(const BHParams& params, EigenMethod method) {
    BHGroundState gs = bh_ground_state(params, method);
    const int n = params.n_sites;
    const int d = params.n_max + 1;

    // Two-site reduced state of sites (1, N), index a*d + b.
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(d * d, d * d);
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, double>>> groups;
    groups.reserve(gs.basis.size());
    for (std::size_t i = 0; i < gs.basis.size(); ++i) {
        const auto& occ = gs.basis.states[i];
        std::uint64_t key = 0;
        for (int s = 1; s < n - 1; ++s) key = (key << 4) | occ[s];
        int local = occ[0] * d + occ[n - 1];
        groups[key].emplace_back(local, gs.amplitudes[static_cast<Eigen::Index>(i)]);
    }
    for (const auto& [key, entries] : groups) {
        for (const auto& [la, va] : entries) {
            for (const auto& [lb, vb] : entries) rho(la, lb) += va * vb;
        }
    }

    EndEntanglement result;
    result.log_negativity = ent::log_negativity(rho.cast<std::complex<double>>(), d, d);

    Eigen::Matrix4d block;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    block(a * 2 + b, a2 * 2 + b2) = rho(a * d + b, a2 * d + b2);
    result.projection_weight = block.trace();
    if (result.projection_weight < 1e-12) {
        throw std::runtime_error("end-site {0,1} projection weight below 1e-12");
    }
    block /= result.projection_weight;
    result.qubit_concurrence = ent::wootters_concurrence(block.cast<std::complex<double>>());
    return result;
}

EffectiveMapping effective_spin_couplings(const BHParams& params) {
    validate(params);
    const int n = params.n_sites;
    constexpr double kFieldTol = 1e-12;

    std::vector<int> spin_sites;   // zero-field sites, in order
    std::vector<int> field_sites;  // strong-field sites
    for (int s = 0; s < n; ++s) {
        if (field_at(params, s) > kFieldTol) {
            field_sites.push_back(s);
        } else {
            spin_sites.push_back(s);
        }
    }
    if (field_sites.empty()) {
        throw std::invalid_argument("effective mapping needs at least one field site");
    }
    for (std::size_t i = 0; i < field_sites.size(); ++i) {
        if (field_sites[i] == 0 || field_sites[i] == n - 1) {
            throw std::invalid_argument("strong-field sites must not sit at the chain ends");
        }
        if (i + 1 < field_sites.size() && field_sites[i + 1] == field_sites[i] + 1) {
            throw std::invalid_argument("strong-field sites must not be adjacent");
        }
    }

    EffectiveMapping map;
    map.n_spins = static_cast<int>(spin_sites.size());
    std::vector<double> ratios;  // in units of the direct bond 2t
    double min_eps = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < spin_sites.size(); ++i) {
        int gap = spin_sites[i + 1] - spin_sites[i];
        if (gap == 1) {
            ratios.push_back(1.0);
        } else if (gap == 2) {
            double eps = field_at(params, spin_sites[i] + 1);
            min_eps = std::min(min_eps, eps);
            ratios.push_back(params.t / eps);  // (2t^2/eps) / (2t)
        } else {
            throw std::invalid_argument(
                "second-order mapping supports at most one field site between spins");
        }
    }
    map.lambda = params.t / min_eps;
    map.pattern = chains::CouplingPattern::custom(std::move(ratios), 2.0 * params.t);

    std::ostringstream warn;
    if (!(params.t < min_eps)) {
        warn << "hopping t is not small against the weakest field eps=" << min_eps << "; ";
    }
    double max_eps = 0.0;
    for (int s : field_sites) max_eps = std::max(max_eps, field_at(params, s));
    if (!(max_eps < params.u)) {
        warn << "field eps=" << max_eps << " is not small against U=" << params.u << "; ";
    }
    map.warning = warn.str();
    map.regime_ok = map.warning.empty();
    return map;
}

}  // namespace lde::bh
