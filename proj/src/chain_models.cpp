#include "lde/chain_models.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lde::chains {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_lambda(double lambda) {
    require(lambda > 0.0 && lambda <= 1.0, "pattern requires 0 < lambda <= 1");
}

// Alternating bracket J/2 * [(1+lambda) + (-1)^i (1-lambda)], 1-indexed bond i:
// lambda*J on odd bonds, J on even bonds.
double alternating_bond(int i, double lambda, double j) {
    return (i % 2 == 1) ? lambda * j : j;
}

}  // namespace

CouplingPattern CouplingPattern::uniform(double j) {
    CouplingPattern p;
    p.kind = PatternKind::Uniform;
    p.j = j;
    return p;
}

CouplingPattern CouplingPattern::alternating(double lambda, double j) {
    check_lambda(lambda);
    CouplingPattern p;
    p.kind = PatternKind::Alternating;
    p.lambda = lambda;
    p.j = j;
    return p;
}

CouplingPattern CouplingPattern::hybrid_lde(double lambda, int n_tilde, double j) {
    check_lambda(lambda);
    require(n_tilde >= 2, "hybrid pattern requires n_tilde >= 2");
    CouplingPattern p;
    p.kind = PatternKind::HybridLDE;
    p.lambda = lambda;
    p.n_tilde = n_tilde;
    p.j = j;
    return p;
}

CouplingPattern CouplingPattern::end_probe(double lambda, double j) {
    check_lambda(lambda);
    CouplingPattern p;
    p.kind = PatternKind::EndProbe;
    p.lambda = lambda;
    p.j = j;
    return p;
}

CouplingPattern CouplingPattern::lambda_mu(double lambda, double mu, double j) {
    check_lambda(lambda);
    require(mu >= 1.0, "lambda-mu pattern requires mu >= 1");
    CouplingPattern p;
    p.kind = PatternKind::LambdaMu;
    p.lambda = lambda;
    p.mu = mu;
    p.j = j;
    return p;
}

CouplingPattern CouplingPattern::custom(std::vector<double> ratios, double j) {
    require(!ratios.empty(), "custom pattern requires at least one bond ratio");
    for (double r : ratios) require(r > 0.0, "custom bond ratios must be positive");
    CouplingPattern p;
    p.kind = PatternKind::Custom;
    p.ratios = std::move(ratios);
    p.j = j;
    return p;
}

std::vector<double> build_couplings(const CouplingPattern& pattern, int n_sites) {
    require(n_sites >= 2, "chain needs at least 2 sites");
    require(std::isfinite(pattern.j) && pattern.j > 0.0, "energy scale J must be positive");
    const int nb = n_sites - 1;
    const double j = pattern.j;
    std::vector<double> bonds(nb, j);

    switch (pattern.kind) {
        case PatternKind::Uniform:
            break;
        case PatternKind::Alternating: {
            require(n_sites % 2 == 0, "alternating pattern requires an even number of sites");
            for (int i = 1; i <= nb; ++i) bonds[i - 1] = alternating_bond(i, pattern.lambda, j);
            break;
        }
        case PatternKind::HybridLDE: {
            const int nt = pattern.n_tilde;
            require(n_sites % 2 == 0, "hybrid pattern requires an even number of sites");
            require(nt >= 2 && nt <= n_sites / 2, "hybrid pattern requires 2 <= n_tilde <= N/2");
            // With global bond parity, an odd n_tilde < N/2 puts a strong bond at
            // the junction mirror and breaks the weak-ended segment structure.
            require(nt % 2 == 0 || nt == n_sites / 2,
                    "hybrid pattern requires even n_tilde (or n_tilde = N/2) so both "
                    "alternating segments end on weak bonds");
            for (int i = 1; i <= nb; ++i) {
                bool alternating = (i <= nt - 1) || (i >= n_sites - nt);
                bonds[i - 1] = alternating ? alternating_bond(i, pattern.lambda, j) : j;
            }
            break;
        }
        case PatternKind::EndProbe: {
            require(n_sites >= 3, "end-probe pattern requires at least 3 sites");
            bonds.front() = pattern.lambda * j;
            bonds.back() = pattern.lambda * j;
            break;
        }
        case PatternKind::LambdaMu: {
            require(n_sites >= 6, "lambda-mu pattern requires at least 6 sites");
            bonds.front() = pattern.lambda * j;
            bonds.back() = pattern.lambda * j;
            bonds[1] = pattern.mu * j;
            bonds[nb - 2] = pattern.mu * j;
            break;
        }
        case PatternKind::Custom: {
            require(static_cast<int>(pattern.ratios.size()) == nb,
                    "custom pattern has wrong bond count for this chain length");
            for (int i = 0; i < nb; ++i) bonds[i] = pattern.ratios[i] * j;
            break;
        }
    }
    return bonds;
}

namespace {

// splitmix64: the counter-based stream underlying apply_disorder.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t& state) {
    // 53 random bits -> [0,1), then map to [-1, 1).
    double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

std::vector<double> apply_disorder(const std::vector<double>& bonds,
                                   const DisorderSpec& spec, int sample_index) {
    require(spec.chi_bar >= 0.0 && spec.chi_bar < 1.0,
            "disorder requires 0 <= chi_bar < 1");
    require(sample_index >= 0 && sample_index < spec.samples,
            "sample_index out of range");
    std::uint64_t state = spec.seed;
    state = splitmix64(state) ^ (0x6a09e667f3bcc909ULL + static_cast<std::uint64_t>(sample_index));
    splitmix64(state);  // decorrelate adjacent sample streams
    std::vector<double> out(bonds.size());
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        out[i] = bonds[i] * (1.0 + spec.chi_bar * uniform_pm1(state));
    }
    return out;
}

Tridiagonal build_adjacency(const std::vector<double>& bonds) {
    for (double b : bonds) require(std::isfinite(b), "bond strengths must be finite");
    Tridiagonal m;
    m.diag.assign(bonds.size() + 1, 0.0);
    m.off.resize(bonds.size());
    for (std::size_t i = 0; i < bonds.size(); ++i) m.off[i] = bonds[i] / 2.0;
    return m;
}

// --------------------------------------------------------------------------
// Pattern grammar.
// --------------------------------------------------------------------------

namespace {

double parse_double(std::string_view s, std::string_view what) {
    double v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::invalid_argument("invalid number for " + std::string(what) + ": '" +
                                    std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

struct KeyValues {
    double lambda = -1.0, mu = -1.0;
    int n_tilde = -1;
    double j = 1.0;
};

KeyValues parse_kv(std::string_view body, std::string_view pattern_name) {
    KeyValues kv;
    if (body.empty()) return kv;
    for (auto item : split(body, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("expected key=value in pattern '" +
                                        std::string(pattern_name) + "': '" +
                                        std::string(item) + "'");
        }
        auto key = item.substr(0, eq);
        auto val = item.substr(eq + 1);
        if (key == "lambda") {
            kv.lambda = parse_double(val, key);
        } else if (key == "mu") {
            kv.mu = parse_double(val, key);
        } else if (key == "ntilde") {
            kv.n_tilde = static_cast<int>(parse_double(val, key));
        } else {
            throw std::invalid_argument("unknown pattern parameter '" + std::string(key) + "'");
        }
    }
    return kv;
}

}  // namespace

CouplingPattern parse_pattern(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view body = colon == std::string_view::npos ? std::string_view{}
                                                            : text.substr(colon + 1);
    if (name == "uniform") {
        if (!body.empty()) throw std::invalid_argument("uniform pattern takes no parameters");
        return CouplingPattern::uniform();
    }
    if (name == "custom") {
        std::vector<double> ratios;
        for (auto item : split(body, ',')) ratios.push_back(parse_double(item, "custom ratio"));
        return CouplingPattern::custom(std::move(ratios));
    }
    KeyValues kv = parse_kv(body, name);
    if (name == "alternating") {
        if (kv.lambda < 0) throw std::invalid_argument("alternating pattern needs lambda=");
        return CouplingPattern::alternating(kv.lambda);
    }
    if (name == "hybrid") {
        if (kv.lambda < 0 || kv.n_tilde < 0)
            throw std::invalid_argument("hybrid pattern needs lambda= and ntilde=");
        return CouplingPattern::hybrid_lde(kv.lambda, kv.n_tilde);
    }
    if (name == "endprobe") {
        if (kv.lambda < 0) throw std::invalid_argument("endprobe pattern needs lambda=");
        return CouplingPattern::end_probe(kv.lambda);
    }
    if (name == "lambdamu") {
        if (kv.lambda < 0 || kv.mu < 0)
            throw std::invalid_argument("lambdamu pattern needs lambda= and mu=");
        return CouplingPattern::lambda_mu(kv.lambda, kv.mu);
    }
    throw std::invalid_argument("unknown pattern kind '" + std::string(name) + "'");
}

std::string to_string(const CouplingPattern& pattern) {
    std::ostringstream out;
    switch (pattern.kind) {
        case PatternKind::Uniform:
            out << "uniform";
            break;
        case PatternKind::Alternating:
            out << "alternating:lambda=" << pattern.lambda;
            break;
        case PatternKind::HybridLDE:
            out << "hybrid:lambda=" << pattern.lambda << ",ntilde=" << pattern.n_tilde;
            break;
        case PatternKind::EndProbe:
            out << "endprobe:lambda=" << pattern.lambda;
            break;
        case PatternKind::LambdaMu:
            out << "lambdamu:lambda=" << pattern.lambda << ",mu=" << pattern.mu;
            break;
        case PatternKind::Custom: {
            out << "custom:";
            for (std::size_t i = 0; i < pattern.ratios.size(); ++i) {
                if (i) out << ',';
                out << pattern.ratios[i];
            }
            break;
        }
    }
    return out.str();
}

}  // namespace lde::chains
