#include "lde/sector_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace lde::oracle {

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    }
    return result;
}

SectorBasis SectorBasis::build(int n_sites, int n_up) {
    if (n_sites < 1 || n_sites > 24) {
        throw std::invalid_argument("sector basis limited to 1 <= N <= 24 sites");
    }
    if (n_up < 0 || n_up > n_sites) {
        throw std::invalid_argument("n_up out of range");
    }
    SectorBasis basis;
    basis.n_sites = n_sites;
    basis.n_up = n_up;
    basis.states.reserve(binomial(n_sites, n_up));

    if (n_up == 0) {
        basis.states.push_back(0);
        return basis;
    }
    // Gosper's hack: next integer with the same popcount, ascending.
    const std::uint32_t limit = (n_sites == 32) ? ~0u : (1u << n_sites);
    std::uint32_t v = (1u << n_up) - 1;
    while (v < limit) {
        basis.states.push_back(v);
        std::uint32_t c = v & -v;
        std::uint32_t r = v + c;
        if (r >= limit || c == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return basis;
}

std::size_t SectorBasis::index_of(std::uint32_t mask) const {
    auto it = std::lower_bound(states.begin(), states.end(), mask);
    if (it == states.end() || *it != mask) {
        throw std::out_of_range("mask not in sector basis");
    }
    return static_cast<std::size_t>(it - states.begin());
}

}  // namespace lde::oracle
