#pragma once

#include <cstdint>
#include <vector>

namespace lde::oracle {

/// Ordered basis of one fixed-magnetization sector: all N-bit masks with
/// popcount n_up, ascending as integers.  Bit i set = up spin at site i.
struct SectorBasis {
    int n_sites = 0;
    int n_up = 0;
    std::vector<std::uint32_t> states;

    static SectorBasis build(int n_sites, int n_up);

    std::size_t size() const { return states.size(); }
    /// Binary search; the mask must belong to the sector.
    std::size_t index_of(std::uint32_t mask) const;
};

/// binomial(n, k) as size_t; n <= 32.
std::size_t binomial(int n, int k);

}  // namespace lde::oracle
