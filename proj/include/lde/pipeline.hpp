#pragma once

#include "lde/chain_models.hpp"
#include "lde/entanglement.hpp"

namespace lde {

/// Full free-fermion pipeline: couplings -> adjacency -> spectrum ->
/// (x, concurrence, fidelity, gap) at temperature T (units of J).
ent::EndToEndReport end_to_end(const chains::CouplingPattern& pattern, int n_sites,
                               double temperature);

/// Same pipeline on an explicit bond list (disordered samples etc.).
ent::EndToEndReport end_to_end(const std::vector<double>& bonds, double temperature);

}  // namespace lde
