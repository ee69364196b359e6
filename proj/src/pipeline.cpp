#include "lde/pipeline.hpp"

#include "lde/free_fermion.hpp"

namespace lde {

ent::EndToEndReport end_to_end(const std::vector<double>& bonds, double temperature) {
    auto spectrum = fermion::diagonalize(chains::build_adjacency(bonds));
    auto corr = fermion::end_correlator(spectrum, temperature);
    auto fid = ent::fidelity_from_x(corr.x);

    ent::EndToEndReport report;
    report.n = static_cast<int>(bonds.size()) + 1;
    report.temperature = temperature;
    report.x = corr.x;
    report.concurrence = ent::concurrence_from_x(corr.x);
    report.full_fraction = fid.full_fraction;
    report.fidelity = fid.fidelity;
    report.gap = fermion::many_body_gap(spectrum);
    report.degenerate = corr.degenerate;
    return report;
}

ent::EndToEndReport end_to_end(const chains::CouplingPattern& pattern, int n_sites,
                               double temperature) {
    return end_to_end(chains::build_couplings(pattern, n_sites), temperature);
}

}  // namespace lde
