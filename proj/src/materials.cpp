#include "decem/materials.hpp"

#include <cmath>

#include "decem/errors.hpp"

namespace decem {

MaterialMap build_material_map(const std::vector<MaterialRegion>& regions,
                               const SimplicialComplex& sc, std::optional<double> alpha) {
    for (const auto& r : regions) {
        if (r.sigma < 0.0)
            throw config_error("NegativeConductivity", "region '" + r.name + "' has sigma < 0");
        if (r.eps_r < 1e-6 || r.mu_r <= 0.0)
            throw config_error("NonPositiveMaterial",
                               "region '" + r.name + "' needs eps_r >= 1e-6 and mu_r > 0");
    }

    MaterialMap map;
    const int nt = sc.n3();
    map.eps_r.assign(nt, 1.0);
    map.mu_r.assign(nt, 1.0);
    map.sigma.assign(nt, 0.0);
    map.region_of_tet.assign(nt, -1); // -1 = default vacuum
    if (alpha) {
        if (*alpha == 0.0) throw config_error("NonPositiveMaterial", "gauge alpha must be nonzero");
        map.alpha = *alpha;
    }

    for (int t = 0; t < nt; ++t) {
        const Vec3 c = sc.tet_centroid(t);
        for (std::size_t r = 0; r < regions.size(); ++r) {
            if (regions[r].contains(c)) {
                map.eps_r[t] = regions[r].eps_r;
                map.mu_r[t] = regions[r].mu_r;
                map.sigma[t] = regions[r].sigma;
                map.region_of_tet[t] = static_cast<int>(r);
            }
        }
    }
    return map;
}

ResolvedMaterials resolve_materials(const MaterialMap& map, double omega) {
    if (omega <= 0.0) throw solver_error("ZeroFrequency", "materials require omega > 0");
    const int nt = map.n_tets();
    ResolvedMaterials rm;
    rm.eps.resize(nt);
    rm.mu_inv.resize(nt);
    rm.chi.resize(nt);
    for (int t = 0; t < nt; ++t) {
        rm.eps[t] = map.eps(t, omega);
        rm.mu_inv[t] = 1.0 / map.mu(t);
        rm.chi[t] = map.chi(t, omega);
        if (rm.eps[t].real() <= 0.0 || map.mu(t) <= 0.0 || rm.chi[t] == cplx(0.0, 0.0))
            throw solver_error("NonPositiveMaterial",
                               "tet " + std::to_string(t) + " has invalid material at omega=" +
                                   std::to_string(omega));
    }
    return rm;
}

} // namespace decem
