#include "decem/dual_mesh.hpp"

namespace decem {

DualMesh build_dual(const SimplicialComplex& sc) {
    DualMesh dual;
    dual.dual_node_coords.reserve(sc.n3());
    for (int t = 0; t < sc.n3(); ++t) dual.dual_node_coords.push_back(sc.tet_centroid(t));

    dual.dual_volumes = VecXd::Zero(sc.n0());
    for (int t = 0; t < sc.n3(); ++t) {
        const double quarter = 0.25 * sc.tet_volume(t);
        for (int v : sc.tets[t]) dual.dual_volumes[v] += quarter;
    }
    return dual;
}

} // namespace decem
