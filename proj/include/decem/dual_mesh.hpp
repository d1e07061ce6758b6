#pragma once

#include <vector>

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Centroid-based dual mesh metric data. Dual volumes use the barycentric
// quarter-volume measure: the dual cell of node i gets V_tet/4 from every
// incident tet, so they partition the mesh volume exactly. Boundary nodes
// simply sum over the tets that exist (their dual cells are incomplete).
struct DualMesh {
    std::vector<Vec3> dual_node_coords; // tet centroids, one per tet
    VecXd dual_volumes;                 // per primal node, m^3
};

DualMesh build_dual(const SimplicialComplex& complex);

} // namespace decem
