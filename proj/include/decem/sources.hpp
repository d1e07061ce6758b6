#pragma once

#include <vector>

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Delta-gap port: an impressed line current of I0 amps along a connected open
// chain of primal edges. The path runs from the "-" terminal to the "+"
// terminal; the impressed current flows along the path direction inside the
// source, and the same chain is used as the voltage contour.
struct PortSpec {
    std::vector<int> path_nodes; // >= 2 nodes; consecutive pairs must be mesh edges
    cplx current = 1.0;          // I0, A
};

// J lives on the dual faces pierced by primal edges (length N1, A per dual
// face); rho on dual volumes (length N0, C). Built so charge continuity
// -(d0)^T J = i omega rho holds exactly.
struct SourceCochains {
    VecXc J;
    VecXc rho;
    bool closed_loop = false; // diagnostic: a closed path carries no charge
};

SourceCochains build_source(const PortSpec& port, double omega, const SimplicialComplex& complex,
                            const IncidenceSet& incidence);

} // namespace decem
