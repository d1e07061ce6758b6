#include "decem/sources.hpp"

#include "decem/errors.hpp"

namespace decem {

SourceCochains build_source(const PortSpec& port, double omega, const SimplicialComplex& sc,
                            const IncidenceSet& inc) {
    if (omega <= 0.0) throw solver_error("ZeroFrequency", "sources require omega > 0");
    if (port.path_nodes.size() < 2) throw config_error("EmptyPath", "port path needs >= 2 nodes");

    SourceCochains src;
    src.J = VecXc::Zero(sc.n1());
    for (std::size_t i = 0; i + 1 < port.path_nodes.size(); ++i) {
        const int a = port.path_nodes[i];
        const int b = port.path_nodes[i + 1];
        const int e = sc.edge_index(a, b);
        if (e < 0)
            throw config_error("EmptyPath", "port segment (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") is not a mesh edge");
        // +I0 when the path direction agrees with the stored low->high edge.
        src.J[e] += (a < b) ? port.current : -port.current;
    }

    // rho = -(d0)^T J / (i omega); nonzero only at the open chain's endpoints.
    const VecXc minus_div = -(cast_cplx(inc.d0).transpose() * src.J);
    src.rho = minus_div / cplx(0.0, omega);
    src.closed_loop = port.path_nodes.front() == port.path_nodes.back();
    return src;
}

} // namespace decem
