#include "decem/hodge.hpp"

#include <array>

#include "decem/errors.hpp"

namespace decem {

namespace {
// Local sub-simplices in the tet's stored (global canonical) vertex order.
// Keeping local tuples ordered by ascending global index makes the local
// Whitney basis coincide with the global one, so no sign table is needed:
// the stored tet order is sorted except possibly the last two entries.
constexpr std::array<std::array<int, 2>, 6> kLocalEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 3>, 4> kLocalFaces = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
} // namespace

HodgeSet assemble_hodges(const SimplicialComplex& sc, const DualMesh& dual,
                         const ResolvedMaterials& mat) {
    if (dual.dual_volumes.size() != sc.n0() || mat.eps.size() != sc.n3())
        throw solver_error("DimensionMismatch", "dual mesh / materials do not match the complex");

    HodgeSet h;
    std::vector<TripletC> eps_trips, chi_trips;
    std::vector<TripletR> mu_trips;
    eps_trips.reserve(sc.n3() * 36);
    mu_trips.reserve(sc.n3() * 16);
    chi_trips.reserve(sc.n3() * 16);

    for (int t = 0; t < sc.n3(); ++t) {
        const auto& g = sc.tets[t];
        const BarycentricFrame frame = barycentric_gradients(sc, t);
        const TetQuadrature quad =
            tet_quadrature_deg2(sc.vertices[g[0]], sc.vertices[g[1]], sc.vertices[g[2]],
                                sc.vertices[g[3]]);

        // Local tuples reordered by ascending global index (only the stored
        // 3<->2 swap can violate it).
        std::array<std::array<int, 2>, 6> edges = kLocalEdges;
        for (auto& e : edges)
            if (g[e[0]] > g[e[1]]) std::swap(e[0], e[1]);
        std::array<std::array<int, 3>, 4> faces = kLocalFaces;
        for (auto& f : faces) {
            if (g[f[0]] > g[f[1]]) std::swap(f[0], f[1]);
            if (g[f[1]] > g[f[2]]) std::swap(f[1], f[2]);
            if (g[f[0]] > g[f[1]]) std::swap(f[0], f[1]);
        }

        // Edge-edge mass (quadratic integrand, 4-point rule exact).
        std::array<Vec3, 6> w1;
        std::array<Vec3, 4> w2;
        Eigen::Matrix<double, 6, 6> edge_mass = Eigen::Matrix<double, 6, 6>::Zero();
        Eigen::Matrix<double, 4, 4> face_mass = Eigen::Matrix<double, 4, 4>::Zero();
        Eigen::Matrix<double, 4, 4> node_mass = Eigen::Matrix<double, 4, 4>::Zero();
        for (const Vec3& p : quad.points) {
            for (int i = 0; i < 6; ++i) w1[i] = eval_whitney1(frame, edges[i][0], edges[i][1], p);
            for (int i = 0; i < 4; ++i)
                w2[i] = eval_whitney2(frame, faces[i][0], faces[i][1], faces[i][2], p);
            const auto l = frame.lambdas(p);
            for (int i = 0; i < 6; ++i)
                for (int j = i; j < 6; ++j) edge_mass(i, j) += quad.weight * w1[i].dot(w1[j]);
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    face_mass(i, j) += quad.weight * w2[i].dot(w2[j]);
                    node_mass(i, j) += quad.weight * l[i] * l[j];
                }
        }

        std::array<int, 6> ge;
        for (int i = 0; i < 6; ++i) ge[i] = sc.edge_index(g[edges[i][0]], g[edges[i][1]]);
        std::array<int, 4> gf;
        for (int i = 0; i < 4; ++i)
            gf[i] = sc.face_index(g[faces[i][0]], g[faces[i][1]], g[faces[i][2]]);

        const cplx eps = mat.eps[t];
        const double mu_inv = mat.mu_inv[t];
        const cplx chi = mat.chi[t];
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) {
                const cplx v = eps * edge_mass(i, j);
                eps_trips.emplace_back(ge[i], ge[j], v);
                if (i != j) eps_trips.emplace_back(ge[j], ge[i], v);
            }
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                const double vm = mu_inv * face_mass(i, j);
                mu_trips.emplace_back(gf[i], gf[j], vm);
                if (i != j) mu_trips.emplace_back(gf[j], gf[i], vm);
            }
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                const cplx vc = chi * node_mass(i, j);
                chi_trips.emplace_back(g[i], g[j], vc);
                if (i != j) chi_trips.emplace_back(g[j], g[i], vc);
            }
    }

    h.star_eps1.resize(sc.n1(), sc.n1());
    h.star_eps1.setFromTriplets(eps_trips.begin(), eps_trips.end());
    h.star_mu_inv2.resize(sc.n2(), sc.n2());
    h.star_mu_inv2.setFromTriplets(mu_trips.begin(), mu_trips.end());
    h.star_chi0_galerkin.resize(sc.n0(), sc.n0());
    h.star_chi0_galerkin.setFromTriplets(chi_trips.begin(), chi_trips.end());

    // Diagonal chi pair from the quarter-volume dual cells.
    h.star_chi0_diag = VecXc::Zero(sc.n0());
    for (int t = 0; t < sc.n3(); ++t) {
        const cplx q = mat.chi[t] * 0.25 * sc.tet_volume(t);
        for (int v : sc.tets[t]) h.star_chi0_diag[v] += q;
    }
    h.star_chi_inv3_diag = h.star_chi0_diag.cwiseInverse();
    return h;
}

} // namespace decem
