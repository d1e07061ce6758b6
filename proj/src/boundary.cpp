#include "decem/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "decem/errors.hpp"

namespace decem {

BoundaryClassification classify_boundary(const SimplicialComplex& sc, const IncidenceSet& inc) {
    BoundaryClassification bc;
    bc.node_is_boundary.assign(sc.n0(), 0);
    bc.edge_is_boundary.assign(sc.n1(), 0);
    bc.face_is_boundary.assign(sc.n2(), 0);

    std::vector<int> face_tets(sc.n2(), 0);
    for (int k = 0; k < inc.d2.outerSize(); ++k)
        for (SpMatI::InnerIterator it(inc.d2, k); it; ++it) face_tets[it.col()] += 1;

    for (int f = 0; f < sc.n2(); ++f) {
        if (face_tets[f] != 1) continue;
        bc.face_is_boundary[f] = 1;
        const auto& [a, b, c] = sc.faces[f];
        bc.node_is_boundary[a] = bc.node_is_boundary[b] = bc.node_is_boundary[c] = 1;
        bc.edge_is_boundary[sc.edge_index(a, b)] = 1;
        bc.edge_is_boundary[sc.edge_index(b, c)] = 1;
        bc.edge_is_boundary[sc.edge_index(a, c)] = 1;
    }
    for (int i = 0; i < sc.n0(); ++i)
        if (bc.node_is_boundary[i]) bc.boundary_nodes.push_back(i);
    for (int i = 0; i < sc.n1(); ++i)
        if (bc.edge_is_boundary[i]) bc.boundary_edges.push_back(i);
    for (int i = 0; i < sc.n2(); ++i)
        if (bc.face_is_boundary[i]) bc.boundary_faces.push_back(i);
    return bc;
}

namespace {
// Extracts rows/cols of an integer incidence matrix by keep-maps.
SpMatI extract(const SpMatI& m, const std::vector<int>& row_map, int rows,
               const std::vector<int>& col_map, int cols) {
    std::vector<TripletI> trips;
    trips.reserve(m.nonZeros());
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatI::InnerIterator it(m, k); it; ++it) {
            const int r = row_map[it.row()];
            const int c = col_map[it.col()];
            if (r >= 0 && c >= 0) trips.emplace_back(r, c, it.value());
        }
    SpMatI out(rows, cols);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

template <typename Mat>
Mat extract_sub(const Mat& m, const std::vector<int>& row_map, int rows,
                const std::vector<int>& col_map, int cols) {
    std::vector<Eigen::Triplet<typename Mat::Scalar>> trips;
    trips.reserve(m.nonZeros());
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename Mat::InnerIterator it(m, k); it; ++it) {
            const int r = row_map[it.row()];
            const int c = col_map[it.col()];
            if (r >= 0 && c >= 0) trips.emplace_back(r, c, it.value());
        }
    Mat out(rows, cols);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
}
} // namespace

ReducedSystemMap apply_pec(const SimplicialComplex& sc, const IncidenceSet& inc,
                           const BoundaryClassification& bc, const std::vector<int>& pec_faces) {
    ReducedSystemMap rm;

    if (pec_faces.empty()) {
        rm.identity = true;
        rm.node_map = identity_map(sc.n0());
        rm.edge_map = identity_map(sc.n1());
        rm.face_map = identity_map(sc.n2());
        rm.node_keep = rm.node_map;
        rm.edge_keep = rm.edge_map;
        rm.face_keep = rm.face_map;
        rm.d0 = inc.d0;
        rm.d1 = inc.d1;
        rm.d2 = inc.d2;
        return rm;
    }

    std::vector<char> face_pec(sc.n2(), 0), edge_pec(sc.n1(), 0), node_pec(sc.n0(), 0);
    for (int f : pec_faces) {
        if (f < 0 || f >= sc.n2() || !bc.face_is_boundary[f])
            throw config_error("SelectorMissesBoundary",
                               "selected face " + std::to_string(f) + " is not a boundary face");
        face_pec[f] = 1;
        const auto& [a, b, c] = sc.faces[f];
        node_pec[a] = node_pec[b] = node_pec[c] = 1;
        edge_pec[sc.edge_index(a, b)] = 1;
        edge_pec[sc.edge_index(b, c)] = 1;
        edge_pec[sc.edge_index(a, c)] = 1;
    }

    rm.node_map.assign(sc.n0(), -1);
    rm.edge_map.assign(sc.n1(), -1);
    rm.face_map.assign(sc.n2(), -1);
    for (int i = 0; i < sc.n0(); ++i)
        if (!node_pec[i]) {
            rm.node_map[i] = static_cast<int>(rm.node_keep.size());
            rm.node_keep.push_back(i);
        }
    for (int i = 0; i < sc.n1(); ++i)
        if (!edge_pec[i]) {
            rm.edge_map[i] = static_cast<int>(rm.edge_keep.size());
            rm.edge_keep.push_back(i);
        }
    for (int i = 0; i < sc.n2(); ++i)
        if (!face_pec[i]) {
            rm.face_map[i] = static_cast<int>(rm.face_keep.size());
            rm.face_keep.push_back(i);
        }

    rm.d0 = extract(inc.d0, rm.edge_map, rm.n1_in(), rm.node_map, rm.n0_in());
    rm.d1 = extract(inc.d1, rm.face_map, rm.n2_in(), rm.edge_map, rm.n1_in());
    rm.d2 = extract(inc.d2, identity_map(sc.n3()), sc.n3(), rm.face_map, rm.n2_in());
    rm.no_interior_nodes = rm.node_keep.empty();
    return rm;
}

HodgeSet reduce_hodges(const HodgeSet& h, const ReducedSystemMap& rm) {
    if (rm.identity) return h;
    HodgeSet out;
    out.star_eps1 = extract_sub(h.star_eps1, rm.edge_map, rm.n1_in(), rm.edge_map, rm.n1_in());
    out.star_mu_inv2 =
        extract_sub(h.star_mu_inv2, rm.face_map, rm.n2_in(), rm.face_map, rm.n2_in());
    out.star_chi0_galerkin =
        extract_sub(h.star_chi0_galerkin, rm.node_map, rm.n0_in(), rm.node_map, rm.n0_in());
    out.star_chi0_diag.resize(rm.n0_in());
    out.star_chi_inv3_diag.resize(rm.n0_in());
    for (int i = 0; i < rm.n0_in(); ++i) {
        out.star_chi0_diag[i] = h.star_chi0_diag[rm.node_keep[i]];
        out.star_chi_inv3_diag[i] = h.star_chi_inv3_diag[rm.node_keep[i]];
    }
    return out;
}

VecXc reduce_vector(const VecXc& full, const std::vector<int>& keep) {
    VecXc out(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) out[static_cast<Eigen::Index>(i)] = full[keep[i]];
    return out;
}

VecXc scatter_vector(const VecXc& reduced, const std::vector<int>& map_old_to_new, int full_size) {
    VecXc out = VecXc::Zero(full_size);
    for (int i = 0; i < full_size; ++i)
        if (map_old_to_new[i] >= 0) out[i] = reduced[map_old_to_new[i]];
    return out;
}

namespace {
struct WallFlags {
    bool xmin = false, xmax = false, ymin = false, ymax = false;
};

struct QuantizedPoint {
    std::int64_t x, y, z;
    bool operator<(const QuantizedPoint& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

QuantizedPoint quantize(const Vec3& p, double tol) {
    return {static_cast<std::int64_t>(std::llround(p.x() / tol)),
            static_cast<std::int64_t>(std::llround(p.y() / tol)),
            static_cast<std::int64_t>(std::llround(p.z() / tol))};
}
} // namespace

BlochProjection build_pbc_projection(const SimplicialComplex& sc, const ReducedSystemMap& rm,
                                     const BlochSpec& bloch, DofKind kind) {
    if (!bloch.periodic_x && !bloch.periodic_y)
        throw config_error("EmptyPath", "periodic projection requested without periodic axes");

    Vec3 lo = sc.vertices.front(), hi = sc.vertices.front();
    for (const Vec3& v : sc.vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const double tol = bloch.match_tol;
    const double Lx = bloch.periodic_x ? (bloch.Lx > 0.0 ? bloch.Lx : hi.x() - lo.x()) : 0.0;
    const double Ly = bloch.periodic_y ? (bloch.Ly > 0.0 ? bloch.Ly : hi.y() - lo.y()) : 0.0;
    const cplx phase_x = std::exp(cplx(0.0, -bloch.kx * Lx));
    const cplx phase_y = std::exp(cplx(0.0, -bloch.ky * Ly));

    const int n = (kind == DofKind::Node) ? rm.n0_in() : rm.n1_in();

    // Representative coordinates: node position, or edge endpoints (midpoint
    // classifies the edge; endpoints give the orientation sign).
    auto dof_points = [&](int i) -> std::pair<Vec3, Vec3> {
        if (kind == DofKind::Node) {
            const Vec3 p = sc.vertices[rm.node_keep[i]];
            return {p, p};
        }
        const auto& e = sc.edges[rm.edge_keep[i]];
        return {sc.vertices[e[0]], sc.vertices[e[1]]};
    };

    auto wall_flags = [&](int i) {
        auto [p, q] = dof_points(i);
        WallFlags w;
        auto on = [&](double a, double b, double v) { return std::abs(a - v) <= tol && std::abs(b - v) <= tol; };
        if (bloch.periodic_x) {
            w.xmin = on(p.x(), q.x(), lo.x());
            w.xmax = on(p.x(), q.x(), hi.x());
        }
        if (bloch.periodic_y) {
            w.ymin = on(p.y(), q.y(), lo.y());
            w.ymax = on(p.y(), q.y(), hi.y());
        }
        return w;
    };

    // Key: quantized (sorted) endpoint pair, invariant to edge direction.
    std::map<std::pair<QuantizedPoint, QuantizedPoint>, int> locator;
    for (int i = 0; i < n; ++i) {
        auto [p, q] = dof_points(i);
        auto kp = quantize(p, tol), kq = quantize(q, tol);
        if (kq < kp) std::swap(kp, kq);
        locator[{kp, kq}] = i;
    }

    // Independent DOFs: everything not on an image (max) wall.
    std::vector<int> col_of(n, -1);
    int ncols = 0;
    for (int i = 0; i < n; ++i) {
        const WallFlags w = wall_flags(i);
        if (!w.xmax && !w.ymax) col_of[i] = ncols++;
    }

    BlochProjection proj;
    std::vector<TripletC> trips;
    trips.reserve(n);
    std::vector<int> images_of(n, 0);
    for (int i = 0; i < n; ++i) {
        const WallFlags w = wall_flags(i);
        if (!w.xmax && !w.ymax) {
            trips.emplace_back(i, col_of[i], cplx(1.0, 0.0));
            continue;
        }
        Vec3 shift = Vec3::Zero();
        cplx phase(1.0, 0.0);
        if (w.xmax) {
            shift.x() -= Lx;
            phase *= phase_x;
        }
        if (w.ymax) {
            shift.y() -= Ly;
            phase *= phase_y;
        }
        auto [p, q] = dof_points(i);
        auto kp = quantize(p + shift, tol), kq = quantize(q + shift, tol);
        const bool swapped = kq < kp;
        if (swapped) std::swap(kp, kq);
        auto it = locator.find({kp, kq});
        if (it == locator.end() || col_of[it->second] < 0)
            throw mesh_error("AsymmetricMesh",
                             "no periodic partner for DOF " + std::to_string(i) +
                                 " (mesh must be symmetric on periodic boundaries)");
        // Orientation: stored edges both run low->high global index, but
        // translation may reverse that pairing.
        double sign = 1.0;
        if (kind == DofKind::Edge) {
            const auto& be = sc.edges[rm.edge_keep[it->second]];
            const Vec3 base_start = sc.vertices[be[0]];
            sign = ((base_start - (p + shift)).norm() <= 10 * tol) ? 1.0 : -1.0;
        }
        trips.emplace_back(i, col_of[it->second], sign * phase);
        images_of[it->second] += 1;
    }

    proj.P.resize(n, ncols);
    proj.P.setFromTriplets(trips.begin(), trips.end());
    for (int i = 0; i < n; ++i) {
        if (col_of[i] < 0) continue;
        if (images_of[i] == 0) ++proj.n_interior;
        else if (images_of[i] == 1) ++proj.n_edge_wall;
        else ++proj.n_corner;
    }
    return proj;
}

} // namespace decem
