#include "decem/simplicial_complex.hpp"

#include <algorithm>
#include <cmath>

#include "decem/errors.hpp"

namespace decem {

namespace {
constexpr double kDegenerateVolume = 1e-30; // m^3

// Parity of the permutation sorting a 3-tuple: +1 even, -1 odd.
int sort_parity3(std::array<int, 3> t) {
    int swaps = 0;
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    if (t[1] > t[2]) { std::swap(t[1], t[2]); ++swaps; }
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    return (swaps % 2 == 0) ? 1 : -1;
}
} // namespace

double signed_tet_volume(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3) {
    return (v1 - v0).cross(v2 - v0).dot(v3 - v0) / 6.0;
}

std::uint64_t SimplicialComplex::edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::uint64_t SimplicialComplex::face_key(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    // 21 bits per index caps meshes at ~2M vertices, plenty here.
    return (static_cast<std::uint64_t>(t[0]) << 42) |
           (static_cast<std::uint64_t>(t[1]) << 21) |
           static_cast<std::uint64_t>(t[2]);
}

double SimplicialComplex::tet_volume(int t) const {
    const auto& k = tets[t];
    return signed_tet_volume(vertices[k[0]], vertices[k[1]], vertices[k[2]], vertices[k[3]]);
}

double SimplicialComplex::total_volume() const {
    double v = 0.0;
    for (int t = 0; t < n3(); ++t) v += tet_volume(t);
    return v;
}

Vec3 SimplicialComplex::tet_centroid(int t) const {
    const auto& k = tets[t];
    return 0.25 * (vertices[k[0]] + vertices[k[1]] + vertices[k[2]] + vertices[k[3]]);
}

int SimplicialComplex::edge_index(int a, int b) const {
    auto it = edge_lookup.find(edge_key(a, b));
    return it == edge_lookup.end() ? -1 : it->second;
}

int SimplicialComplex::face_index(int a, int b, int c) const {
    auto it = face_lookup.find(face_key(a, b, c));
    return it == face_lookup.end() ? -1 : it->second;
}

SimplicialComplex build_complex(const std::vector<Vec3>& vertices,
                                const std::vector<std::array<int, 4>>& tets) {
    if (tets.empty()) throw mesh_error("EmptyMesh", "mesh must contain at least one tet");

    SimplicialComplex sc;
    sc.vertices = vertices;
    sc.tets.reserve(tets.size());

    const int nv = static_cast<int>(vertices.size());
    std::vector<char> used(nv, 0);

    for (std::size_t ti = 0; ti < tets.size(); ++ti) {
        std::array<int, 4> t = tets[ti];
        for (int v : t) {
            if (v < 0 || v >= nv)
                throw mesh_error("InvalidIndex",
                                 "tet " + std::to_string(ti) + " references vertex " + std::to_string(v));
        }
        if (t[0] == t[1] || t[0] == t[2] || t[0] == t[3] ||
            t[1] == t[2] || t[1] == t[3] || t[2] == t[3])
            throw mesh_error("DegenerateTet", "tet " + std::to_string(ti) + " repeats a vertex");

        // Canonical order: ascending indices, last two swapped if volume is negative.
        std::sort(t.begin(), t.end());
        double vol = signed_tet_volume(vertices[t[0]], vertices[t[1]], vertices[t[2]], vertices[t[3]]);
        if (std::abs(vol) < kDegenerateVolume)
            throw mesh_error("DegenerateTet",
                             "tet " + std::to_string(ti) + " has |volume| = " + std::to_string(std::abs(vol)) +
                                 " m^3 below 1e-30 m^3");
        if (vol < 0.0) std::swap(t[2], t[3]);
        sc.tets.push_back(t);
        for (int v : t) used[v] = 1;
    }

    for (int v = 0; v < nv; ++v)
        if (!used[v])
            throw mesh_error("DanglingVertex", "vertex " + std::to_string(v) + " belongs to no tet");

    // Unique sorted edges and faces in lexicographic order; independent of tet
    // input order by construction.
    std::vector<std::array<int, 2>> edge_list;
    std::vector<std::array<int, 3>> face_list;
    edge_list.reserve(sc.tets.size() * 6);
    face_list.reserve(sc.tets.size() * 4);
    for (const auto& t : sc.tets) {
        std::array<int, 4> s = t;
        std::sort(s.begin(), s.end());
        edge_list.push_back({s[0], s[1]});
        edge_list.push_back({s[0], s[2]});
        edge_list.push_back({s[0], s[3]});
        edge_list.push_back({s[1], s[2]});
        edge_list.push_back({s[1], s[3]});
        edge_list.push_back({s[2], s[3]});
        face_list.push_back({s[1], s[2], s[3]});
        face_list.push_back({s[0], s[2], s[3]});
        face_list.push_back({s[0], s[1], s[3]});
        face_list.push_back({s[0], s[1], s[2]});
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    std::sort(face_list.begin(), face_list.end());

    // Count face multiplicity before deduplication: >2 incident tets is non-manifold.
    for (std::size_t i = 0; i < face_list.size();) {
        std::size_t j = i;
        while (j < face_list.size() && face_list[j] == face_list[i]) ++j;
        if (j - i > 2)
            throw mesh_error("NonManifoldFace",
                             "face (" + std::to_string(face_list[i][0]) + "," + std::to_string(face_list[i][1]) +
                                 "," + std::to_string(face_list[i][2]) + ") is shared by " +
                                 std::to_string(j - i) + " tets");
        i = j;
    }
    face_list.erase(std::unique(face_list.begin(), face_list.end()), face_list.end());

    sc.edges = std::move(edge_list);
    sc.faces = std::move(face_list);
    sc.edge_lookup.reserve(sc.edges.size() * 2);
    for (int i = 0; i < sc.n1(); ++i)
        sc.edge_lookup.emplace(SimplicialComplex::edge_key(sc.edges[i][0], sc.edges[i][1]), i);
    sc.face_lookup.reserve(sc.faces.size() * 2);
    for (int i = 0; i < sc.n2(); ++i)
        sc.face_lookup.emplace(SimplicialComplex::face_key(sc.faces[i][0], sc.faces[i][1], sc.faces[i][2]), i);
    return sc;
}

IncidenceSet build_incidence(const SimplicialComplex& sc) {
    IncidenceSet inc;

    // d0: one -1 at the lower vertex, one +1 at the higher vertex of each edge.
    {
        std::vector<TripletI> trips;
        trips.reserve(sc.n1() * 2);
        for (int e = 0; e < sc.n1(); ++e) {
            trips.emplace_back(e, sc.edges[e][0], -1);
            trips.emplace_back(e, sc.edges[e][1], +1);
        }
        inc.d0.resize(sc.n1(), sc.n0());
        inc.d0.setFromTriplets(trips.begin(), trips.end());
    }

    // d1: face (a<b<c) has boundary loop a->b->c->a, so edges (a,b) and (b,c)
    // agree with the loop and (a,c) opposes it.
    {
        std::vector<TripletI> trips;
        trips.reserve(sc.n2() * 3);
        for (int f = 0; f < sc.n2(); ++f) {
            const auto& [a, b, c] = sc.faces[f];
            trips.emplace_back(f, sc.edge_index(a, b), +1);
            trips.emplace_back(f, sc.edge_index(b, c), +1);
            trips.emplace_back(f, sc.edge_index(a, c), -1);
        }
        inc.d1.resize(sc.n2(), sc.n1());
        inc.d1.setFromTriplets(trips.begin(), trips.end());
    }

    // d2: boundary of a positively oriented tet [v0 v1 v2 v3] is
    // [v1v2v3] - [v0v2v3] + [v0v1v3] - [v0v1v2], all outward oriented; each
    // term picks up the parity of sorting it into the canonical face order.
    // Integer arithmetic throughout, so d2*d1 = 0 holds exactly.
    {
        std::vector<TripletI> trips;
        trips.reserve(sc.n3() * 4);
        for (int t = 0; t < sc.n3(); ++t) {
            const auto& v = sc.tets[t];
            for (int k = 0; k < 4; ++k) {
                std::array<int, 3> tri;
                int m = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != k) tri[m++] = v[j];
                const int sign = ((k % 2 == 0) ? 1 : -1) * sort_parity3(tri);
                trips.emplace_back(t, sc.face_index(tri[0], tri[1], tri[2]), sign);
            }
        }
        inc.d2.resize(sc.n3(), sc.n2());
        inc.d2.setFromTriplets(trips.begin(), trips.end());
    }
    return inc;
}

ValidationReport validate_complex(const SimplicialComplex& sc, const IncidenceSet& inc) {
    ValidationReport rep;

    SpMatI d1d0 = inc.d1 * inc.d0;
    SpMatI d2d1 = inc.d2 * inc.d1;
    for (int k = 0; k < d1d0.outerSize(); ++k)
        for (SpMatI::InnerIterator it(d1d0, k); it; ++it)
            rep.max_abs_d1d0 = std::max(rep.max_abs_d1d0, std::abs(it.value()));
    for (int k = 0; k < d2d1.outerSize(); ++k)
        for (SpMatI::InnerIterator it(d2d1, k); it; ++it)
            rep.max_abs_d2d1 = std::max(rep.max_abs_d2d1, std::abs(it.value()));

    // Boundary faces have exactly one incident tet.
    std::vector<int> face_tets(sc.n2(), 0);
    for (int k = 0; k < inc.d2.outerSize(); ++k)
        for (SpMatI::InnerIterator it(inc.d2, k); it; ++it) face_tets[it.col()] += 1;
    for (int f = 0; f < sc.n2(); ++f)
        if (face_tets[f] == 1) ++rep.boundary_face_count;

    rep.euler_characteristic = sc.n0() - sc.n1() + sc.n2() - sc.n3();
    rep.total_volume = sc.total_volume();

    if (rep.max_abs_d1d0 != 0 || rep.max_abs_d2d1 != 0)
        throw mesh_error("StructureViolation", "d-o-d composition is nonzero (internal orientation bug)");
    return rep;
}

DualIncidence dual_incidence(const IncidenceSet& inc) {
    DualIncidence d;
    d.d_dual2 = SpMatI(-inc.d0.transpose());
    d.d_dual1 = SpMatI(inc.d1.transpose());
    d.d_dual0 = SpMatI(-inc.d2.transpose());
    return d;
}

} // namespace decem
