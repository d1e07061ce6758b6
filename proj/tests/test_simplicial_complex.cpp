#include <doctest.h>

#include <algorithm>
#include <random>

#include "decem/errors.hpp"
#include "decem/meshgen.hpp"
#include "decem/simplicial_complex.hpp"
#include "test_util.hpp"

using namespace decem;

namespace {
const std::vector<Vec3> kRefVerts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

int max_abs_entry(const SpMatI& m) {
    int worst = 0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatI::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

std::vector<int> row_nonzeros(const SpMatI& m) {
    std::vector<int> counts(m.rows(), 0);
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatI::InnerIterator it(m, k); it; ++it)
            if (it.value() != 0) counts[it.row()] += 1;
    return counts;
}
} // namespace

TEST_CASE("single tet counts") {
    auto sc = build_complex(kRefVerts, {{0, 1, 2, 3}});
    CHECK(sc.n0() == 4);
    CHECK(sc.n1() == 6);
    CHECK(sc.n2() == 4);
    CHECK(sc.n3() == 1);
}

TEST_CASE("two tets sharing a face") {
    std::vector<Vec3> verts = kRefVerts;
    verts.push_back({1, 1, 1});
    auto sc = build_complex(verts, {{0, 1, 2, 3}, {1, 2, 3, 4}});
    CHECK(sc.n0() == 5);
    CHECK(sc.n1() == 9);
    CHECK(sc.n2() == 7);
    CHECK(sc.n3() == 2);
}

TEST_CASE("negative-volume input order is fixed") {
    // Sorted index order (0,1,2,3) has negative volume for this geometry.
    const std::vector<Vec3> verts = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    auto sc = build_complex(verts, {{0, 1, 2, 3}});
    CHECK(sc.tet_volume(0) > 0.0);
    CHECK(sc.tets[0] == std::array<int, 4>{0, 1, 3, 2});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_WITH_AS(build_complex(kRefVerts, {{0, 1, 2, 2}}), doctest::Contains("DegenerateTet"),
                         Error);
    std::vector<Vec3> flat = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_THROWS_WITH_AS(build_complex(flat, {{0, 1, 2, 3}}), doctest::Contains("DegenerateTet"),
                         Error);
    std::vector<Vec3> extra = kRefVerts;
    extra.push_back({5, 5, 5});
    CHECK_THROWS_WITH_AS(build_complex(extra, {{0, 1, 2, 3}}), doctest::Contains("DanglingVertex"),
                         Error);
    // Three tets on one face: non-manifold.
    std::vector<Vec3> nm = kRefVerts;
    nm.push_back({1, 1, 1});
    nm.push_back({-1, -1, -1});
    CHECK_THROWS_WITH_AS(build_complex(nm, {{0, 1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 5}}),
                         doctest::Contains("NonManifoldFace"), Error);
}

TEST_CASE("incidence matrices of a single tet") {
    auto sc = build_complex(kRefVerts, {{0, 1, 2, 3}});
    auto inc = build_incidence(sc);

    SpMatI d1d0 = inc.d1 * inc.d0;
    REQUIRE(d1d0.rows() == 4);
    REQUIRE(d1d0.cols() == 4);
    CHECK(max_abs_entry(d1d0) == 0);

    SpMatI d2d1 = inc.d2 * inc.d1;
    REQUIRE(d2d1.rows() == 1);
    REQUIRE(d2d1.cols() == 6);
    CHECK(max_abs_entry(d2d1) == 0);

    // Start/end rule: -1 at the lower vertex, +1 at the higher.
    for (int e = 0; e < sc.n1(); ++e) {
        const auto& [a, b] = sc.edges[e];
        CHECK(a < b);
        CHECK(inc.d0.coeff(e, a) == -1);
        CHECK(inc.d0.coeff(e, b) == +1);
    }
    // Row counts: 2 / 3 / 4 nonzeros.
    for (int c : row_nonzeros(inc.d0)) CHECK(c == 2);
    for (int c : row_nonzeros(inc.d1)) CHECK(c == 3);
    for (int c : row_nonzeros(inc.d2)) CHECK(c == 4);
}

TEST_CASE("validate_complex diagnostics") {
    SUBCASE("single tet") {
        auto sc = build_complex(kRefVerts, {{0, 1, 2, 3}});
        auto inc = build_incidence(sc);
        auto rep = validate_complex(sc, inc);
        CHECK(rep.euler_characteristic == 1);
        CHECK(rep.boundary_face_count == 4);
        CHECK(rep.max_abs_d1d0 == 0);
        CHECK(rep.max_abs_d2d1 == 0);
    }
    SUBCASE("six-tet unit cube") {
        BoxMeshSpec spec;
        auto sc = generate_box_mesh(spec);
        auto inc = build_incidence(sc);
        auto rep = validate_complex(sc, inc);
        CHECK(rep.euler_characteristic == 1);
        CHECK(rep.boundary_face_count == 12);
        CHECK(rep.total_volume == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sc.n0() == 8);
        CHECK(sc.n1() == 19);
        CHECK(sc.n2() == 18);
        CHECK(sc.n3() == 6);
    }
}

TEST_CASE("dual incidence transposition signs") {
    BoxMeshSpec spec;
    spec.nx = 2;
    auto sc = generate_box_mesh(spec);
    auto inc = build_incidence(sc);
    auto dual = dual_incidence(inc);

    CHECK(max_abs_entry(SpMatI(dual.d_dual2 + SpMatI(inc.d0.transpose()))) == 0);
    CHECK(max_abs_entry(SpMatI(dual.d_dual1 - SpMatI(inc.d1.transpose()))) == 0);
    CHECK(max_abs_entry(SpMatI(dual.d_dual0 + SpMatI(inc.d2.transpose()))) == 0);
    // Dual d-o-d vanishes by transposition of the primal identities:
    // d_dual2 d_dual1 = -(d1 d0)^T, d_dual1 d_dual0 = -(d2 d1)^T.
    CHECK(max_abs_entry(SpMatI(dual.d_dual2 * dual.d_dual1)) == 0);
    CHECK(max_abs_entry(SpMatI(dual.d_dual1 * dual.d_dual0)) == 0);
}

TEST_CASE("tet permutation leaves edge/face sets and d0,d1 unchanged") {
    BoxMeshSpec spec;
    spec.nx = 2;
    spec.ny = 2;
    auto sc = generate_box_mesh(spec);

    std::vector<std::array<int, 4>> tets = sc.tets;
    std::shuffle(tets.begin(), tets.end(), testutil::rng());
    // Also scramble the vertex order inside each tet.
    for (auto& t : tets) std::shuffle(t.begin(), t.end(), testutil::rng());

    auto sc2 = build_complex(sc.vertices, tets);
    REQUIRE(sc2.edges == sc.edges);
    REQUIRE(sc2.faces == sc.faces);

    auto inc = build_incidence(sc);
    auto inc2 = build_incidence(sc2);
    CHECK(max_abs_entry(SpMatI(inc.d0 - inc2.d0)) == 0);
    CHECK(max_abs_entry(SpMatI(inc.d1 - inc2.d1)) == 0);
    // d2 rows follow tet input order; every mesh still satisfies d2*d1 = 0.
    CHECK(max_abs_entry(SpMatI(inc2.d2 * inc2.d1)) == 0);
}

TEST_CASE("interior face rows of d2^T have two opposite-sign entries") {
    BoxMeshSpec spec;
    spec.nx = 2;
    auto sc = generate_box_mesh(spec);
    auto inc = build_incidence(sc);

    // Column f of d2 lists the tets incident to face f with outward signs.
    int interior = 0;
    std::vector<int> col_count(sc.n2(), 0), col_sum(sc.n2(), 0);
    for (int k = 0; k < inc.d2.outerSize(); ++k)
        for (SpMatI::InnerIterator it(inc.d2, k); it; ++it) {
            col_count[it.col()] += 1;
            col_sum[it.col()] += it.value();
        }
    for (int f = 0; f < sc.n2(); ++f) {
        if (col_count[f] != 2) continue;
        ++interior;
        CHECK(col_sum[f] == 0);
    }
    CHECK(interior > 0);
}

TEST_CASE("random meshes keep d-o-d exactly zero") {
    // Structured boxes of several shapes, plus jittered vertices: the
    // incidence construction is combinatorial, so d-o-d stays exactly zero.
    for (int trial = 0; trial < 3; ++trial) {
        BoxMeshSpec spec;
        spec.nx = 1 + trial;
        spec.ny = 2;
        spec.nz = 1 + (trial % 2);
        auto sc = generate_box_mesh(spec);
        std::uniform_real_distribution<double> u(-0.08, 0.08);
        std::vector<Vec3> verts = sc.vertices;
        for (auto& v : verts) v += Vec3(u(testutil::rng()), u(testutil::rng()), u(testutil::rng()));
        auto sc2 = build_complex(verts, sc.tets);
        auto inc2 = build_incidence(sc2);
        CHECK(max_abs_entry(SpMatI(inc2.d1 * inc2.d0)) == 0);
        CHECK(max_abs_entry(SpMatI(inc2.d2 * inc2.d1)) == 0);
    }
}
