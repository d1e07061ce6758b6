#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "decem/assembly.hpp"
#include "decem/dual_mesh.hpp"
#include "decem/eigensolve.hpp"
#include "decem/errors.hpp"
#include "decem/meshgen.hpp"
#include "test_util.hpp"

using namespace decem;

namespace {
SpMatC sparse_from(const Eigen::MatrixXcd& d) {
    return d.sparseView();
}
} // namespace

TEST_CASE("diagonal problem") {
    Eigen::MatrixXcd K = Eigen::Vector3cd(1.0, 2.0, 3.0).asDiagonal();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(3, 3);
    auto res = solve_eigen(sparse_from(K), sparse_from(M), 3, 0.0);
    REQUIRE(res.values.size() == 3);
    CHECK(res.values[0] == doctest::Approx(1.0));
    CHECK(res.values[1] == doctest::Approx(2.0));
    CHECK(res.values[2] == doctest::Approx(3.0));
}

TEST_CASE("2x2 generalized pair against the closed form") {
    // K = [[2,1],[1,2]], M = diag(1,2): det(K - lambda M) = 2 l^2 - 6 l + 3.
    Eigen::MatrixXcd K(2, 2), M(2, 2);
    K << 2, 1, 1, 2;
    M << 1, 0, 0, 2;
    auto res = solve_eigen(sparse_from(K), sparse_from(M), 2, 0.0);
    const double lo = (3.0 - std::sqrt(3.0)) / 2.0;
    const double hi = (3.0 + std::sqrt(3.0)) / 2.0;
    REQUIRE(res.values.size() == 2);
    CHECK(res.values[0] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(res.values[1] == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("random Hermitian pair matches a dense oracle") {
    const int n = 50;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Random(n, n);
    Eigen::MatrixXcd K = (A + A.adjoint()) / 2.0;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Random(n, n);
    Eigen::MatrixXcd M = B * B.adjoint() + 0.5 * Eigen::MatrixXcd::Identity(n, n);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(K, M);
    const double shift = 0.3;
    const int count = 6;
    auto res = solve_eigen(sparse_from(K), sparse_from(M), count, shift, 1e-9);
    REQUIRE(static_cast<int>(res.values.size()) == count);

    // Oracle's nearest-to-shift values, ascending.
    std::vector<double> all(oracle.eigenvalues().data(), oracle.eigenvalues().data() + n);
    std::sort(all.begin(), all.end(), [&](double a, double b) {
        return std::abs(a - shift) < std::abs(b - shift);
    });
    all.resize(count);
    std::sort(all.begin(), all.end());
    for (int i = 0; i < count; ++i) CHECK(res.values[i] == doctest::Approx(all[i]).epsilon(1e-10));
    for (double r : res.residuals) CHECK(r <= 1e-9);
}

TEST_CASE("lanczos path agrees with the dense path on a big sparse pair") {
    // > 600 DOFs to exercise shift-invert Lanczos.
    const int n = 700;
    std::vector<TripletC> kt, mt;
    for (int i = 0; i < n; ++i) {
        kt.emplace_back(i, i, cplx(2.0 + 0.001 * i, 0.0));
        if (i + 1 < n) {
            kt.emplace_back(i, i + 1, cplx(-1.0, 0.0));
            kt.emplace_back(i + 1, i, cplx(-1.0, 0.0));
        }
        mt.emplace_back(i, i, cplx(1.0 + 0.0005 * (i % 7), 0.0));
    }
    SpMatC K(n, n), M(n, n);
    K.setFromTriplets(kt.begin(), kt.end());
    M.setFromTriplets(mt.begin(), mt.end());

    auto res = solve_eigen(K, M, 5, 0.0, 1e-9);
    REQUIRE(res.values.size() == 5);
    for (double r : res.residuals) CHECK(r <= 1e-9);

    const Eigen::MatrixXcd Kd(K);
    const Eigen::MatrixXcd Md(M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(Kd, Md);
    for (int i = 0; i < 5; ++i)
        CHECK(res.values[i] == doctest::Approx(oracle.eigenvalues()[i]).epsilon(1e-8));
}

TEST_CASE("misuse raises typed errors") {
    Eigen::MatrixXcd K(2, 2);
    K << 1, cplx(0, 1), cplx(0, 1), 1; // complex symmetric, NOT Hermitian
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(solve_eigen(sparse_from(K), sparse_from(M), 1, 0.0), Error);

    Eigen::MatrixXcd K2 = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(solve_eigen(sparse_from(K2), sparse_from(M), 5, 0.0), Error);
}

TEST_CASE("Bloch eigenproblem blocks: zero-phase Phi has a constant null mode") {
    BoxMeshSpec spec;
    spec.nx = spec.ny = 2;
    spec.nz = 1;
    spec.size = Vec3(1e-6, 1e-6, 0.5e-6);
    auto sc = generate_box_mesh(spec);
    auto inc = build_incidence(sc);
    auto bc = classify_boundary(sc, inc);
    auto rm = apply_pec(sc, inc, bc, {});

    ResolvedMaterials mats;
    mats.eps = VecXc::Constant(sc.n3(), cplx(constants::eps0, 0.0));
    mats.mu_inv = VecXd::Constant(sc.n3(), 1.0 / constants::mu0);
    mats.chi = VecXc::Constant(sc.n3(), cplx(constants::mu0 * constants::eps0, 0.0));
    auto hodges = assemble_hodges(sc, build_dual(sc), mats);

    BlochSpec bloch;
    bloch.periodic_x = bloch.periodic_y = true; // zero phase
    auto proj = build_pbc_projection(sc, rm, bloch, DofKind::Node);
    auto pair = assemble_pbc_eigen(rm, hodges, proj, DofTag::Node);

    // Hermitian to machine precision.
    CHECK(SpMatC(pair.K - SpMatC(pair.K.adjoint())).norm() <= 1e-14 * pair.K.norm());
    CHECK(SpMatC(pair.M - SpMatC(pair.M.adjoint())).norm() <= 1e-14 * pair.M.norm());

    auto res = solve_eigen(pair.K, pair.M, 3, 0.0);
    REQUIRE(!res.values.empty());
    const double scale = std::abs(res.values.back());
    CHECK(std::abs(res.values.front()) <= 1e-10 * scale);

    // Null eigenvector is constant across nodes.
    const VecXc& v = res.vectors.front();
    cplx ref = v[0];
    for (Eigen::Index i = 1; i < v.size(); ++i) CHECK(std::abs(v[i] - ref) < 1e-8 * std::abs(ref));
}
