#include "decem/whitney.hpp"

#include <cmath>

#include "decem/errors.hpp"

namespace decem {

BarycentricFrame barycentric_gradients(const Vec3& v0, const Vec3& v1, const Vec3& v2,
                                       const Vec3& v3) {
    const double vol6 = (v1 - v0).cross(v2 - v0).dot(v3 - v0);
    if (std::abs(vol6) < 6.0 * 1e-30)
        throw mesh_error("DegenerateTet", "barycentric frame requested for a degenerate tet");

    BarycentricFrame f;
    f.volume = vol6 / 6.0;
    f.centroid = 0.25 * (v0 + v1 + v2 + v3);
    // grad(lambda_m) = (opposite face normal scaled so that lambda_m is 1 at
    // v_m and 0 on the opposite face); signs follow from the determinant.
    f.grad[0] = (v3 - v1).cross(v2 - v1) / vol6;
    f.grad[1] = (v2 - v0).cross(v3 - v0) / vol6;
    f.grad[2] = (v3 - v0).cross(v1 - v0) / vol6;
    f.grad[3] = (v1 - v0).cross(v2 - v0) / vol6;
    return f;
}

BarycentricFrame barycentric_gradients(const SimplicialComplex& sc, int tet) {
    const auto& t = sc.tets[tet];
    return barycentric_gradients(sc.vertices[t[0]], sc.vertices[t[1]], sc.vertices[t[2]],
                                 sc.vertices[t[3]]);
}

namespace {
void check_inside(const BarycentricFrame& f, const Vec3& r) {
    constexpr double tol = 1e-10;
    for (int m = 0; m < 4; ++m) {
        const double l = f.lambda(m, r);
        if (l < -tol || l > 1.0 + tol)
            throw mesh_error("PointOutsideTet",
                             "barycentric coordinate " + std::to_string(l) + " outside [0,1]");
    }
}
} // namespace

double eval_whitney0(const BarycentricFrame& f, int m, const Vec3& r) {
    check_inside(f, r);
    return f.lambda(m, r);
}

Vec3 eval_whitney1(const BarycentricFrame& f, int m, int n, const Vec3& r) {
    check_inside(f, r);
    return f.lambda(m, r) * f.grad[n] - f.lambda(n, r) * f.grad[m];
}

Vec3 eval_whitney2(const BarycentricFrame& f, int m, int n, int p, const Vec3& r) {
    check_inside(f, r);
    const double lm = f.lambda(m, r), ln = f.lambda(n, r), lp = f.lambda(p, r);
    const Vec3 &gm = f.grad[m], &gn = f.grad[n], &gp = f.grad[p];
    return 2.0 * (lm * gn.cross(gp) + ln * gp.cross(gm) + lp * gm.cross(gn));
}

TetQuadrature tet_quadrature_deg2(const Vec3& v0, const Vec3& v1, const Vec3& v2,
                                  const Vec3& v3) {
    // Barycentric (a,b,b,b) permutations; exact for quadratics.
    constexpr double a = 0.585410196624968454;
    constexpr double b = 0.138196601125010515;
    TetQuadrature q;
    q.weight = std::abs(signed_tet_volume(v0, v1, v2, v3)) / 4.0;
    q.points[0] = a * v0 + b * v1 + b * v2 + b * v3;
    q.points[1] = b * v0 + a * v1 + b * v2 + b * v3;
    q.points[2] = b * v0 + b * v1 + a * v2 + b * v3;
    q.points[3] = b * v0 + b * v1 + b * v2 + a * v3;
    return q;
}

} // namespace decem
