#pragma once

#include <array>

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Per-tet affine frame: barycentric gradients (constant over of the tet) and
// the tet volume. lambda_m(r) = 1/4 + grad[m] . (r - centroid).
struct BarycentricFrame {
    std::array<Vec3, 4> grad;
    Vec3 centroid;
    double volume = 0.0;

    double lambda(int m, const Vec3& r) const { return 0.25 + grad[m].dot(r - centroid); }
    std::array<double, 4> lambdas(const Vec3& r) const {
        return {lambda(0, r), lambda(1, r), lambda(2, r), lambda(3, r)};
    }
};

// Exact affine solve via cross products. Throws DegenerateTet.
BarycentricFrame barycentric_gradients(const Vec3& v0, const Vec3& v1, const Vec3& v2,
                                       const Vec3& v3);
BarycentricFrame barycentric_gradients(const SimplicialComplex& complex, int tet);

// Whitney forms on a tet, indexed by local vertex indices (0..3):
//   0-form  W_m       = lambda_m
//   1-form  W_mn      = lambda_m grad(lambda_n) - lambda_n grad(lambda_m)
//   2-form  W_mnp     = 2 (lm gn x gp + ln gp x gm + lp gm x gn)
// The (m,n)/(m,n,p) order carries the orientation; callers pass vertices in
// the global canonical order so local and global bases coincide.
// Throws PointOutsideTet when r has a barycentric coordinate outside [0,1].
double eval_whitney0(const BarycentricFrame& f, int m, const Vec3& r);
Vec3 eval_whitney1(const BarycentricFrame& f, int m, int n, const Vec3& r);
Vec3 eval_whitney2(const BarycentricFrame& f, int m, int n, int p, const Vec3& r);

// Symmetric 4-point tet quadrature, exact for polynomials of degree <= 2
// (products of Whitney forms are at most quadratic).
struct TetQuadrature {
    std::array<Vec3, 4> points;  // physical coordinates
    double weight = 0.0;         // per-point weight, = volume / 4
};
TetQuadrature tet_quadrature_deg2(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3);

} // namespace decem
