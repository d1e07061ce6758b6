#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Axis-aligned box region with constant material parameters. Later regions
// override earlier ones; tets are assigned by centroid membership.
struct MaterialRegion {
    std::string name;
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();
    double eps_r = 1.0;  // relative permittivity
    double mu_r = 1.0;   // relative permeability
    double sigma = 0.0;  // conductivity, S/m

    bool contains(const Vec3& p) const {
        return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y() &&
               p.z() >= lo.z() && p.z() <= hi.z();
    }
};

// Per-tet material assignment plus the gauge constant alpha. With the
// e^{-i omega t} convention, eps(omega) = eps0*eps_r + i*sigma/omega, and the
// generalized Lorenz gauge parameter is chi = alpha * mu * eps^2.
//
// alpha must stay O(1): the gauge and curl-curl blocks of the A-system scale
// as 1/alpha relative to each other, so a far-from-unity alpha makes the
// low-frequency system numerically singular. alpha = 1 is the classical
// Lorenz gauge in vacuum (div A = i omega mu0 eps0 Phi).
struct MaterialMap {
    std::vector<double> eps_r;  // per tet
    std::vector<double> mu_r;   // per tet
    std::vector<double> sigma;  // per tet
    std::vector<int> region_of_tet;
    double alpha = 1.0;

    int n_tets() const { return static_cast<int>(eps_r.size()); }
    cplx eps(int tet, double omega) const {
        return cplx(constants::eps0 * eps_r[tet], sigma[tet] / omega);
    }
    double mu(int tet) const { return constants::mu0 * mu_r[tet]; }
    cplx chi(int tet, double omega) const {
        const cplx e = eps(tet, omega);
        return alpha * mu(tet) * e * e;
    }
    bool lossless() const {
        for (double s : sigma)
            if (s != 0.0) return false;
        return true;
    }
};

// Frequency-resolved per-tet coefficients consumed by the Hodge assembly.
struct ResolvedMaterials {
    VecXc eps;     // complex permittivity at omega
    VecXd mu_inv;  // 1/mu
    VecXc chi;     // alpha * mu * eps^2
};

// Maps regions onto tets (default vacuum), validating parameter ranges.
// Throws NegativeConductivity / NonPositiveMaterial on bad parameters.
MaterialMap build_material_map(const std::vector<MaterialRegion>& regions,
                               const SimplicialComplex& complex,
                               std::optional<double> alpha = std::nullopt);

// Evaluates complex eps, 1/mu, chi at omega. Throws NonPositiveMaterial if
// any tet ends up with Re(eps) <= 0, mu <= 0 or chi = 0.
ResolvedMaterials resolve_materials(const MaterialMap& map, double omega);

} // namespace decem
