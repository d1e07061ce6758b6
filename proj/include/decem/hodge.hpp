#pragma once

#include "decem/dual_mesh.hpp"
#include "decem/materials.hpp"
#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"
#include "decem/whitney.hpp"

namespace decem {

// Material Hodge star matrices. The Galerkin stars pair Whitney forms,
//   [*eps^(1)]_ij    = <W_i^1, eps W_j^1>,
//   [*muinv^(2)]_ij  = <W_i^2, (1/mu) W_j^2>,
//   [*chi^(0)]_ij    = <W_i^0, chi W_j^0>,
// assembled with a degree-2 rule that integrates the quadratic products
// exactly. The diagonal chi pair uses the geometric form chi * V_i^dual with
// the entrywise reciprocal as its inverse; it keeps the A-system sparse and
// is the operative star in the gauge term and in gauge recovery.
struct HodgeSet {
    SpMatC star_eps1;          // N1 x N1, complex symmetric
    SpMatR star_mu_inv2;       // N2 x N2, real symmetric
    SpMatC star_chi0_galerkin; // N0 x N0, complex symmetric
    VecXc star_chi0_diag;      // N0 diagonal entries
    VecXc star_chi_inv3_diag;  // entrywise reciprocal of star_chi0_diag
};

HodgeSet assemble_hodges(const SimplicialComplex& complex, const DualMesh& dual,
                         const ResolvedMaterials& materials);

} // namespace decem
