#pragma once

#include <string>

#include "decem/boundary.hpp"
#include "decem/hodge.hpp"
#include "decem/types.hpp"

namespace decem {

enum class DofTag { Edge, Node };

struct SystemMatrix {
    SpMatC A;
    DofTag dof = DofTag::Edge;
    bool symmetric = true; // complex-symmetric (A^T = A) for reciprocal media
};

enum class SolveMethod { Direct, BiCgStab };

struct SolveContext {
    double omega = 0.0;
    double tolerance = 1e-10; // relative residual ||Mx-b||/||b||
    int max_iterations = 2000;
    SolveMethod method = SolveMethod::Direct;
    int refine_steps = 2; // iterative refinement after a direct solve
};

struct SolveReport {
    double rel_residual = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Driven vector-potential system:
//   M_A = (d1)^T *muinv^(2) d1 - omega^2 *eps^(1)
//         + *eps^(1) d0 *chiinv^(3) (d0)^T *eps^(1),
// on the surviving (PEC-reduced) DOFs. The third (gauge) term removes the
// gradient null space of the curl-curl block; with_gauge=false assembles the
// plain curl-curl comparison system.
SystemMatrix assemble_A_system(const ReducedSystemMap& incidence, const HodgeSet& hodges,
                               double omega, bool with_gauge = true);

enum class ChiMass { Galerkin, Diagonal };

// Scalar-potential system M_Phi = -(d0)^T *eps^(1) d0 + omega^2 *chi^(0),
// solved against -rho. The diagonal chi mass makes the tandem solve agree
// exactly (in exact arithmetic) with gauge recovery from the A solution.
SystemMatrix assemble_Phi_system(const ReducedSystemMap& incidence, const HodgeSet& hodges,
                                 double omega, ChiMass chi_mass = ChiMass::Galerkin);

// Solves system.A x = rhs to the requested relative residual. Direct solves
// throw SingularSystem on factorization failure; when the tolerance is not
// reached the best iterate is returned with converged=false.
std::pair<VecXc, SolveReport> solve_linear(const SystemMatrix& system, const VecXc& rhs,
                                           const SolveContext& context);

// Generalized eigenproblem blocks for Bloch-periodic cells:
//   A problem:   K = P^H [ (d1)^T *muinv d1 + *eps d0 *chiinv (d0)^T *eps ] P,
//                M = P^H *eps^(1) P
//   Phi problem: K = P^H (d0)^T *eps^(1) d0 P,  M = P^H *chi^(0) P
// Requires lossless real materials so the eigenvalues omega^2 are real.
struct EigenPair {
    SpMatC K;
    SpMatC M;
    SpMatC K_curl; // curl-curl part alone, used to flag gauge modes
};
EigenPair assemble_pbc_eigen(const ReducedSystemMap& incidence, const HodgeSet& hodges,
                             const BlochProjection& projection, DofTag problem);

// Largest/smallest singular value estimates via power iteration on M^H M and
// inverse iteration through a sparse LU factorization. estimate_sigma_min
// returns 0 when the factorization fails outright.
double estimate_sigma_max(const SpMatC& m, int iterations = 100);
double estimate_sigma_min(const SpMatC& m, int iterations = 100);

} // namespace decem
