#pragma once

#include <vector>

#include "decem/types.hpp"

namespace decem {

// Generalized Hermitian eigenpairs K v = lambda M v (M positive definite),
// eigenvalues lambda = omega^2 real.
struct EigenResult {
    std::vector<double> values;  // ascending
    std::vector<VecXc> vectors;  // M-normalized
    std::vector<double> residuals; // ||K v - lambda M v|| / ||K v||
};

// Returns `count` eigenpairs nearest `shift`, each with relative residual
// below `tol`. Small problems go through a dense reduction; larger ones use
// shift-invert Lanczos with full reorthogonalization in the M inner product.
// Throws LossyMaterialInEigenproblem-style misuse as DimensionMismatch /
// ConvergenceFailure.
EigenResult solve_eigen(const SpMatC& K, const SpMatC& M, int count, double shift,
                        double tol = 1e-8);

} // namespace decem
