#include "decem/assembly.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>

#include "decem/errors.hpp"

namespace decem {

namespace {
SpMatC diag_sparse(const VecXc& d) {
    SpMatC m(d.size(), d.size());
    m.reserve(Eigen::VectorXi::Constant(static_cast<int>(d.size()), 1));
    for (Eigen::Index i = 0; i < d.size(); ++i) m.insert(i, i) = d[i];
    m.makeCompressed();
    return m;
}
} // namespace

SystemMatrix assemble_A_system(const ReducedSystemMap& rm, const HodgeSet& h, double omega,
                               bool with_gauge) {
    if (h.star_eps1.rows() != rm.n1_in() || h.star_mu_inv2.rows() != rm.n2_in())
        throw solver_error("DimensionMismatch", "Hodge matrices do not match reduced incidences");

    const SpMatC d0 = cast_cplx(rm.d0);
    const SpMatC d1 = cast_cplx(rm.d1);
    const SpMatC mu_inv = cast_cplx(h.star_mu_inv2);

    SystemMatrix sys;
    sys.dof = DofTag::Edge;
    sys.A = SpMatC(d1.transpose() * mu_inv * d1) - omega * omega * h.star_eps1;
    if (with_gauge && rm.n0_in() > 0) {
        const SpMatC grad_eps = d0.transpose() * h.star_eps1; // N0_in x N1_in
        sys.A += SpMatC(SpMatC(grad_eps.transpose() * diag_sparse(h.star_chi_inv3_diag)) * grad_eps);
    }
    sys.A.makeCompressed();
    return sys;
}

SystemMatrix assemble_Phi_system(const ReducedSystemMap& rm, const HodgeSet& h, double omega,
                                 ChiMass chi_mass) {
    if (h.star_eps1.rows() != rm.n1_in())
        throw solver_error("DimensionMismatch", "Hodge matrices do not match reduced incidences");

    const SpMatC d0 = cast_cplx(rm.d0);
    SystemMatrix sys;
    sys.dof = DofTag::Node;
    sys.A = SpMatC(-(SpMatC(d0.transpose() * h.star_eps1) * d0));
    if (omega != 0.0) {
        if (chi_mass == ChiMass::Galerkin)
            sys.A += omega * omega * h.star_chi0_galerkin;
        else
            sys.A += omega * omega * diag_sparse(h.star_chi0_diag);
    }
    sys.A.makeCompressed();
    return sys;
}

std::pair<VecXc, SolveReport> solve_linear(const SystemMatrix& system, const VecXc& rhs,
                                           const SolveContext& ctx) {
    if (system.A.rows() != system.A.cols() || system.A.rows() != rhs.size())
        throw solver_error("DimensionMismatch", "system/rhs dimensions disagree");

    SolveReport rep;
    const double bnorm = rhs.norm();
    if (bnorm == 0.0) {
        rep.converged = true;
        return {VecXc::Zero(rhs.size()), rep};
    }

    VecXc x;
    if (ctx.method == SolveMethod::Direct) {
        // Symmetric Jacobi equilibration: rows/columns of mixed-material
        // systems differ by many orders of magnitude, and the scaled solve
        // keeps the factorization well behaved. Preserves complex symmetry.
        const Eigen::Index n = system.A.rows();
        VecXd scale(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = std::abs(system.A.coeff(i, i));
            scale[i] = d > 0.0 ? 1.0 / std::sqrt(d) : 1.0;
        }
        SpMatC scaled = system.A;
        for (int k = 0; k < scaled.outerSize(); ++k)
            for (SpMatC::InnerIterator it(scaled, k); it; ++it)
                it.valueRef() *= scale[it.row()] * scale[it.col()];

        Eigen::SparseLU<SpMatC> lu;
        lu.compute(scaled);
        if (lu.info() != Eigen::Success)
            throw solver_error("SingularSystem", "sparse LU factorization failed");
        const VecXc rhs_s = rhs.cwiseProduct(scale.cast<cplx>());
        VecXc y = lu.solve(rhs_s);
        x = y.cwiseProduct(scale.cast<cplx>());
        // Refinement passes on the unscaled system; cheap since the
        // factorization is reused.
        for (int k = 0; k < ctx.refine_steps; ++k) {
            const VecXc r = rhs - system.A * x;
            if (r.norm() / bnorm <= ctx.tolerance * 1e-3) break;
            const VecXc dy = lu.solve(VecXc(r.cwiseProduct(scale.cast<cplx>())));
            x += dy.cwiseProduct(scale.cast<cplx>());
        }
        rep.iterations = 1;
    } else {
        Eigen::BiCGSTAB<SpMatC, Eigen::DiagonalPreconditioner<cplx>> krylov;
        krylov.setTolerance(ctx.tolerance * 0.1);
        krylov.setMaxIterations(ctx.max_iterations);
        krylov.compute(system.A);
        x = krylov.solve(rhs);
        rep.iterations = static_cast<int>(krylov.iterations());
    }

    rep.rel_residual = (rhs - system.A * x).norm() / bnorm;
    rep.converged = rep.rel_residual <= ctx.tolerance;
    return {x, rep};
}

EigenPair assemble_pbc_eigen(const ReducedSystemMap& rm, const HodgeSet& h,
                             const BlochProjection& proj, DofTag problem) {
    EigenPair pair;
    const SpMatC Ph = proj.P.adjoint();
    if (problem == DofTag::Edge) {
        if (proj.P.rows() != rm.n1_in())
            throw solver_error("DimensionMismatch", "projection does not match edge DOFs");
        const SpMatC d1 = cast_cplx(rm.d1);
        const SpMatC mu_inv = cast_cplx(h.star_mu_inv2);
        SpMatC curlcurl = SpMatC(d1.transpose() * mu_inv * d1);
        pair.K_curl = SpMatC(Ph * curlcurl) * proj.P;
        SpMatC k0 = curlcurl;
        if (rm.n0_in() > 0) {
            const SpMatC d0 = cast_cplx(rm.d0);
            const SpMatC grad_eps = d0.transpose() * h.star_eps1;
            k0 += SpMatC(SpMatC(grad_eps.transpose() * diag_sparse(h.star_chi_inv3_diag)) *
                         grad_eps);
        }
        pair.K = SpMatC(Ph * k0) * proj.P;
        pair.M = SpMatC(Ph * h.star_eps1) * proj.P;
    } else {
        if (proj.P.rows() != rm.n0_in())
            throw solver_error("DimensionMismatch", "projection does not match node DOFs");
        const SpMatC d0 = cast_cplx(rm.d0);
        const SpMatC lap = SpMatC(d0.transpose() * h.star_eps1) * d0;
        pair.K = SpMatC(Ph * lap) * proj.P;
        pair.M = SpMatC(Ph * h.star_chi0_galerkin) * proj.P;
        pair.K_curl = pair.K;
    }
    pair.K.makeCompressed();
    pair.M.makeCompressed();
    return pair;
}

double estimate_sigma_max(const SpMatC& m, int iterations) {
    if (m.rows() == 0) return 0.0;
    VecXc v = VecXc::Ones(m.cols());
    v /= v.norm();
    double s = 0.0;
    for (int k = 0; k < iterations; ++k) {
        VecXc w = m.adjoint() * (m * v).eval();
        const double n = w.norm();
        if (n == 0.0) return 0.0;
        v = w / n;
        const double s_new = std::sqrt(n);
        if (k > 4 && std::abs(s_new - s) <= 1e-10 * s_new) return s_new;
        s = s_new;
    }
    return s;
}

double estimate_sigma_min(const SpMatC& m, int iterations) {
    if (m.rows() == 0) return 0.0;
    Eigen::SparseLU<SpMatC> lu;
    lu.compute(m);
    if (lu.info() != Eigen::Success) return 0.0;

    // Inverse iteration on M^H M. For complex-symmetric M the adjoint solve
    // reuses the factorization: M^H y = w  <=>  y = conj(M^{-1} conj(w)).
    const bool symmetric = SpMatC(m - SpMatC(m.transpose())).norm() <= 1e-12 * m.norm();
    Eigen::SparseLU<SpMatC> lu_adj;
    if (!symmetric) {
        lu_adj.compute(SpMatC(m.adjoint()));
        if (lu_adj.info() != Eigen::Success) return 0.0;
    }

    VecXc v = VecXc::Ones(m.cols());
    v /= v.norm();
    double inv_norm = 0.0;
    for (int k = 0; k < iterations; ++k) {
        VecXc w = lu.solve(v);
        w = symmetric ? VecXc(lu.solve(w.conjugate()).conjugate()) : VecXc(lu_adj.solve(w));
        const double n = w.norm();
        if (!std::isfinite(n) || n == 0.0) return 0.0;
        v = w / n;
        const double new_inv = std::sqrt(n);
        if (k > 4 && std::abs(new_inv - inv_norm) <= 1e-8 * new_inv) {
            inv_norm = new_inv;
            break;
        }
        inv_norm = new_inv;
    }
    return inv_norm == 0.0 ? 0.0 : 1.0 / inv_norm;
}

} // namespace decem
