#include "decem/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "decem/errors.hpp"

namespace decem {

namespace {

double matrix_scale(const SpMatC& m) {
    double s = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatC::InnerIterator it(m, k); it; ++it) s = std::max(s, std::abs(it.value()));
    return s;
}

void check_hermitian(const SpMatC& m, const char* name) {
    const double scale = matrix_scale(m);
    const double dev = SpMatC(m - SpMatC(m.adjoint())).norm();
    if (dev > 1e-10 * std::max(scale, 1e-300) * std::sqrt(double(m.rows())))
        throw solver_error("DimensionMismatch",
                           std::string(name) + " is not Hermitian (lossy materials?)");
}

EigenResult finalize(const SpMatC& K, const SpMatC& M, std::vector<double> vals,
                     std::vector<VecXc> vecs, int count, double shift, double tol) {
    // Keep the `count` pairs nearest the shift, then report ascending.
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(vals[a] - shift) < std::abs(vals[b] - shift);
    });
    order.resize(std::min<std::size_t>(count, order.size()));
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });

    const double kfro = K.norm();
    EigenResult res;
    for (std::size_t idx : order) {
        const VecXc& v = vecs[idx];
        const VecXc kv = K * v;
        const double mismatch = (kv - vals[idx] * (M * v)).norm();
        // Relative to ||Kv|| for regular modes; eigenvectors of (numerically)
        // zero eigenvalues make that denominator pure noise, so they are
        // checked against the matrix scale instead.
        const double kv_floor = 1e-8 * kfro * v.norm();
        const double r =
            (kv.norm() > kv_floor) ? mismatch / kv.norm() : mismatch / (kfro * v.norm());
        if (r > tol)
            throw solver_error("ConvergenceFailure",
                               "eigenpair residual " + std::to_string(r) + " exceeds tolerance");
        res.values.push_back(vals[idx]);
        res.vectors.push_back(v);
        res.residuals.push_back(r);
    }
    return res;
}

EigenResult solve_dense(const SpMatC& K, const SpMatC& M, int count, double shift, double tol) {
    Eigen::MatrixXcd Kd = Eigen::MatrixXcd(K);
    Eigen::MatrixXcd Md = Eigen::MatrixXcd(M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(Kd, Md);
    if (ges.info() != Eigen::Success)
        throw solver_error("ConvergenceFailure", "dense generalized eigensolve failed");
    std::vector<double> vals(ges.eigenvalues().data(),
                             ges.eigenvalues().data() + ges.eigenvalues().size());
    std::vector<VecXc> vecs;
    vecs.reserve(vals.size());
    for (Eigen::Index i = 0; i < ges.eigenvectors().cols(); ++i)
        vecs.push_back(ges.eigenvectors().col(i));
    return finalize(K, M, std::move(vals), std::move(vecs), count, shift, tol);
}

// Shift-invert Lanczos in the M inner product: the operator
// x -> (K - sigma M)^{-1} M x is self-adjoint w.r.t. <u,v>_M = u^H M v, its
// eigenvalues theta map back through lambda = sigma + 1/theta. Single-vector
// Lanczos collapses degenerate multiplets to one representative; the dense
// path (used for all small problems) resolves multiplicity exactly.
EigenResult solve_lanczos(const SpMatC& K, const SpMatC& M, int count, double shift, double tol,
                          int subspace) {
    const Eigen::Index n = K.rows();
    const double kscale = matrix_scale(K);
    const double mscale = std::max(matrix_scale(M), 1e-300);

    Eigen::SparseLU<SpMatC> lu;
    double sigma = shift;
    double nudge = 1e-8 * (kscale / mscale + std::abs(shift));
    for (int attempt = 0; attempt < 8; ++attempt) {
        lu.compute(SpMatC(K - cplx(sigma, 0.0) * M));
        if (lu.info() == Eigen::Success) break;
        sigma = shift - nudge; // back off below the spectrum of interest
        nudge *= 16.0;
    }
    if (lu.info() != Eigen::Success)
        throw solver_error("SingularSystem", "shift-invert factorization failed near shift");

    const int max_m = static_cast<int>(std::min<Eigen::Index>(n, subspace));
    std::vector<VecXc> basis;
    basis.reserve(max_m);
    std::vector<double> alpha, beta;

    auto m_inner = [&](const VecXc& a, const VecXc& b) { return cplx(a.adjoint() * (M * b)); };

    VecXc v = VecXc::Ones(n);
    v /= std::sqrt(std::abs(m_inner(v, v).real()));
    basis.push_back(v);

    for (int j = 0; j < max_m; ++j) {
        VecXc w = lu.solve(M * basis[j]);
        const double a_j = (m_inner(basis[j], w)).real();
        alpha.push_back(a_j);
        w -= a_j * basis[j];
        if (j > 0) w -= beta[j - 1] * basis[j - 1];
        // Full reorthogonalization keeps the Ritz values trustworthy.
        for (int pass = 0; pass < 2; ++pass)
            for (const VecXc& q : basis) w -= m_inner(q, w) * q;
        const double b_j = std::sqrt(std::abs(m_inner(w, w).real()));
        if (b_j < 1e-14 || j + 1 == max_m) break;
        beta.push_back(b_j);
        basis.push_back(w / b_j);
    }

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(T);
    if (tes.info() != Eigen::Success)
        throw solver_error("ConvergenceFailure", "tridiagonal eigensolve failed");

    // Largest |theta| Ritz values correspond to eigenvalues nearest sigma.
    std::vector<double> vals;
    std::vector<VecXc> vecs;
    for (int i = 0; i < m; ++i) {
        const double theta = tes.eigenvalues()[i];
        if (theta == 0.0) continue;
        VecXc x = VecXc::Zero(n);
        for (int j = 0; j < static_cast<int>(basis.size()) && j < m; ++j)
            x += tes.eigenvectors()(j, i) * basis[j];
        vals.push_back(sigma + 1.0 / theta);
        vecs.push_back(x);
    }
    return finalize(K, M, std::move(vals), std::move(vecs), count, shift, tol);
}

} // namespace

EigenResult solve_eigen(const SpMatC& K, const SpMatC& M, int count, double shift, double tol) {
    if (K.rows() != K.cols() || M.rows() != M.cols() || K.rows() != M.rows())
        throw solver_error("DimensionMismatch", "eigenproblem matrices must be square and equal");
    if (count < 1 || count > K.rows())
        throw solver_error("DimensionMismatch", "requested eigenpair count out of range");
    check_hermitian(K, "K");
    check_hermitian(M, "M");

    if (K.rows() <= 600) return solve_dense(K, M, count, shift, tol);
    for (int subspace = std::max(4 * count + 40, 60);; subspace *= 2) {
        try {
            return solve_lanczos(K, M, count, shift, tol, subspace);
        } catch (const Error& e) {
            if (e.kind() != "ConvergenceFailure" || subspace >= 8 * (4 * count + 40))
                throw;
        }
    }
}

} // namespace decem
