#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace decem {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using VecXd = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;

// Incidence matrices are exact integer objects; Hodge/material matrices are not.
using SpMatI = Eigen::SparseMatrix<int>;
using SpMatR = Eigen::SparseMatrix<double>;
using SpMatC = Eigen::SparseMatrix<cplx>;

using TripletI = Eigen::Triplet<int>;
using TripletR = Eigen::Triplet<double>;
using TripletC = Eigen::Triplet<cplx>;

namespace constants {
inline constexpr double eps0 = 8.8541878128e-12; // F/m
inline constexpr double mu0 = 1.25663706212e-6;  // H/m
inline constexpr double c0 = 299792458.0;        // m/s
inline constexpr double pi = 3.14159265358979323846;
} // namespace constants

inline SpMatR cast_real(const SpMatI& m) { return m.cast<double>(); }
inline SpMatC cast_cplx(const SpMatI& m) { return m.cast<cplx>(); }
inline SpMatC cast_cplx(const SpMatR& m) { return m.cast<cplx>(); }

} // namespace decem
