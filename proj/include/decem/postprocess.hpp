#pragma once

#include <string>

#include "decem/assembly.hpp"
#include "decem/boundary.hpp"
#include "decem/sources.hpp"
#include "decem/types.hpp"

namespace decem {

enum class PhiProvenance { Gauge, Tandem };

// Cochain solution on the reduced (solve-space) DOFs. A and Phi determine the
// rest: E = i omega A - d0 Phi, B = d1 A, D = *eps E, H = *muinv B.
struct FieldSolution {
    double omega = 0.0;
    VecXc A, Phi;    // reduced edge / node cochains
    VecXc E, B;      // reduced edge / face cochains
    VecXc D, H;      // dual 2- / 1-cochains (same index spaces as E / B)
    PhiProvenance phi_from = PhiProvenance::Gauge;
};

// Phi = *chiinv^(3) (-(d0)^T *eps^(1) A) / (i omega), the discrete
// generalized Lorenz gauge solved pointwise with the diagonal inverse.
VecXc recover_phi_from_gauge(const VecXc& A, const HodgeSet& hodges,
                             const ReducedSystemMap& incidence, double omega);

void recover_fields(FieldSolution& solution, const ReducedSystemMap& incidence,
                    const HodgeSet& hodges);

struct MaxwellResiduals {
    double ampere_rel = 0.0;  // ||(d1)^T H + i w D - J|| / ||J||
    double gauss_rel = 0.0;   // ||-(d0)^T D - rho|| / ||rho||
    double faraday_abs = 0.0; // ||d1 E - i w B||_inf, machine-zero by structure
    double div_b_abs = 0.0;   // ||d2 B||_inf, machine-zero by structure
    bool structural_exact = false; // integer d1*d0 = 0 and d2*d1 = 0 verified
};

MaxwellResiduals verify_maxwell(const FieldSolution& solution, const ReducedSystemMap& incidence,
                                const VecXc& J_reduced, const VecXc& rho_reduced);

// Two-terminal readout with the e^{-i omega t} convention: an inductive load
// shows Z = R - i omega L, so L = -Im(Z)/omega; C = 1/(omega Im Z) applies
// when Im Z > 0. V is read along the drive path (minus to plus terminal).
struct PortReadout {
    double freq_hz = 0.0;
    cplx V = 0.0;
    cplx I0 = 0.0;
    cplx Z = 0.0;
    double R = 0.0;
    double L = 0.0; // reported when Im Z <= 0
    double C = 0.0; // reported when Im Z > 0, else 0
};

PortReadout extract_port(const FieldSolution& solution, const ReducedSystemMap& incidence,
                         const SimplicialComplex& complex, const PortSpec& port);

// Legacy-VTK ASCII export: per-node Phi (two scalars) and per-tet Whitney-
// interpolated E at centroids (two 3-vectors). Cochains are scattered back to
// the full mesh (removed DOFs are zero).
void export_fields(const FieldSolution& solution, const ReducedSystemMap& incidence,
                   const SimplicialComplex& complex, const std::string& path);

} // namespace decem
