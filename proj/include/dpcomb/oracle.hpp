#pragma once

#include "dpcomb/regularized.hpp"
#include "dpcomb/transfer.hpp"

namespace dpcomb {

/// Values of the two fundamental solutions of the dipole equation at the
/// right support edge, integrated from initial data (1, 0) and (0, 1) at the
/// left edge.  The equation has no first-derivative term, so the Wronskian
/// y1 y2' - y1' y2 is exactly 1 and its defect measures integration error.
struct FundamentalPair {
    double y1 = 1.0;
    double y1p = 0.0;
    double y2 = 0.0;
    double y2p = 1.0;
    int steps = 0;  // accepted step count of the final sweep

    double wronskian_defect() const noexcept;
};

/// Integrates the single-dipole scattering equation across the support.
///
/// The integration runs in the rescaled variable xi = (x - x0)/epsilon, where
/// the equation reads -w'' + V(xi) w = (epsilon k)^2 w.  This removes the
/// 1/epsilon^2 stiffness of the original variable entirely: the potential is
/// O(1) on the fixed interval [-1, 1] no matter how small epsilon is, so the
/// step count never depends on epsilon.  Fixed-step RK4 with step halving
/// until both the Wronskian defect and the between-sweep solution change drop
/// below 1e-10; throws after 20 halvings without convergence.
FundamentalPair integrate_dipole(const ResonantPotential& potential, double k, double epsilon);

/// Plane-wave-basis transfer matrix assembled from a fundamental pair by the
/// C1 matching conditions at x = x0 +- epsilon.  Requires k != 0 (the
/// plane-wave basis degenerates at zero frequency).
TransferMatrix plane_wave_matrix(const FundamentalPair& pair, double x0, double k, double epsilon);

/// Transfer matrix of one scaled dipole, computed with no closed form:
/// integrate_dipole followed by plane_wave_matrix.
TransferMatrix dipole_matrix_numeric(const ResonantPotential& potential, double x0, double k,
                                     double epsilon);

/// |t|^2 through the whole dipole array by ordered product of per-site
/// numeric matrices.  The fundamental pair depends on the site only through
/// the plane-wave phases, so it is integrated once and reused across sites.
double array_transmission_numeric(const DipoleArraySpec& spec, double k);

}  // namespace dpcomb
