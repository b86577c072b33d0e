#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "dpcomb/spline.hpp"
#include "dpcomb/transfer.hpp"

namespace dpcomb {

/// A compactly supported potential with a zero-energy resonance, described by
/// its half-bound state u on [-1, 1] (positive, u(-1) = 1, u'(+-1) = 0).
/// Derived data: theta = u(1) and eta = theta^2 * integral of u^{-2}.
/// Immutable after construction and safe to share across threads.
class ResonantPotential {
public:
    double theta() const noexcept { return theta_; }
    double eta() const noexcept { return eta_; }

    /// Half-bound state; constant continuation 1 / theta outside [-1, 1].
    double half_bound(double x) const;

    /// The potential u''(x)/u(x) on [-1, 1], zero outside.
    double potential(double x) const;

    bool has_closed_form() const noexcept { return quartic_theta_.has_value(); }

    friend ResonantPotential example_potential(double theta);
    friend ResonantPotential custom_potential(const std::vector<double>& x,
                                              const std::vector<double>& u);

private:
    ResonantPotential() = default;

    std::optional<double> quartic_theta_;  // set for the built-in family
    std::optional<CubicSpline> spline_u_;  // set for sampled potentials
    double theta_ = 1.0;
    double eta_ = 2.0;
};

/// The built-in family: u(x) = (1/4)(x+1)^2 (4x^2 - (theta+7)x + 2(theta+1)) + 1
/// on [-1, 1], with the matching rational potential.  eta is computed by
/// adaptive Simpson quadrature of u^{-2} to absolute tolerance 1e-10 (there is
/// no closed form for it).  Fails if u is not strictly positive, which
/// happens for theta <= 0 and for some extreme contrasts.
ResonantPotential example_potential(double theta);

/// Builds a potential from samples of a half-bound state on [-1, 1].  Input u
/// is rescaled so u(-1) = 1 (amplitudes are scale-free); requires >= 64
/// strictly positive samples and flat endpoints.  u is interpolated by a
/// clamped cubic spline and the potential is its second derivative over u, so
/// the accuracy is O(h^2) in the sample spacing.
ResonantPotential custom_potential(const std::vector<double>& x, const std::vector<double>& u);

/// Two-column "x u(x)" text exchange format with header "# half-bound-state v1".
ResonantPotential load_potential(std::istream& in);
void save_potential(std::ostream& out, const ResonantPotential& p, int samples = 257);

/// n scaled copies of the potential centered at 0, spacing, ..., (n-1)*spacing,
/// each with support [x0 - epsilon, x0 + epsilon].
struct DipoleArraySpec {
    DipoleArraySpec(ResonantPotential potential, int n, double epsilon, double spacing = 1.0);

    ResonantPotential potential;
    int n;
    double epsilon;
    double spacing;
};

/// The (theta, eta)-model transfer matrix of a single scaled dipole at x0:
///   (1/2theta) [[(theta^2+1+i eps k eta) e^{-2i eps k}, (theta^2-1-i eps k eta) e^{-2ikx0}],
///               [(theta^2-1+i eps k eta) e^{2ikx0},     (theta^2+1-i eps k eta) e^{2i eps k}]]
/// Exactly in SU(1,1) for every epsilon, and within O(|k| epsilon) of the
/// ideal point-interaction matrix M(theta, k x0).
TransferMatrix dipole_matrix_analytic(double theta, double eta, double x0, double k,
                                      double epsilon);

/// Ordered product of dipole_matrix_analytic over the array sites.
TransferMatrix regularized_comb_matrix(const DipoleArraySpec& spec, double k);

/// |t|^2 of the regularized comb; converges to the ideal closed form at rate
/// O(epsilon) as epsilon -> 0.
double regularized_transmission(const DipoleArraySpec& spec, double k);

}  // namespace dpcomb
