#pragma once

#include <vector>

#include "dpcomb/transfer.hpp"

namespace dpcomb {

/// Maps theta to |theta| and then to min(theta, 1/theta).  The transmission
/// probability is invariant under both transformations, so every derived
/// quantity is computed at the canonical contrast in (0, 1].
double canonical_theta(double theta);

/// T_n(theta, k) = 1 / (1 + ((1-theta^2)^2/(4 theta^2)) U_{n-1}(alpha)^2),
/// alpha = ((1+theta^2)/(2 theta)) cos k.  Total for every nonzero theta and
/// finite k; deep in the stop band the value underflows gracefully to 0.
double transmission_closed_form(double theta, double k, int n);

/// Amplitudes via the Chebyshev closed form, at the contrast as given (the
/// individual amplitudes, unlike |t|^2, are not invariant under
/// theta -> -theta or theta -> 1/theta):
///   1/t_n = ((1+theta^2)/2theta) U_{n-1}(alpha) e^{i(n-1)k} - U_{n-2}(alpha) e^{ink}
///   r_n/t_n = ((1-theta^2)/2theta) U_{n-1}(alpha) e^{i(n-1)k}
Amplitudes amplitudes_closed_form(double theta, double k, int n);

/// The n-1 frequencies in (0, pi) where T_n = 1, ascending, symmetric about
/// pi/2 by construction (the upper half mirrors the lower half exactly).
struct ResonanceSet {
    std::vector<double> points;
    int n = 0;
    double theta = 0.0;  // canonical
};

/// k_j = arccos((2 theta/(theta^2+1)) cos(pi j / n)), j = 1..n-1.
/// n < 2 (constant transmission) and the trivial comb theta = 1 yield an
/// empty set.
ResonanceSet resonances(double theta, int n);

/// Result of golden-section maximization of T around each closed-form k_j.
/// The transmission is quadratically flat at a resonance, so the location is
/// determined only to about sqrt(eps / curvature); the peak value is the
/// sharp quantity.
struct ResonanceRefinement {
    double max_location_error = 0.0;  // worst |argmax - k_j|
    double max_value_gap = 0.0;       // worst 1 - T(argmax)
};

ResonanceRefinement refine_resonances(double theta, int n);

/// The k-interval around pi/2 that contains the resonances of every comb size.
struct Passband {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double k) const noexcept { return k > lo && k < hi; }
};

/// lo = pi/2 - arcsin(2 theta/(theta^2+1)), hi = pi - lo.  Degenerates to
/// (0, pi) at theta = 1.
Passband passband(double theta);

/// inf over n of T_n: 1 - (theta^2-1)^2/((theta^2+1)^2 sin^2 k) inside the
/// pass band, 0 outside.  pi-periodic in k.
double envelope(double theta, double k);

/// Small-contrast decay bound c * theta^{2n} / |cos k|^{2(n-1)} with c = 8.
/// T_n(theta, k) <= bound verified for theta <= 0.2, |cos k| >= 7 theta,
/// n <= 12; c is an implementation constant chosen with empirical margin over
/// that domain (the sharp theta -> 0 limit of the ratio is 4, approached from
/// above, so no smaller constant works at finite theta).
double small_theta_bound(double theta, double k, int n);

/// 4 n^2 (1-theta)^2, an upper bound for sup_k (1 - T_n) near theta = 1.
double theta_to_one_bound(double theta, int n);

}  // namespace dpcomb
