#include "dpcomb/comb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dpcomb/chebyshev.hpp"

namespace dpcomb {

namespace {

constexpr double kPi = std::numbers::pi;

// Golden-section maximization of f on [a, b] down to bracket width tol.
template <typename F>
double golden_max(F f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double canonical_theta(double theta) {
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("degenerate contrast: theta must be finite and nonzero");
    theta = std::abs(theta);
    return theta > 1.0 ? 1.0 / theta : theta;
}

double transmission_closed_form(double theta, double k, int n) {
    if (n < 1) throw std::invalid_argument("transmission: n must be positive");
    const double th = canonical_theta(theta);
    if (th == 1.0) return 1.0;  // trivial interactions
    const double alpha = (1.0 + th * th) / (2.0 * th) * std::cos(k);
    const double su = (1.0 - th * th) / (2.0 * th) * chebyshev_u(n - 1, alpha);
    return 1.0 / (1.0 + su * su);
}

Amplitudes amplitudes_closed_form(double theta, double k, int n) {
    if (n < 1) throw std::invalid_argument("amplitudes: n must be positive");
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("degenerate contrast: theta must be finite and nonzero");
    const double cosh_kappa = (1.0 + theta * theta) / (2.0 * theta);
    const double sinh_kappa = (theta * theta - 1.0) / (2.0 * theta);
    const auto [u1, u2] = chebyshev_u_pair(n, cosh_kappa * std::cos(k));  // (U_{n-1}, U_{n-2})
    const complexd inv_t =
        cosh_kappa * u1 * std::polar(1.0, (n - 1) * k) - u2 * std::polar(1.0, double(n) * k);
    const complexd t = 1.0 / inv_t;
    const complexd r = -sinh_kappa * u1 * std::polar(1.0, (n - 1) * k) * t;
    return {t, r};
}

ResonanceSet resonances(double theta, int n) {
    const double th = canonical_theta(theta);
    ResonanceSet set{{}, n, th};
    if (n < 2 || th == 1.0) return set;
    set.points.resize(n - 1);
    const double scale = 2.0 * th / (th * th + 1.0);
    // Fill the lower half and mirror it so the k_{n-j} = pi - k_j symmetry is
    // exact; the middle point of an even comb is pi/2 exactly.
    for (int j = 1; 2 * j < n; ++j)
        set.points[j - 1] = std::acos(scale * std::cos(kPi * j / n));
    if (n % 2 == 0) set.points[n / 2 - 1] = kPi / 2.0;
    for (int j = n / 2 + 1; j < n; ++j) set.points[j - 1] = kPi - set.points[n - j - 1];
    return set;
}

ResonanceRefinement refine_resonances(double theta, int n) {
    const ResonanceSet set = resonances(theta, n);
    ResonanceRefinement report;
    if (set.points.empty()) return report;
    double gap = kPi;
    for (std::size_t i = 0; i + 1 < set.points.size(); ++i)
        gap = std::min(gap, set.points[i + 1] - set.points[i]);
    gap = std::min({gap, set.points.front(), kPi - set.points.back()});
    const double radius = std::min(0.45 * gap, 0.05);
    for (double kj : set.points) {
        const double found = golden_max(
            [&](double k) { return transmission_closed_form(set.theta, k, n); },
            kj - radius, kj + radius, 1e-12);
        report.max_location_error = std::max(report.max_location_error, std::abs(found - kj));
        report.max_value_gap = std::max(
            report.max_value_gap, 1.0 - transmission_closed_form(set.theta, found, n));
    }
    return report;
}

Passband passband(double theta) {
    const double th = canonical_theta(theta);
    const double lo = kPi / 2.0 - std::asin(2.0 * th / (th * th + 1.0));
    return {lo, kPi - lo};
}

double envelope(double theta, double k) {
    const double th = canonical_theta(theta);
    double kk = std::fmod(k, kPi);  // pi-periodic
    if (kk < 0.0) kk += kPi;
    const Passband band = passband(th);
    if (!band.contains(kk)) return 0.0;
    const double num = th * th - 1.0;
    const double den = (th * th + 1.0) * std::sin(kk);
    const double val = 1.0 - (num * num) / (den * den);
    return val > 0.0 ? val : 0.0;
}

double small_theta_bound(double theta, double k, int n) {
    if (n < 1) throw std::invalid_argument("small_theta_bound: n must be positive");
    const double th = canonical_theta(theta);
    if (th > 0.5)
        throw std::domain_error("small_theta_bound: asymptotic in theta -> 0, needs theta <= 0.5");
    const double d = std::abs(std::cos(k));
    if (d < 1e-8) throw std::domain_error("small_theta_bound: bound degenerate at band center");
    return 8.0 * std::pow(th, 2 * n) / std::pow(d, 2 * (n - 1));
}

double theta_to_one_bound(double theta, int n) {
    if (n < 1) throw std::invalid_argument("theta_to_one_bound: n must be positive");
    if (!(theta > 0.9 && theta < 1.1))
        throw std::domain_error("theta_to_one_bound: valid for theta near 1 only");
    const double d = 1.0 - theta;
    return 4.0 * n * n * d * d;
}

}  // namespace dpcomb
