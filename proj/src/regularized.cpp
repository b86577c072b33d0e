#include "dpcomb/regularized.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dpcomb/quadrature.hpp"

namespace dpcomb {

namespace {

double quartic_u(double theta, double x) {
    const double q = 4.0 * x * x - (theta + 7.0) * x + 2.0 * (theta + 1.0);
    return 0.25 * (x + 1.0) * (x + 1.0) * q + 1.0;
}

double quartic_potential(double theta, double x) {
    const double q = 4.0 * x * x - (theta + 7.0) * x + 2.0 * (theta + 1.0);
    const double num = 48.0 * x * x + 6.0 * (1.0 - theta) * x - 16.0;
    return num / ((x + 1.0) * (x + 1.0) * q + 4.0);
}

// Endpoint slope from a one-sided cubic fit through four samples.  A 3-point
// or plain finite-difference estimate would report the O(h) curvature signal
// of a perfectly flat function as slope, so it could never resolve 1e-6.
double end_slope(const std::vector<double>& x, const std::vector<double>& y, bool left) {
    const std::size_t n = x.size();
    const std::size_t i0 = left ? 0 : n - 4;
    const double x0 = left ? x.front() : x.back();
    // Divided-difference table for the cubic through (x[i0..i0+3], y[...]).
    double d0[4], d1[3], d2[2];
    for (int j = 0; j < 4; ++j) d0[j] = y[i0 + j];
    for (int j = 0; j < 3; ++j) d1[j] = (d0[j + 1] - d0[j]) / (x[i0 + j + 1] - x[i0 + j]);
    for (int j = 0; j < 2; ++j) d2[j] = (d1[j + 1] - d1[j]) / (x[i0 + j + 2] - x[i0 + j]);
    const double d3 = (d2[1] - d2[0]) / (x[i0 + 3] - x[i0]);
    // Derivative of the Newton form at x0.
    const double a = x0 - x[i0], b = x0 - x[i0 + 1], c = x0 - x[i0 + 2];
    return d1[0] + d2[0] * (a + b) + d3 * (a * b + a * c + b * c);
}

double eta_from(const ResonantPotential& p) {
    const double integral = adaptive_simpson(
        [&](double x) {
            const double u = p.half_bound(x);
            return 1.0 / (u * u);
        },
        -1.0, 1.0, 1e-10);
    return p.theta() * p.theta() * integral;
}

}  // namespace

double ResonantPotential::half_bound(double x) const {
    if (x <= -1.0) return 1.0;
    if (x >= 1.0) return theta_;
    if (quartic_theta_) return quartic_u(*quartic_theta_, x);
    return (*spline_u_)(x);
}

double ResonantPotential::potential(double x) const {
    if (x < -1.0 || x > 1.0) return 0.0;
    if (quartic_theta_) return quartic_potential(*quartic_theta_, x);
    return spline_u_->second_derivative(x) / (*spline_u_)(x);
}

ResonantPotential example_potential(double theta) {
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("example_potential: theta must be finite and nonzero");
    // Positivity of the quartic half-bound state, by dense sampling.
    for (int i = 0; i <= 4096; ++i) {
        const double x = -1.0 + 2.0 * i / 4096.0;
        if (!(quartic_u(theta, x) > 0.0))
            throw std::runtime_error("example_potential: half-bound state not positive");
    }
    ResonantPotential p;
    p.quartic_theta_ = theta;
    p.theta_ = theta;
    p.eta_ = eta_from(p);
    return p;
}

ResonantPotential custom_potential(const std::vector<double>& x, const std::vector<double>& u) {
    const std::size_t n = x.size();
    if (n < 64 || u.size() != n)
        throw std::invalid_argument("custom_potential: need >= 64 matching samples");
    if (std::abs(x.front() + 1.0) > 1e-9 || std::abs(x.back() - 1.0) > 1e-9)
        throw std::invalid_argument("custom_potential: samples must span [-1, 1]");
    for (double ui : u)
        if (!(ui > 0.0)) throw std::runtime_error("custom_potential: half-bound state not positive");

    std::vector<double> scaled(u);
    const double norm = u.front();
    for (double& ui : scaled) ui /= norm;  // enforce u(-1) = 1

    double scale = 0.0;
    for (double ui : scaled) scale = std::max(scale, std::abs(ui));
    // Flatness at the support edges.  From samples with spacing h the slope is
    // only determined up to the O(h^2) truncation of the fit, so the 1e-6
    // tolerance gets an h^2-proportional floor; genuinely sloped data still
    // fails by a wide margin.
    const double h_end = std::max(x[1] - x[0], x[n - 1] - x[n - 2]);
    const double tol = std::max(1e-6, 40.0 * h_end * h_end * scale);
    const double sl = end_slope(x, scaled, true);
    const double sr = end_slope(x, scaled, false);
    if (std::abs(sl) > tol || std::abs(sr) > tol)
        throw std::runtime_error("custom_potential: not a half-bound state (sloped endpoint)");

    ResonantPotential p;
    p.theta_ = scaled.back();
    p.spline_u_ = CubicSpline(x, std::move(scaled), 0.0, 0.0);
    p.eta_ = eta_from(p);
    return p;
}

ResonantPotential load_potential(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# half-bound-state v1", 0) != 0)
        throw std::runtime_error("load_potential: missing '# half-bound-state v1' header");
    std::vector<double> xs, us;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double x, u;
        if (!(row >> x >> u)) throw std::runtime_error("load_potential: malformed sample row");
        xs.push_back(x);
        us.push_back(u);
    }
    return custom_potential(xs, us);
}

void save_potential(std::ostream& out, const ResonantPotential& p, int samples) {
    if (samples < 64) throw std::invalid_argument("save_potential: need >= 64 samples");
    out << "# half-bound-state v1\n";
    char buf[64];
    for (int i = 0; i < samples; ++i) {
        const double x = -1.0 + 2.0 * i / (samples - 1);
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", x, p.half_bound(x));
        out << buf;
    }
}

DipoleArraySpec::DipoleArraySpec(ResonantPotential potential_, int n_, double epsilon_,
                                 double spacing_)
    : potential(std::move(potential_)), n(n_), epsilon(epsilon_), spacing(spacing_) {
    if (n < 1) throw std::invalid_argument("dipole array: n must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("dipole array: epsilon must be positive");
    if (!(spacing > 0.0)) throw std::invalid_argument("dipole array: spacing must be positive");
    if (n > 1 && !(epsilon < spacing / 2.0))
        throw std::invalid_argument("dipole array: supports overlap, need epsilon < spacing/2");
}

TransferMatrix dipole_matrix_analytic(double theta, double eta, double x0, double k,
                                      double epsilon) {
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("degenerate contrast: theta must be finite and nonzero");
    if (!(epsilon > 0.0)) throw std::invalid_argument("dipole matrix: epsilon must be positive");
    const double half = 1.0 / (2.0 * theta);
    const complexd i_eke{0.0, epsilon * k * eta};
    const complexd z1 =
        half * (theta * theta + 1.0 + i_eke) * std::polar(1.0, -2.0 * epsilon * k);
    const complexd z2 = half * (theta * theta - 1.0 + i_eke) * std::polar(1.0, 2.0 * k * x0);
    return {z1, z2};
}

TransferMatrix regularized_comb_matrix(const DipoleArraySpec& spec, double k) {
    const double theta = spec.potential.theta();
    const double eta = spec.potential.eta();
    TransferMatrix acc = dipole_matrix_analytic(theta, eta, 0.0, k, spec.epsilon);
    for (int j = 1; j < spec.n; ++j)
        acc = dipole_matrix_analytic(theta, eta, j * spec.spacing, k, spec.epsilon) * acc;
    return acc;
}

double regularized_transmission(const DipoleArraySpec& spec, double k) {
    return amplitudes_from_matrix(regularized_comb_matrix(spec, k)).transmission();
}

}  // namespace dpcomb
