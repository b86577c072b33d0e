#include "dpcomb/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace dpcomb {

namespace {

using State = std::array<double, 4>;  // y1, y1', y2, y2'

// Joint RK4 sweep over xi in [-1, 1] with n steps; both fundamental
// solutions advance together so the potential is evaluated once per stage.
State rk4_sweep(const ResonantPotential& potential, double energy, int n) {
    State s{1.0, 0.0, 0.0, 1.0};
    const double h = 2.0 / n;
    const auto rhs = [&](double xi, const State& y) -> State {
        const double c = potential.potential(xi) - energy;
        return {y[1], c * y[0], y[3], c * y[2]};
    };
    double xi = -1.0;
    for (int i = 0; i < n; ++i) {
        const State k1 = rhs(xi, s);
        State tmp;
        for (int j = 0; j < 4; ++j) tmp[j] = s[j] + 0.5 * h * k1[j];
        const State k2 = rhs(xi + 0.5 * h, tmp);
        for (int j = 0; j < 4; ++j) tmp[j] = s[j] + 0.5 * h * k2[j];
        const State k3 = rhs(xi + 0.5 * h, tmp);
        for (int j = 0; j < 4; ++j) tmp[j] = s[j] + h * k3[j];
        const State k4 = rhs(xi + h, tmp);
        for (int j = 0; j < 4; ++j)
            s[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        xi = -1.0 + (i + 1) * h;
    }
    return s;
}

double wronskian_defect_of(const State& s) {
    return std::abs(s[0] * s[3] - s[1] * s[2] - 1.0);
}

}  // namespace

double FundamentalPair::wronskian_defect() const noexcept {
    return std::abs(y1 * y2p - y1p * y2 - 1.0);
}

FundamentalPair integrate_dipole(const ResonantPotential& potential, double k, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("integrate_dipole: epsilon must be positive");
    const double energy = (epsilon * k) * (epsilon * k);
    constexpr double tol = 1e-10;
    int n = 64;
    State prev = rk4_sweep(potential, energy, n);
    for (int halving = 0; halving < 20; ++halving) {
        n *= 2;
        const State cur = rk4_sweep(potential, energy, n);
        double change = 0.0;
        for (int j = 0; j < 4; ++j) change = std::max(change, std::abs(cur[j] - prev[j]));
        if (change < tol && wronskian_defect_of(cur) < tol)
            return {cur[0], cur[1], cur[2], cur[3], n};
        prev = cur;
    }
    throw std::runtime_error("integrate_dipole: no convergence after 20 step halvings");
}

TransferMatrix plane_wave_matrix(const FundamentalPair& pair, double x0, double k,
                                 double epsilon) {
    if (k == 0.0) throw std::domain_error("plane_wave_matrix: plane-wave basis degenerate at k = 0");
    // With P = y1(1), S = y2'(1), Q = i eps k y2(1), R = y1'(1)/(i eps k), the
    // matching of value and derivative against plane waves at both support
    // edges gives
    //   z1 = ((P + S) + (Q + R))/2 * e^{-2 i eps k}
    //   z2 = ((P - S) + (Q - R))/2 * e^{ 2 i k x0}
    // and det = PS - QR = Wronskian, so group membership tracks integration
    // accuracy.
    const double ek = epsilon * k;
    const complexd q{0.0, ek * pair.y2};
    const complexd r{0.0, -pair.y1p / ek};
    const complexd z1 = 0.5 * ((pair.y1 + pair.y2p) + (q + r)) * std::polar(1.0, -2.0 * ek);
    const complexd z2 = 0.5 * ((pair.y1 - pair.y2p) + (q - r)) * std::polar(1.0, 2.0 * k * x0);
    return {z1, z2};
}

TransferMatrix dipole_matrix_numeric(const ResonantPotential& potential, double x0, double k,
                                     double epsilon) {
    if (k == 0.0)
        throw std::domain_error("dipole_matrix_numeric: plane-wave basis degenerate at k = 0");
    return plane_wave_matrix(integrate_dipole(potential, k, epsilon), x0, k, epsilon);
}

double array_transmission_numeric(const DipoleArraySpec& spec, double k) {
    if (k == 0.0)
        throw std::domain_error("array_transmission_numeric: plane-wave basis degenerate at k = 0");
    const FundamentalPair pair = integrate_dipole(spec.potential, k, spec.epsilon);
    TransferMatrix acc = plane_wave_matrix(pair, 0.0, k, spec.epsilon);
    for (int j = 1; j < spec.n; ++j)
        acc = plane_wave_matrix(pair, j * spec.spacing, k, spec.epsilon) * acc;
    return amplitudes_from_matrix(acc).transmission();
}

}  // namespace dpcomb
