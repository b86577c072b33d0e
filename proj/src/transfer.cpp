#include "dpcomb/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace dpcomb {

Contrast::Contrast(double theta) : theta_(theta) {
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("degenerate contrast: theta must be finite and nonzero");
}

double TransferMatrix::su11_defect() const noexcept {
    return std::abs(std::norm(z1) - std::norm(z2) - 1.0);
}

double max_entry_distance(const TransferMatrix& a, const TransferMatrix& b) noexcept {
    return std::max(std::abs(a.z1 - b.z1), std::abs(a.z2 - b.z2));
}

CombSpec::CombSpec(int n_, Contrast theta_, double spacing_)
    : n(n_), theta(theta_), spacing(spacing_) {
    if (n < 1) throw std::invalid_argument("comb: n must be positive");
    if (!(spacing > 0.0)) throw std::invalid_argument("comb: spacing must be positive");
}

TransferMatrix single_matrix(Contrast theta, double z) {
    const double th = theta.value();
    const double half = 1.0 / (2.0 * th);
    return {complexd{(th * th + 1.0) * half, 0.0},
            std::polar((th * th - 1.0) * half, 2.0 * z)};
}

TransferMatrix comb_matrix(const CombSpec& spec, double k) {
    const double k_eff = spec.spacing * k;
    TransferMatrix acc = single_matrix(spec.theta, 0.0);
    for (int j = 1; j < spec.n; ++j) {
        acc = single_matrix(spec.theta, j * k_eff) * acc;
        if (std::abs(acc.z1) > 1e150)
            throw std::overflow_error("comb_matrix: transfer-matrix entries exceed 1e150");
    }
    return acc;
}

Amplitudes amplitudes_from_matrix(const TransferMatrix& m) {
    const complexd lr = m.lower_right();
    if (std::abs(lr) < 1.0 - 1e-8)
        throw std::runtime_error(
            "amplitudes_from_matrix: lower-right modulus below 1, matrix numerically corrupted");
    const complexd t = 1.0 / lr;
    return {t, -t * m.lower_left()};
}

}  // namespace dpcomb
