#include "dpcomb/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "dpcomb/comb.hpp"
#include "dpcomb/oracle.hpp"
#include "dpcomb/regularized.hpp"
#include "dpcomb/transfer.hpp"

namespace dpcomb {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckResult check_max(const std::string& name, double worst, double tol,
                      const std::string& extra = {}) {
    return {name, worst <= tol,
            "max defect " + fmt(worst) + " (tolerance " + fmt(tol) + ")" +
                (extra.empty() ? "" : ", " + extra)};
}

CheckResult closed_vs_matrix_transmission() {
    double worst = 0.0;
    for (int it = 1; it <= 9; ++it) {
        const double theta = 0.1 * it;
        const Contrast contrast(theta);
        for (int ik = 1; ik <= 500; ++ik) {
            const double k = kPi * ik / 500.0;
            TransferMatrix acc = single_matrix(contrast, 0.0);
            for (int n = 1; n <= 12; ++n) {
                if (n > 1) acc = single_matrix(contrast, (n - 1) * k) * acc;
                const double t_matrix = amplitudes_from_matrix(acc).transmission();
                const double t_closed = transmission_closed_form(theta, k, n);
                worst = std::max(worst, std::abs(t_matrix - t_closed));
            }
        }
    }
    return check_max("closed-form vs matrix-product transmission", worst, 1e-10);
}

CheckResult closed_vs_matrix_amplitudes() {
    double worst = 0.0;
    for (double theta : {0.3, 0.7, 2.5, -0.4}) {
        for (int ik = 0; ik < 100; ++ik) {
            const double k = 0.02 + (kPi - 0.02) * ik / 99.0;
            for (int n = 1; n <= 8; ++n) {
                const CombSpec spec(n, Contrast(theta));
                const Amplitudes am = amplitudes_from_matrix(comb_matrix(spec, k));
                const Amplitudes ac = amplitudes_closed_form(theta, k, n);
                worst = std::max({worst, std::abs(am.t - ac.t), std::abs(am.r - ac.r)});
            }
        }
    }
    return check_max("closed-form vs matrix-product amplitudes", worst, 1e-10);
}

CheckResult symmetry_invariances() {
    std::mt19937_64 rng(20250701);
    std::uniform_real_distribution<double> theta_dist(0.1, 0.9);
    std::uniform_real_distribution<double> k_dist(1e-3, kPi - 1e-3);
    std::uniform_int_distribution<int> n_dist(1, 10);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double theta = theta_dist(rng);
        const double k = k_dist(rng);
        const int n = n_dist(rng);
        const double t = transmission_closed_form(theta, k, n);
        worst = std::max(worst, std::abs(transmission_closed_form(theta, k + kPi, n) - t));
        worst = std::max(worst, std::abs(transmission_closed_form(theta, kPi - k, n) - t));
        worst = std::max(worst, std::abs(transmission_closed_form(-theta, k, n) - t));
        worst = std::max(worst, std::abs(transmission_closed_form(1.0 / theta, k, n) - t));
    }
    return check_max("pi-periodicity, mirror and contrast invariances", worst, 1e-12);
}

CheckResult even_comb_identity() {
    double worst = 0.0;
    for (double theta : {0.1, 0.5, 0.9}) {
        for (int n = 2; n <= 40; n += 2) {
            const CombSpec spec(n, Contrast(theta));
            worst = std::max(worst,
                             max_entry_distance(comb_matrix(spec, kPi / 2.0),
                                                TransferMatrix::identity()));
        }
    }
    return check_max("even comb is transparent at k = pi/2", worst, 1e-12);
}

CheckResult resonance_exactness() {
    double worst = 0.0;
    for (double theta : {0.1, 0.3, 0.5}) {
        for (int n = 2; n <= 10; ++n) {
            for (double kj : resonances(theta, n).points)
                worst = std::max(worst, 1.0 - transmission_closed_form(theta, kj, n));
        }
    }
    return check_max("unit transmission at closed-form resonances", worst, 1e-10);
}

CheckResult small_comb_formulas() {
    double worst = 0.0;
    for (double theta : {0.2, 0.5, 0.8}) {
        const double t2 = theta * theta;
        for (int ik = 0; ik <= 500; ++ik) {
            const double k = kPi * ik / 500.0;
            const double c2 = std::cos(k) * std::cos(k);
            const double ref2 =
                4.0 * t2 * t2 / (std::pow(1.0 - t2 * t2, 2) * c2 + 4.0 * t2 * t2);
            worst = std::max(worst, std::abs(transmission_closed_form(theta, k, 2) - ref2));
            const double ref3 = 4.0 * std::pow(t2, 3) /
                                ((1.0 + t2) * (1.0 + t2) *
                                 (std::pow(1.0 - t2 * t2, 2) * c2 * c2 -
                                  2.0 * t2 * std::pow(1.0 - t2, 2) * c2 + t2 * t2));
            worst = std::max(worst, std::abs(transmission_closed_form(theta, k, 3) - ref3));
        }
    }
    return check_max("two- and three-interaction explicit formulas", worst, 1e-12);
}

CheckResult eta_reproduction() {
    const ResonantPotential p = example_potential(0.2);
    const double defect = std::abs(p.eta() - 0.21296);
    return {"sampled-family eta at theta = 0.2", defect <= 1e-4,
            "eta = " + fmt(p.eta()) + ", |eta - 0.21296| = " + fmt(defect) + " (tolerance 1e-4)"};
}

CheckResult half_bound_reproduction() {
    double worst = 0.0;
    for (double theta : {0.2, 0.5, 2.0}) {
        const ResonantPotential p = example_potential(theta);
        const FundamentalPair pair = integrate_dipole(p, 0.0, 0.1);
        worst = std::max(worst, std::abs(pair.y1 - theta));        // u(1)
        worst = std::max(worst, std::abs(pair.y1p));               // u'(1)
        worst = std::max(worst, std::abs(pair.y2 - p.eta() / theta));  // v(1)
        worst = std::max(worst, std::abs(pair.y2p - 1.0 / theta)); // v'(1)
        worst = std::max(worst, pair.wronskian_defect());
    }
    return check_max("zero-frequency integration reproduces (theta, eta)", worst, 1e-8);
}

// The dipole model matrix and the integrated one agree only in the
// epsilon k -> 0 limit (the model freezes the interior at zero energy), so
// the honest cross-check is the first-order convergence rate, not pointwise
// agreement at finite epsilon.
CheckResult dipole_model_convergence() {
    double worst_ratio_lo = 10.0, worst_ratio_hi = 0.0, worst_tail = 0.0;
    for (double theta : {0.2, 0.5, 2.0}) {
        const ResonantPotential p = example_potential(theta);
        for (double k : {0.5, 1.0, 2.5}) {
            double prev = -1.0;
            for (double eps : {0.1, 0.05, 0.025}) {
                const TransferMatrix numeric = dipole_matrix_numeric(p, 0.0, k, eps);
                const TransferMatrix model =
                    dipole_matrix_analytic(theta, p.eta(), 0.0, k, eps);
                const double diff = max_entry_distance(numeric, model);
                if (prev > 0.0) {
                    worst_ratio_lo = std::min(worst_ratio_lo, prev / diff);
                    worst_ratio_hi = std::max(worst_ratio_hi, prev / diff);
                }
                prev = diff;
            }
            const TransferMatrix numeric = dipole_matrix_numeric(p, 0.0, k, 1e-4);
            const TransferMatrix model = dipole_matrix_analytic(theta, p.eta(), 0.0, k, 1e-4);
            worst_tail = std::max(worst_tail, max_entry_distance(numeric, model));
        }
    }
    const bool ok = worst_ratio_lo >= 1.5 && worst_ratio_hi <= 3.0 && worst_tail <= 2e-4;
    return {"dipole model vs integrated matrix, O(k epsilon) convergence", ok,
            "halving ratios in [" + fmt(worst_ratio_lo) + ", " + fmt(worst_ratio_hi) +
                "] (want [1.5, 3]), gap at epsilon = 1e-4: " + fmt(worst_tail)};
}

CheckResult regularized_limit() {
    // Ideal-comb limit of the analytic regularized family.
    double worst_ratio_lo = 10.0, worst_ratio_hi = 0.0;
    const ResonantPotential p = example_potential(0.2);
    for (int n : {2, 3, 4}) {
        for (int i = 0; i < 20; ++i) {
            const double k = 0.35 + 0.75 * i / 19.0;
            const double ideal = transmission_closed_form(0.2, k, n);
            double prev = -1.0;
            for (double eps : {0.1, 0.05, 0.025}) {
                const DipoleArraySpec spec(p, n, eps);
                const double diff = std::abs(regularized_transmission(spec, k) - ideal);
                if (prev > 0.0) {
                    worst_ratio_lo = std::min(worst_ratio_lo, prev / diff);
                    worst_ratio_hi = std::max(worst_ratio_hi, prev / diff);
                }
                prev = diff;
            }
        }
    }
    const bool ok = worst_ratio_lo >= 1.6 && worst_ratio_hi <= 2.6;
    return {"regularized transmission converges to the ideal comb at O(epsilon)", ok,
            "halving ratios in [" + fmt(worst_ratio_lo) + ", " + fmt(worst_ratio_hi) +
                "] (want [1.6, 2.6])"};
}

CheckResult oracle_limit() {
    // The integrated path must reach the same ideal limit.
    double worst = 0.0;
    const ResonantPotential p = example_potential(0.2);
    for (int n : {2, 3}) {
        for (double k : {0.7, 1.2, 2.0}) {
            const DipoleArraySpec spec(p, n, 1e-3);
            const double ideal = transmission_closed_form(0.2, k, n);
            worst = std::max(worst, std::abs(array_transmission_numeric(spec, k) - ideal));
        }
    }
    return check_max("integrated array reaches the ideal comb as epsilon -> 0", worst, 5e-3);
}

}  // namespace

std::vector<CheckResult> run_verification(bool full) {
    std::vector<CheckResult> results;
    results.push_back(closed_vs_matrix_transmission());
    results.push_back(closed_vs_matrix_amplitudes());
    results.push_back(symmetry_invariances());
    results.push_back(even_comb_identity());
    results.push_back(resonance_exactness());
    results.push_back(small_comb_formulas());
    if (full) {
        results.push_back(eta_reproduction());
        results.push_back(half_bound_reproduction());
        results.push_back(dipole_model_convergence());
        results.push_back(regularized_limit());
        results.push_back(oracle_limit());
    }
    return results;
}

}  // namespace dpcomb
