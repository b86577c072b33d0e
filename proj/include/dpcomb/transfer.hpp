#pragma once

#include <complex>

namespace dpcomb {

using complexd = std::complex<double>;

/// Interface parameter theta of a single scale-invariant point interaction
/// psi(a+) = theta psi(a-), psi'(a+) = theta^{-1} psi'(a-).  Nonzero.
class Contrast {
public:
    explicit Contrast(double theta);
    double value() const noexcept { return theta_; }

private:
    double theta_;
};

/// Complex 2x2 matrix of the form [[z1, conj(z2)], [z2, conj(z1)]] with
/// |z1|^2 - |z2|^2 = 1.  Stores only (z1, z2); the remaining entries are the
/// implied conjugates, so the group structure is intrinsic and products and
/// inverses never leave it.
struct TransferMatrix {
    complexd z1{1.0, 0.0};  // upper-left entry
    complexd z2{0.0, 0.0};  // lower-left entry

    static TransferMatrix identity() noexcept { return {}; }

    complexd upper_left() const noexcept { return z1; }
    complexd upper_right() const noexcept { return std::conj(z2); }
    complexd lower_left() const noexcept { return z2; }
    complexd lower_right() const noexcept { return std::conj(z1); }

    /// | |z1|^2 - |z2|^2 - 1 |, the distance from exact group membership.
    double su11_defect() const noexcept;

    /// Exact swap-conjugate inverse; no general matrix inversion.
    TransferMatrix inverse() const noexcept { return {std::conj(z1), -z2}; }

    friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) noexcept {
        return {a.z1 * b.z1 + std::conj(a.z2) * b.z2,
                a.z2 * b.z1 + std::conj(a.z1) * b.z2};
    }
};

/// Largest entrywise |difference| between two transfer matrices.
double max_entry_distance(const TransferMatrix& a, const TransferMatrix& b) noexcept;

/// Left transmission/reflection amplitude pair; |t|^2 + |r|^2 = 1, t != 0.
struct Amplitudes {
    complexd t;
    complexd r;

    double transmission() const noexcept { return std::norm(t); }
};

/// A comb of n equally spaced identical interactions with spacing h.
struct CombSpec {
    CombSpec(int n, Contrast theta, double spacing = 1.0);

    int n;
    Contrast theta;
    double spacing;
};

/// Transfer matrix of one interaction: (1/2theta) [[theta^2+1, (theta^2-1)e^{-2iz}],
/// [(theta^2-1)e^{2iz}, theta^2+1]].
TransferMatrix single_matrix(Contrast theta, double z);

/// Ordered product M(theta,(n-1)k_eff) ... M(theta,k_eff) M(theta,0) with
/// k_eff = spacing * k; the comb is always reduced to unit spacing by
/// rescaling the frequency.  Throws std::overflow_error once |z1| exceeds
/// 1e150 (deep tunnelling regime where doubles would soon overflow).
TransferMatrix comb_matrix(const CombSpec& spec, double k);

/// Reads (t, r) off the SU(1,1) representation: t is the reciprocal of the
/// lower-right entry, r = -t * (lower-left entry).  A lower-right modulus
/// below 1 - 1e-8 is impossible for a valid matrix and reported as corruption.
Amplitudes amplitudes_from_matrix(const TransferMatrix& m);

}  // namespace dpcomb
