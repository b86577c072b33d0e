#include "dpcomb/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpcomb {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y, double left_slope,
                         double right_slope)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw std::invalid_argument("spline: need >= 3 matching samples");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1])) throw std::invalid_argument("spline: abscissae must ascend");

    // Tridiagonal system for the knot second derivatives, clamped ends.
    std::vector<double> diag(n), off(n), rhs(n);
    const double h0 = x_[1] - x_[0];
    diag[0] = 2.0 * h0;
    off[0] = h0;
    rhs[0] = 6.0 * ((y_[1] - y_[0]) / h0 - left_slope);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1];
        const double hr = x_[i + 1] - x_[i];
        diag[i] = 2.0 * (hl + hr);
        off[i] = hr;
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
    }
    const double hn = x_[n - 1] - x_[n - 2];
    diag[n - 1] = 2.0 * hn;
    rhs[n - 1] = 6.0 * (right_slope - (y_[n - 1] - y_[n - 2]) / hn);

    // Thomas algorithm; the sub-diagonal equals the previous off-diagonal.
    std::vector<double> c(n);
    c[0] = off[0] / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double sub = (i + 1 < n) ? (x_[i] - x_[i - 1]) : hn;
        const double denom = diag[i] - sub * c[i - 1];
        c[i] = (i + 1 < n) ? off[i] / denom : 0.0;
        rhs[i] = (rhs[i] - sub * rhs[i - 1]) / denom;
    }
    m_.resize(n);
    m_[n - 1] = rhs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m_[i] = rhs[i] - c[i] * m_[i + 1];
}

std::size_t CubicSpline::segment(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t hi = std::clamp<std::size_t>(it - x_.begin(), 1, x_.size() - 1);
    return hi - 1;
}

double CubicSpline::operator()(double x) const {
    x = std::clamp(x, x_.front(), x_.back());
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
    x = std::clamp(x, x_.front(), x_.back());
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    return ((x_[i + 1] - x) * m_[i] + (x - x_[i]) * m_[i + 1]) / h;
}

}  // namespace dpcomb
