#pragma once

#include <vector>

namespace dpcomb {

/// Clamped cubic spline interpolant: prescribed first derivatives at both
/// ends, C2 inside.  Evaluation clamps the argument to the knot range.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y, double left_slope,
                double right_slope);

    double operator()(double x) const;

    /// Piecewise-linear second derivative of the interpolant.
    double second_derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t segment(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace dpcomb
