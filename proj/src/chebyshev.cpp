#include "dpcomb/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace dpcomb {

namespace {

// Runs the recurrence up to degree n and returns (U_n, U_{n-1}).
std::pair<double, double> recurrence(int n, double x) {
    double prev = 0.0;  // U_{-1}
    double cur = 1.0;   // U_0
    for (int m = 0; m < n; ++m) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

}  // namespace

double chebyshev_u(int n, double x) {
    if (n < 0) throw std::invalid_argument("chebyshev_u: degree must be non-negative");
    if (!std::isfinite(x)) throw std::invalid_argument("chebyshev_u: argument must be finite");
    return recurrence(n, x).first;
}

std::pair<double, double> chebyshev_u_pair(int n, double x) {
    if (n < 1) throw std::invalid_argument("chebyshev_u_pair: degree must be positive");
    if (!std::isfinite(x)) throw std::invalid_argument("chebyshev_u_pair: argument must be finite");
    return recurrence(n - 1, x);
}

}  // namespace dpcomb
