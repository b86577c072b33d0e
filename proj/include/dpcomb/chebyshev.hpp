#pragma once

#include <utility>

namespace dpcomb {

/// Chebyshev polynomial of the second kind U_n(x), evaluated by the forward
/// three-term recurrence U_n = 2x U_{n-1} - U_{n-2}, U_0 = 1, U_1 = 2x.
///
/// Valid on the whole real line. For |x| <= 1 the iterates are bounded by
/// n + 1; for |x| > 1 they grow monotonically, so the recurrence is stable in
/// both regimes. Relative accuracy is about n * 10 ulps up to n = 1e4.
double chebyshev_u(int n, double x);

/// (U_{n-1}(x), U_{n-2}(x)) from a single recurrence pass, with U_{-1} := 0.
/// Requires n >= 1.
std::pair<double, double> chebyshev_u_pair(int n, double x);

}  // namespace dpcomb
