#pragma once

#include <string>
#include <vector>

namespace dpcomb {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-path and invariant suites behind the `verify` subcommand.  The fast
/// level runs the closed-form vs matrix-product comparisons and the symmetry
/// checks; full adds the dipole-model vs ODE convergence checks and the
/// sampled-potential reproductions.
std::vector<CheckResult> run_verification(bool full);

}  // namespace dpcomb
