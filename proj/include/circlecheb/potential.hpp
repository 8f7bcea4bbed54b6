#pragma once

#include "circlecheb/angle_set.hpp"
#include "circlecheb/kernel.hpp"

namespace circlecheb {

struct PotentialValue {
    double value = 0.0;
    double first_deriv = 0.0;
    double second_deriv = 0.0;
    // theta sits on an atom of a pole kernel; value is +inf, derivatives are not meaningful.
    bool pole_hit = false;
};

/// S_f(theta) = sum_j f(theta - theta_j) together with its first two derivatives.
PotentialValue potential(const AngleSet& set, double theta, const Kernel& kernel);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Both sides of  sum_{j=1}^n sin^{-2}(t/2 - j pi/n) = 2 n^2 / (1 - cos nt).
/// Throws PoleHit when t is (within kAngleTol) a pole of the identity.
IdentitySides cosform_check(int n, double t);

}  // namespace circlecheb
