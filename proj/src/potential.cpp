#include "circlecheb/potential.hpp"

#include <cmath>
#include <limits>

#include "circlecheb/errors.hpp"

namespace circlecheb {

PotentialValue potential(const AngleSet& set, double theta, const Kernel& kernel) {
    PotentialValue out;
    for (double a : set) {
        const KernelSample s = kernel.eval(theta - a);
        if (std::isinf(s.value)) {
            out.pole_hit = true;
            continue;
        }
        out.value += s.value;
        out.first_deriv += s.first;
        out.second_deriv += s.second;
    }
    if (out.pole_hit) {
        out.value = std::numeric_limits<double>::infinity();
        out.first_deriv = std::numeric_limits<double>::quiet_NaN();
        out.second_deriv = std::numeric_limits<double>::infinity();
    }
    return out;
}

IdentitySides cosform_check(int n, double t) {
    if (n < 1) throw CircleError(ErrorCode::OutOfDomain, "cosform_check needs n >= 1");
    const double nd = static_cast<double>(n);
    // 1 - cos(nt) = 2 sin^2(nt/2); the half-angle form avoids cancellation near the poles.
    const double half = std::sin(0.5 * nd * t);
    if (std::abs(angle_diff(nd * t, 0.0)) <= kAngleTol * nd)
        throw CircleError(ErrorCode::PoleHit, "t is a pole of the cosine identity");
    IdentitySides out;
    out.rhs = 2.0 * nd * nd / (2.0 * half * half);
    for (int j = 1; j <= n; ++j) {
        const double s = std::sin(0.5 * t - j * kPi / nd);
        out.lhs += 1.0 / (s * s);
    }
    return out;
}

}  // namespace circlecheb
