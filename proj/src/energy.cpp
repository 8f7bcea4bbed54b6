#include "circlecheb/energy.hpp"

#include <cmath>
#include <numbers>

#include "circlecheb/errors.hpp"
#include "circlecheb/special_functions.hpp"

namespace circlecheb {

namespace {

void require_positive_p(double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw CircleError(ErrorCode::OutOfDomain, "Riesz exponent must be positive");
}

double chord_power(double chord, double p) {
    return p == 2.0 ? 1.0 / (chord * chord) : std::pow(chord, -p);
}

}  // namespace

EnergyValue riesz_energy(const AngleSet& set, double p) {
    require_positive_p(p);
    const std::size_t n = set.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const double chord = 2.0 * std::abs(std::sin(0.5 * (set[k] - set[j])));
            if (std::abs(angle_diff(set[k], set[j])) <= kAngleTol)
                throw CircleError(ErrorCode::PoleHit, "coincident points have infinite energy");
            sum += chord_power(chord, p);
        }
    }
    return {2.0 * sum, static_cast<int>(n), p};
}

EnergyValue uniform_energy(int n, double p) {
    require_positive_p(p);
    if (n < 1) throw CircleError(ErrorCode::OutOfDomain, "uniform_energy needs n >= 1");
    double sum = 0.0;
    for (int k = 1; k < n; ++k) sum += chord_power(2.0 * std::sin(std::numbers::pi * k / n), p);
    return {n * sum, n, p};
}

double uniform_min_from_energy(int n, double p) {
    return uniform_energy(2 * n, p).value / (2.0 * n) - uniform_energy(n, p).value / n;
}

double upper_bound(int n, double p, BoundConstant c) {
    require_positive_p(p);
    if (n < 1) throw CircleError(ErrorCode::OutOfDomain, "upper_bound needs n >= 1");
    const double e = std::numbers::e;
    const double c_const = c == BoundConstant::Three ? 3.0 : 1.0 / (2.0 * e * std::sin(1.0 / (2.0 * e)));
    const double ce = c_const * e;
    const double nd = n;
    if (p > 1.0) return std::pow(ce, p) * zeta(p) * std::pow(nd, p);
    if (p == 1.0) return ce * nd * (1.0 + std::log(nd));
    return std::pow(ce, p) * (nd / (1.0 - p) - p / (1.0 - p));
}

double asymptotic_prediction(int n, double p) {
    require_positive_p(p);
    if (n < 2) throw CircleError(ErrorCode::OutOfDomain, "asymptotic_prediction needs n >= 2");
    const double nd = n;
    if (p > 1.0) return (std::pow(2.0, p) - 1.0) * zeta(p) * std::pow(nd, p);
    if (p == 1.0) return nd * std::log(nd) / std::numbers::pi;
    return std::pow(2.0, -p) / std::sqrt(std::numbers::pi) * gamma_fn(0.5 * (1.0 - p)) /
           gamma_fn(1.0 - 0.5 * p) * nd;
}

double midpoint_leading_constant(double p) {
    if (!(p > 1.0)) throw CircleError(ErrorCode::OutOfDomain, "midpoint constant needs p > 1");
    return 2.0 * (1.0 - std::pow(2.0, -p)) * zeta(p) / std::pow(std::numbers::pi, p);
}

double leading_power(int n, double p) {
    require_positive_p(p);
    const double nd = n;
    if (p > 1.0) return std::pow(nd, p);
    if (p == 1.0) return nd * std::log(nd);
    return nd;
}

}  // namespace circlecheb
