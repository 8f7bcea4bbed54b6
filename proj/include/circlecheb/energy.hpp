#pragma once

#include "circlecheb/angle_set.hpp"

namespace circlecheb {

struct EnergyValue {
    double value = 0.0;
    int n = 0;
    double p = 0.0;
};

/// Riesz p-energy: sum over ordered pairs j != k of |xi_j - xi_k|^{-p}.
/// Throws PoleHit on coincident points.
EnergyValue riesz_energy(const AngleSet& set, double p);

/// Riesz p-energy of the n-th roots of unity, n * sum_{k=1}^{n-1} (2 sin(pi k/n))^{-p}.
EnergyValue uniform_energy(int n, double p);

/// Chebyshev value of the n-th roots of unity from energies: E_{2n}/(2n) - E_n/n.
double uniform_min_from_energy(int n, double p);

/// Which constant multiplies n in the chord bound 2 sin(k/(2en)) >= k/(c e n).
enum class BoundConstant {
    Three,  // c = 3
    Sharp,  // c = 1 / (2e sin(1/(2e)))
};

/// Upper estimate of the n-th L_p Chebyshev constant of the circle:
///   p > 1:      (ce)^p zeta(p) n^p
///   p = 1:      ce n (1 + ln n)
///   0 < p < 1:  (ce)^p (n/(1-p) - p/(1-p))
/// Throws OutOfDomain for p <= 0.
double upper_bound(int n, double p, BoundConstant c = BoundConstant::Three);

/// Leading-order asymptotic of the uniform Chebyshev value in the form quoted
/// from the energy expansion literature:
///   p > 1:      (2^p - 1) zeta(p) n^p
///   p = 1:      n ln n / pi
///   0 < p < 1:  2^{-p}/sqrt(pi) * Gamma((1-p)/2)/Gamma(1-p/2) * n
double asymptotic_prediction(int n, double p);

/// The p > 1 leading constant obtained by summing the chord terms at the arc
/// midpoints directly: 2 (1 - 2^{-p}) zeta(p) / pi^p. Equals 1/4 at p = 2.
double midpoint_leading_constant(double p);

/// The power of n that the asymptotic regime scales with: n^p, n ln n, or n.
double leading_power(int n, double p);

}  // namespace circlecheb
