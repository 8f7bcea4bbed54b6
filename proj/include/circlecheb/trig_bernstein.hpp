#pragma once

#include "circlecheb/angle_set.hpp"
#include "circlecheb/polynomial.hpp"
#include "circlecheb/potential.hpp"

namespace circlecheb {

struct TrigValue {
    double q = 0.0;
    double dq = 0.0;
    double d2q = 0.0;
};

/// Q(t) = prod_j sin((t - t_j)/2), an entire function of exponential type n/2.
/// |Q| is 2pi-periodic and 2^n |Q(t)| = prod_j |e^{it} - e^{it_j}|.
class TrigProduct {
public:
    explicit TrigProduct(AngleSet zeros) : zeros_(std::move(zeros)) {}

    const AngleSet& zeros() const noexcept { return zeros_; }
    std::size_t n() const noexcept { return zeros_.size(); }

    /// Q, Q', Q''. Away from the zeros the derivatives come from the logarithmic
    /// derivative Q'/Q = (1/2) sum cot((t - t_j)/2); within 1e-4 of a zero the
    /// product rule is used instead.
    TrigValue eval(double t) const;

private:
    AngleSet zeros_;
};

/// lhs = (Q''Q - Q'^2)/Q^2 from eval(), rhs = -(1/4) sum sin^{-2}((t - t_j)/2).
/// Throws PoleHit when Q(t) = 0.
IdentitySides logderiv_identity_check(const TrigProduct& q, double t);

struct BernsteinReport {
    double max_q = 0.0;
    double max_dq = 0.0;
    double max_d2q = 0.0;
    bool ok = false;
    double tau = 0.0;  // n/2
    /// max|Q'| / ((n/2) max|Q|); 1 in the extremal case.
    double ratio() const;
};

/// Grid maxima of |Q|, |Q'|, |Q''| over [0, 2pi), each polished by a local
/// golden-section refinement around the best grid samples. ok iff
/// max|Q'| <= (n/2) max|Q| (1 + 1e-9) and max|Q''| <= (n/2)^2 max|Q| (1 + 1e-9).
/// Throws OutOfDomain for grid_size < 2^12.
BernsteinReport bernstein_check(const TrigProduct& q, int grid_size = 1 << 16);

struct ArgmaxResult {
    double t0 = 0.0;
    double q_at_t0 = 0.0;
    /// (1/4) sum sin^{-2}((t0 - t_j)/2) = sum |e^{it0} - z_j|^{-2}
    double potential_at_t0 = 0.0;
    /// |Q''(t0)| / |Q(t0)|
    double curvature_ratio = 0.0;
};

/// Maximizer of |Q|: coarse grid of max(2^14, 64n) points, then Newton on Q'.
ArgmaxResult argmax_and_bound(const TrigProduct& q);

struct ExtremalFormReport {
    bool fits = false;          // Q = a e^{int/2} + b e^{-int/2} on the validation grid
    bool equal_powers = false;  // all z_j^n coincide
    cplx a = 0.0;
    cplx b = 0.0;
    double fit_residual = 0.0;    // max |Q - fit| / max|Q| on the validation grid
    double power_spread = 0.0;    // max |z_j^n - z_1^n|

    bool agree() const noexcept { return fits == equal_powers; }
    bool extremal() const noexcept { return fits && equal_powers; }
};

/// Least-squares fit of (a, b) on 4n equispaced points, validated on an
/// offset grid, alongside the z_j^n = c test.
ExtremalFormReport extremal_form_details(const TrigProduct& q, double tol = 1e-8);

/// True iff Q has the extremal form a e^{int/2} + b e^{-int/2} (both tests pass).
bool extremal_form_check(const TrigProduct& q, double tol = 1e-8);

/// min over the circle of prod |z - z_j|^{-1} = 1 / (2^n max|Q|).
double product_min_M0(const AngleSet& set);

}  // namespace circlecheb
