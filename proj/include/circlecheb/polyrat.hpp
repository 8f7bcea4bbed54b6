#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circlecheb/angle_set.hpp"
#include "circlecheb/equioscillation.hpp"
#include "circlecheb/polynomial.hpp"

namespace circlecheb {

/// The point e^{i theta}.
cplx on_circle(double theta);

/// If every root of g lies on the unit circle (within tol), returns the unit
/// constant gamma with g* = gamma g; otherwise nullopt. Roots are located via
/// companion eigenvalues, so multiple roots need tol of order sqrt(machine eps).
/// Throws Degenerate for constant g.
std::optional<cplx> unimodular_factor(const ComplexPoly& g, double tol = 1e-9);

/// Polynomials built from 2n alternation points w_1..w_{2n} and one extra point w:
///   g1 = alpha prod (z - w_{2k}),     alpha^2 = (-1)^n     prod conj(w_{2k})
///   g2 = c beta prod (z - w_{2k-1}),  beta^2  = (-1)^{n+1} prod conj(w_{2k-1})
/// with real c fixed by g1(w) + i g2(w) = 0, and h = (g1 + g2)/2, so that
/// h/h* = (-1)^{k+1} at w_k and h/h* = i at w.
struct EquifuncConstruction {
    ComplexPoly h;
    ComplexPoly g1;
    ComplexPoly g2;
    cplx alpha;
    cplx beta;
    double c = 0.0;
    std::vector<cplx> g1_roots;  // the w_{2k}
    std::vector<cplx> g2_roots;  // the w_{2k-1}

    /// h(z) from the factored g1, g2. The expanded coefficients of h lose
    /// accuracy quickly with n (about 1e-7 relative at n = 14), the factors do not.
    cplx h_at(cplx z) const;
    /// h*(z) = z^n conj(h(1/conj z)), also from the factors. z must be nonzero.
    cplx h_star_at(cplx z) const;
    cplx ratio_at(cplx z) const { return h_at(z) / h_star_at(z); }
};

/// `w` holds the 2n angles in cyclic order (either orientation) followed around
/// the circle by `w_extra`. alpha_sign = -1 selects the other square root for alpha.
/// Throws OrderViolation for an odd count or out-of-order points, Degenerate
/// when two of the 2n+1 points coincide.
EquifuncConstruction construct_h(std::span<const double> w, double w_extra, int alpha_sign = 1);

struct BlaschkeProduct {
    cplx rho = 1.0;
    int k = 0;
    std::vector<cplx> alphas;

    int order() const noexcept { return k + static_cast<int>(alphas.size()); }
    /// Throws OutOfDomain unless |rho| = 1 and 0 < |alpha_j| < 1.
    void validate(double tol = 1e-12) const;
};

/// rho z^k prod (z - alpha_j)/(1 - conj(alpha_j) z). Throws PoleHit at z = 1/conj(alpha_j).
cplx blaschke_eval(const BlaschkeProduct& b, cplx z);

/// R(z) = prod (z - z_j)^2 / ( -z sum_j z_j prod_{k != j} (z - z_k)^2 ).
/// On the circle 1/R(e^{i theta}) = sum_j |e^{i theta} - z_j|^{-2}.
struct RationalOnCircle {
    ComplexPoly num;
    ComplexPoly den;
    std::vector<cplx> points;  // z_j, used for the factored evaluation

    /// Factored evaluation; 0 at an atom.
    cplx operator()(cplx z) const;
    /// num(z) / den(z) from the expanded coefficients.
    cplx eval_expanded(cplx z) const;
};

/// Throws Degenerate on coincident points.
RationalOnCircle rational_R(const AngleSet& set);

/// g1 = alpha prod (z - z_j) with alpha^2 = (-1)^n prod conj(z_j), and g2 from
/// (n/2) g2(z) = z g1'(z) - (n/2) g1(z). The zeros of g2 on the circle are the
/// places where |g1| is locally maximal.
struct DerivedPair {
    ComplexPoly g1;
    ComplexPoly g2;
    cplx alpha;
};

/// Throws Degenerate on coincident points.
DerivedPair derived_g2(const AngleSet& set);

/// g2(z) / g1(z) = (2/n) sum_j z/(z - z_j) - 1, evaluated without expanding g1.
cplx derived_g2_over_g1(const AngleSet& set, cplx z);

struct Sample {
    double angle = 0.0;
    double value = 0.0;
};

/// Alternating near-extremal points of a sampled real function on the circle.
/// A sample is extremal when |value| is a local maximum among its cyclic
/// neighbours and |value| >= (1 - tol) * sup_norm; runs of equal sign collapse
/// to their largest member. Throws InsufficientResolution when the cyclic
/// sample spacing exceeds pi / (32 n_target).
EquioscillationReport equioscillation_detect(std::span<const Sample> samples, int n_target,
                                             double tol = 1e-6);

}  // namespace circlecheb
