#include "circlecheb/cheb_min.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlecheb/errors.hpp"
#include "circlecheb/potential.hpp"

namespace circlecheb {

namespace {

// Endpoints are pulled in by this fraction of the arc length so pole kernels
// are never evaluated on an atom.
constexpr double kEndpointShrink = 1e-9;
constexpr int kMaxNewtonIters = 200;

}  // namespace

std::vector<Arc> arc_partition(const AngleSet& set) {
    const auto d = set.distinct();
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (std::size_t i = 0; i + 1 < d.size(); ++i) arcs.push_back({d[i], d[i + 1]});
    arcs.push_back({d.back(), d.front() + kTwoPi});
    return arcs;
}

ArcMinimum minimize_on_arc(const AngleSet& set, const Kernel& kernel, const Arc& arc, double tol,
                           std::optional<double> hint) {
    if (!(tol > 0.0)) throw CircleError(ErrorCode::OutOfDomain, "tolerance must be positive");
    const double len = arc.length();
    // kernels report a pole within kAngleTol of an atom, so stay clear of that band
    const double shrink = std::min(std::max(kEndpointShrink * len, 4.0 * kAngleTol), 0.25 * len);
    double lo = arc.left + shrink;
    double hi = arc.right - shrink;

    const PotentialValue at_lo = potential(set, lo, kernel);
    const PotentialValue at_hi = potential(set, hi, kernel);
    if (at_lo.pole_hit || at_hi.pole_hit)
        throw CircleError(ErrorCode::PoleHit, "arc too short to separate from its atoms");
    if (!(at_lo.first_deriv < 0.0)) {
        if (kernel.has_pole_at_zero())
            throw CircleError(ErrorCode::ConvexityViolation, "S' not negative at left end of arc");
        return {arc, lo, at_lo.value};
    }
    if (!(at_hi.first_deriv > 0.0)) {
        if (kernel.has_pole_at_zero())
            throw CircleError(ErrorCode::ConvexityViolation, "S' not positive at right end of arc");
        return {arc, hi, at_hi.value};
    }

    double x = (hint && *hint > lo && *hint < hi) ? *hint : 0.5 * (lo + hi);
    for (int it = 0; it < kMaxNewtonIters; ++it) {
        const PotentialValue v = potential(set, x, kernel);
        if (v.second_deriv < 0.0)
            throw CircleError(ErrorCode::ConvexityViolation, "S'' negative inside arc");
        if (v.first_deriv == 0.0) break;
        if (v.first_deriv < 0.0) lo = x; else hi = x;

        double next = x - v.first_deriv / v.second_deriv;
        if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step < tol || hi - lo < tol) break;
    }
    return {arc, x, potential(set, x, kernel).value};
}

MinimizationResult chebyshev_min(const AngleSet& set, const Kernel& kernel, double tol) {
    MinimizationResult out;
    out.global_min = std::numeric_limits<double>::infinity();
    for (const Arc& arc : arc_partition(set)) {
        out.per_arc.push_back(minimize_on_arc(set, kernel, arc, tol));
        const ArcMinimum& m = out.per_arc.back();
        if (m.value < out.global_min) {
            out.global_min = m.value;
            out.global_argmin = wrap_angle(m.argmin);
        }
    }
    return out;
}

EquioscillationReport local_minima_report(const AngleSet& set, const Kernel& kernel, double tol) {
    const MinimizationResult res = chebyshev_min(set, kernel, tol);
    EquioscillationReport rep;
    for (const ArcMinimum& m : res.per_arc) {
        rep.points.push_back(wrap_angle(m.argmin));
        rep.values.push_back(m.value);
    }
    const auto [lo, hi] = std::minmax_element(rep.values.begin(), rep.values.end());
    rep.sup_norm = *hi;
    rep.deviation = *hi - *lo;
    rep.order = static_cast<int>(rep.values.size());
    return rep;
}

}  // namespace circlecheb
