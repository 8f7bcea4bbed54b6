#include "circlecheb/trig_bernstein.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "circlecheb/errors.hpp"
#include "circlecheb/polyrat.hpp"

namespace circlecheb {

namespace {

constexpr double kProductRuleZone = 1e-4;
constexpr double kInvGolden = 0.6180339887498949;

// Golden-section maximization of g on [a, b].
template <class F>
std::pair<double, double> golden_max(F g, double a, double b) {
    double x1 = b - kInvGolden * (b - a);
    double x2 = a + kInvGolden * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvGolden * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvGolden * (b - a);
            f1 = g(x1);
        }
    }
    return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Relative deficit a grid can have below a peak of an entire function of type
// n/2 sampled with spacing h, with a safety factor of 4.
double peak_slack(std::size_t n, double h) {
    const double half_type = 0.5 * static_cast<double>(n);
    return 2.0 * half_type * half_type * h * h;
}

// Grid indices that are cyclic local maxima of v and lie within `slack` of the top.
std::vector<std::size_t> near_top_peaks(const std::vector<double>& v, double slack) {
    const double top = *std::max_element(v.begin(), v.end());
    const std::size_t m = v.size();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i) {
        if (v[i] >= top * (1.0 - slack) && v[i] >= v[(i + m - 1) % m] && v[i] >= v[(i + 1) % m])
            out.push_back(i);
    }
    return out;
}

// Polish each candidate peak of component `which` (0 = Q, 1 = Q', 2 = Q'') by
// golden section on the neighbouring grid cells; returns (t, |value|) of the best.
std::pair<double, double> polished_max(const TrigProduct& q, const std::vector<double>& grid_vals, double h,
                                       int which) {
    const auto component = [&](double t) {
        const TrigValue v = q.eval(t);
        return std::abs(which == 0 ? v.q : which == 1 ? v.dq : v.d2q);
    };
    std::pair<double, double> best{0.0, -1.0};
    for (const std::size_t i : near_top_peaks(grid_vals, peak_slack(q.n(), h))) {
        const double t = h * static_cast<double>(i);
        auto cand = golden_max(component, t - h, t + h);
        if (grid_vals[i] > cand.second) cand = {t, grid_vals[i]};
        if (cand.second > best.second) best = cand;
    }
    return best;
}

double csc2_sum(const AngleSet& zeros, double t) {
    double s = 0.0;
    for (double tj : zeros) {
        const double x = std::sin(0.5 * (t - tj));
        s += 1.0 / (x * x);
    }
    return s;
}

}  // namespace

TrigValue TrigProduct::eval(double t) const {
    bool near_zero = false;
    for (double tj : zeros_) {
        if (std::abs(angle_diff(t, tj)) < kProductRuleZone) {
            near_zero = true;
            break;
        }
    }

    TrigValue v{1.0, 0.0, 0.0};
    if (near_zero) {
        for (double tj : zeros_) {
            const double u = 0.5 * (t - tj);
            const double f = std::sin(u);
            const double f1 = 0.5 * std::cos(u);
            const double f2 = -0.25 * f;
            v.d2q = v.d2q * f + 2.0 * v.dq * f1 + v.q * f2;
            v.dq = v.dq * f + v.q * f1;
            v.q *= f;
        }
        return v;
    }

    double log_d = 0.0;   // (log Q)'
    double log_d2 = 0.0;  // (log Q)''
    for (double tj : zeros_) {
        const double u = 0.5 * (t - tj);
        const double s = std::sin(u);
        v.q *= s;
        log_d += 0.5 * std::cos(u) / s;
        log_d2 -= 0.25 / (s * s);
    }
    v.dq = v.q * log_d;
    v.d2q = v.q * (log_d * log_d + log_d2);
    return v;
}

IdentitySides logderiv_identity_check(const TrigProduct& q, double t) {
    for (double tj : q.zeros())
        if (std::abs(angle_diff(t, tj)) <= kAngleTol)
            throw CircleError(ErrorCode::PoleHit, "Q vanishes at t");
    const TrigValue v = q.eval(t);
    if (v.q == 0.0) throw CircleError(ErrorCode::PoleHit, "Q vanishes at t");
    return {(v.d2q * v.q - v.dq * v.dq) / (v.q * v.q), -0.25 * csc2_sum(q.zeros(), t)};
}

double BernsteinReport::ratio() const { return max_q > 0.0 ? max_dq / (tau * max_q) : 0.0; }

BernsteinReport bernstein_check(const TrigProduct& q, int grid_size) {
    if (grid_size < (1 << 12)) throw CircleError(ErrorCode::OutOfDomain, "grid_size must be >= 2^12");
    const double h = kTwoPi / grid_size;
    std::array<std::vector<double>, 3> vals;
    for (auto& v : vals) v.resize(static_cast<std::size_t>(grid_size));
    for (int m = 0; m < grid_size; ++m) {
        const TrigValue v = q.eval(h * m);
        vals[0][m] = std::abs(v.q);
        vals[1][m] = std::abs(v.dq);
        vals[2][m] = std::abs(v.d2q);
    }
    BernsteinReport rep;
    rep.max_q = polished_max(q, vals[0], h, 0).second;
    rep.max_dq = polished_max(q, vals[1], h, 1).second;
    rep.max_d2q = polished_max(q, vals[2], h, 2).second;
    const double tau = 0.5 * static_cast<double>(q.n());
    rep.tau = tau;
    rep.ok = rep.max_dq <= tau * rep.max_q * (1.0 + 1e-9) && rep.max_d2q <= tau * tau * rep.max_q * (1.0 + 1e-9);
    return rep;
}

ArgmaxResult argmax_and_bound(const TrigProduct& q) {
    const std::size_t grid = std::max<std::size_t>(1u << 14, 64 * q.n());
    const double h = kTwoPi / static_cast<double>(grid);
    std::vector<double> vals(grid);
    for (std::size_t m = 0; m < grid; ++m) vals[m] = std::abs(q.eval(h * static_cast<double>(m)).q);

    ArgmaxResult best;
    best.q_at_t0 = -1.0;
    for (const std::size_t i : near_top_peaks(vals, peak_slack(q.n(), h))) {
        // safeguarded Newton on Q' inside the neighbouring grid cells
        double lo = h * (static_cast<double>(i) - 1.0);
        double hi = h * (static_cast<double>(i) + 1.0);
        const TrigValue at_i = q.eval(h * static_cast<double>(i));
        const double sgn = at_i.q < 0.0 ? -1.0 : 1.0;
        // g = sgn * Q' decreases through the maximizer
        double t = h * static_cast<double>(i);
        if (sgn * q.eval(lo).dq > 0.0 && sgn * q.eval(hi).dq < 0.0) {
            for (int it = 0; it < 100; ++it) {
                const TrigValue v = q.eval(t);
                const double g = sgn * v.dq;
                if (g == 0.0) break;
                if (g > 0.0) lo = t; else hi = t;
                double next = t - v.dq / v.d2q;
                if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
                const double step = std::abs(next - t);
                t = next;
                if (step < 1e-15 || hi - lo < 1e-15) break;
            }
        }
        const double val = std::abs(q.eval(t).q);
        if (val > best.q_at_t0) {
            best.t0 = t;
            best.q_at_t0 = val;
        }
    }
    best.t0 = wrap_angle(best.t0);
    const TrigValue v = q.eval(best.t0);
    best.q_at_t0 = std::abs(v.q);
    best.potential_at_t0 = 0.25 * csc2_sum(q.zeros(), best.t0);
    best.curvature_ratio = std::abs(v.d2q) / std::abs(v.q);
    return best;
}

ExtremalFormReport extremal_form_details(const TrigProduct& q, double tol) {
    const std::size_t n = q.n();
    const double tau = 0.5 * static_cast<double>(n);
    ExtremalFormReport rep;

    // least squares on 4n points for Q ~ a e^{i tau t} + b e^{-i tau t}
    const std::size_t fit_pts = 4 * n;
    cplx g11 = 0.0, g12 = 0.0, g22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (std::size_t m = 0; m < fit_pts; ++m) {
        const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(fit_pts);
        const cplx e1 = std::polar(1.0, tau * t);
        const cplx e2 = std::conj(e1);
        const double y = q.eval(t).q;
        g11 += std::norm(e1);
        g12 += std::conj(e1) * e2;
        g22 += std::norm(e2);
        r1 += std::conj(e1) * y;
        r2 += std::conj(e2) * y;
    }
    const cplx det = g11 * g22 - g12 * std::conj(g12);
    rep.a = (g22 * r1 - g12 * r2) / det;
    rep.b = (g11 * r2 - std::conj(g12) * r1) / det;

    // independent validation grid, offset from the fitting grid
    const std::size_t val_pts = 8 * n + 3;
    double max_abs = 0.0, max_err = 0.0;
    for (std::size_t m = 0; m < val_pts; ++m) {
        const double t = kTwoPi * (static_cast<double>(m) + 0.381966) / static_cast<double>(val_pts);
        const double y = q.eval(t).q;
        const cplx fit = rep.a * std::polar(1.0, tau * t) + rep.b * std::polar(1.0, -tau * t);
        max_abs = std::max(max_abs, std::abs(y));
        max_err = std::max(max_err, std::abs(fit - y));
    }
    rep.fit_residual = max_abs > 0.0 ? max_err / max_abs : max_err;
    rep.fits = rep.fit_residual <= tol;

    const AngleSet& z = q.zeros();
    const cplx first = on_circle(static_cast<double>(n) * z[0]);
    for (double tj : z) rep.power_spread = std::max(rep.power_spread, std::abs(on_circle(static_cast<double>(n) * tj) - first));
    rep.equal_powers = !z.has_coincident_atoms() && rep.power_spread <= tol;
    return rep;
}

bool extremal_form_check(const TrigProduct& q, double tol) { return extremal_form_details(q, tol).extremal(); }

double product_min_M0(const AngleSet& set) {
    const ArgmaxResult r = argmax_and_bound(TrigProduct(set));
    return 1.0 / (std::ldexp(1.0, static_cast<int>(set.size())) * r.q_at_t0);
}

}  // namespace circlecheb
