#include "circlecheb/polyrat.hpp"

#include <algorithm>
#include <cmath>

#include "circlecheb/errors.hpp"

namespace circlecheb {

namespace {

// Root of e^{i phase} with argument in [0, pi).
cplx unit_sqrt(double phase) { return std::polar(1.0, 0.5 * wrap_angle(phase)); }

std::vector<cplx> points_of(std::span<const double> angles) {
    std::vector<cplx> z;
    z.reserve(angles.size());
    for (double a : angles) z.push_back(on_circle(a));
    return z;
}

cplx product_at(std::span<const cplx> roots, cplx z) {
    cplx p = 1.0;
    for (const cplx r : roots) p *= z - r;
    return p;
}

bool winds_once(std::span<const double> cycle, double orientation) {
    double total = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const double next = cycle[(i + 1) % cycle.size()];
        total += wrap_angle(orientation * (next - cycle[i]));
    }
    return std::abs(total - kTwoPi) < 1e-9;
}

void require_distinct(const AngleSet& set) {
    if (set.has_coincident_atoms())
        throw CircleError(ErrorCode::Degenerate, "points must be distinct");
}

}  // namespace

cplx on_circle(double theta) { return {std::cos(theta), std::sin(theta)}; }

std::optional<cplx> unimodular_factor(const ComplexPoly& g, double tol) {
    if (g.degree() < 1) throw CircleError(ErrorCode::Degenerate, "unimodular_factor needs deg >= 1");
    for (const cplx r : polynomial_roots(g)) {
        if (std::abs(std::abs(r) - 1.0) > tol) return std::nullopt;
    }
    // least-squares gamma for g* = gamma g
    const ComplexPoly gs = reciprocal(g);
    cplx num = 0.0;
    double den = 0.0;
    for (int k = 0; k <= g.degree(); ++k) {
        num += std::conj(g[k]) * gs[k];
        den += std::norm(g[k]);
    }
    const cplx gamma = num / den;
    if (std::abs(std::abs(gamma) - 1.0) > std::max(tol, 1e-12)) return std::nullopt;
    return gamma;
}

EquifuncConstruction construct_h(std::span<const double> w, double w_extra, int alpha_sign) {
    if (w.empty() || w.size() % 2 != 0)
        throw CircleError(ErrorCode::OrderViolation, "need an even, nonzero number of points");
    const std::size_t n = w.size() / 2;

    std::vector<double> cycle(w.begin(), w.end());
    cycle.push_back(w_extra);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        for (std::size_t j = i + 1; j < cycle.size(); ++j)
            if (std::abs(angle_diff(cycle[i], cycle[j])) <= kAngleTol)
                throw CircleError(ErrorCode::Degenerate, "alternation points must be distinct");
    if (!winds_once(cycle, 1.0) && !winds_once(cycle, -1.0))
        throw CircleError(ErrorCode::OrderViolation, "points are not in cyclic order");

    std::vector<double> even, odd;  // w_{2k} and w_{2k-1}, 1-based
    for (std::size_t i = 0; i < w.size(); ++i) (i % 2 == 1 ? even : odd).push_back(w[i]);

    double even_sum = 0.0, odd_sum = 0.0;
    for (double a : even) even_sum += a;
    for (double a : odd) odd_sum += a;
    const double nd = static_cast<double>(n);

    EquifuncConstruction out;
    out.alpha = static_cast<double>(alpha_sign) * unit_sqrt(nd * kPi - even_sum);
    out.beta = unit_sqrt((nd + 1.0) * kPi - odd_sum);

    const auto even_pts = points_of(even);
    const auto odd_pts = points_of(odd);
    const cplx z = on_circle(w_extra);
    // g1(w) + i c beta P(w) = 0 has a real solution c by the phase relation on the circle
    const cplx ratio = -(out.alpha * product_at(even_pts, z)) / (cplx(0.0, 1.0) * out.beta * product_at(odd_pts, z));
    out.c = ratio.real();

    out.g1 = out.alpha * ComplexPoly::from_roots(even_pts);
    out.g2 = (out.c * out.beta) * ComplexPoly::from_roots(odd_pts);
    out.h = cplx(0.5) * (out.g1 + out.g2);
    out.g1_roots.assign(even_pts.begin(), even_pts.end());
    out.g2_roots.assign(odd_pts.begin(), odd_pts.end());
    return out;
}

cplx EquifuncConstruction::h_at(cplx z) const {
    cplx a = alpha, b = c * beta;
    for (cplx r : g1_roots) a *= z - r;
    for (cplx r : g2_roots) b *= z - r;
    return 0.5 * (a + b);
}

cplx EquifuncConstruction::h_star_at(cplx z) const {
    const int n = static_cast<int>(g1_roots.size());
    return std::pow(z, n) * std::conj(h_at(1.0 / std::conj(z)));
}

void BlaschkeProduct::validate(double tol) const {
    if (std::abs(std::abs(rho) - 1.0) > tol) throw CircleError(ErrorCode::OutOfDomain, "|rho| must be 1");
    if (k < 0) throw CircleError(ErrorCode::OutOfDomain, "k must be nonnegative");
    for (const cplx a : alphas) {
        const double m = std::abs(a);
        if (!(m > 0.0 && m < 1.0)) throw CircleError(ErrorCode::OutOfDomain, "need 0 < |alpha| < 1");
    }
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
    cplx v = b.rho * std::pow(z, b.k);
    for (const cplx a : b.alphas) {
        const cplx den = 1.0 - std::conj(a) * z;
        if (std::abs(den) <= 1e-12) throw CircleError(ErrorCode::PoleHit, "z is a pole of the Blaschke product");
        v *= (z - a) / den;
    }
    return v;
}

cplx RationalOnCircle::operator()(cplx z) const {
    if (points.empty()) return eval_expanded(z);
    cplx s = 0.0;
    for (const cplx zj : points) {
        const cplx d = z - zj;
        if (std::abs(d) <= kAngleTol) return 0.0;
        s += zj / (d * d);
    }
    return 1.0 / (-z * s);
}

cplx RationalOnCircle::eval_expanded(cplx z) const { return num(z) / den(z); }

RationalOnCircle rational_R(const AngleSet& set) {
    require_distinct(set);
    RationalOnCircle r;
    r.points = points_of(set.angles());
    std::vector<cplx> doubled;
    for (const cplx zj : r.points) {
        doubled.push_back(zj);
        doubled.push_back(zj);
    }
    r.num = ComplexPoly::from_roots(doubled);

    ComplexPoly sum;
    for (std::size_t j = 0; j < r.points.size(); ++j) {
        std::vector<cplx> others;
        for (std::size_t k = 0; k < r.points.size(); ++k) {
            if (k == j) continue;
            others.push_back(r.points[k]);
            others.push_back(r.points[k]);
        }
        sum = sum + r.points[j] * ComplexPoly::from_roots(others);
    }
    // leading coefficient -sum z_j can cancel to rounding level (e.g. roots of unity)
    r.den = (ComplexPoly::monomial(1, -1.0) * sum).trimmed(1e-13);
    return r;
}

DerivedPair derived_g2(const AngleSet& set) {
    require_distinct(set);
    const double nd = static_cast<double>(set.size());
    double sum = 0.0;
    for (double a : set) sum += a;

    DerivedPair out;
    out.alpha = unit_sqrt(nd * kPi - sum);
    const auto pts = points_of(set.angles());
    out.g1 = out.alpha * ComplexPoly::from_roots(pts);
    const ComplexPoly zg1p = ComplexPoly::monomial(1) * out.g1.derivative();
    out.g2 = cplx(2.0 / nd) * zg1p - out.g1;
    return out;
}

cplx derived_g2_over_g1(const AngleSet& set, cplx z) {
    cplx s = 0.0;
    for (double a : set) s += z / (z - on_circle(a));
    return (2.0 / static_cast<double>(set.size())) * s - 1.0;
}

EquioscillationReport equioscillation_detect(std::span<const Sample> samples, int n_target, double tol) {
    if (n_target < 1) throw CircleError(ErrorCode::OutOfDomain, "n_target must be >= 1");
    if (samples.size() < 3) throw CircleError(ErrorCode::InsufficientResolution, "too few samples");

    std::vector<Sample> s(samples.begin(), samples.end());
    for (Sample& x : s) x.angle = wrap_angle(x.angle);
    std::sort(s.begin(), s.end(), [](const Sample& a, const Sample& b) { return a.angle < b.angle; });

    const double max_spacing = kPi / (32.0 * n_target);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double next = i + 1 < s.size() ? s[i + 1].angle : s.front().angle + kTwoPi;
        if (next - s[i].angle > max_spacing * (1.0 + 1e-9))
            throw CircleError(ErrorCode::InsufficientResolution, "sample spacing exceeds pi/(32 n)");
    }

    EquioscillationReport rep;
    for (const Sample& x : s) rep.sup_norm = std::max(rep.sup_norm, std::abs(x.value));
    if (rep.sup_norm == 0.0) return rep;

    const std::size_t m = s.size();
    struct Candidate {
        double angle, value;
        int sign;
    };
    std::vector<Candidate> runs;
    for (std::size_t i = 0; i < m; ++i) {
        const double a = std::abs(s[i].value);
        const double prev = std::abs(s[(i + m - 1) % m].value);
        const double next = std::abs(s[(i + 1) % m].value);
        if (a < (1.0 - tol) * rep.sup_norm || a < prev || a < next) continue;
        const int sign = s[i].value > 0.0 ? 1 : -1;
        if (!runs.empty() && runs.back().sign == sign) {
            if (a > std::abs(runs.back().value)) runs.back() = {s[i].angle, s[i].value, sign};
        } else {
            runs.push_back({s[i].angle, s[i].value, sign});
        }
    }
    if (runs.size() > 1 && runs.front().sign == runs.back().sign) {
        if (std::abs(runs.back().value) > std::abs(runs.front().value)) runs.front() = runs.back();
        runs.pop_back();
    }

    for (const Candidate& c : runs) {
        rep.points.push_back(c.angle);
        rep.signs.push_back(c.sign);
        rep.values.push_back(c.value);
        rep.deviation = std::max(rep.deviation, rep.sup_norm - std::abs(c.value));
    }
    rep.order = runs.size() >= 2 ? static_cast<int>(runs.size() / 2) : 0;
    return rep;
}

}  // namespace circlecheb
