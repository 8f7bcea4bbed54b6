#include "circlecheb/config_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlecheb/cheb_min.hpp"
#include "circlecheb/errors.hpp"
#include "circlecheb/kernel.hpp"
#include "circlecheb/parallel.hpp"
#include "circlecheb/random.hpp"

namespace circlecheb {

namespace {

// Distinct atoms in cyclic order, unwrapped: th[i] < th[i+1] and th.back() < th.front() + 2pi.
// Arc i runs from th[i] to th[i+1] (th[0] + 2pi for the last one).
struct Cyclic {
    std::vector<double> th;

    std::size_t size() const { return th.size(); }
    double right(std::size_t i) const { return i + 1 < th.size() ? th[i + 1] : th[0] + kTwoPi; }
    double gap(std::size_t i) const { return right(i) - th[i]; }
    std::size_t prev(std::size_t i) const { return (i + th.size() - 1) % th.size(); }
    std::size_t next(std::size_t i) const { return (i + 1) % th.size(); }
    AngleSet to_set() const { return AngleSet::from_raw(th); }

    void spread(std::size_t j, double eps) {
        th[j] -= eps;
        th[next(j)] += eps;
    }
};

struct Minima {
    std::vector<double> argmin;
    std::vector<double> value;

    double lowest() const { return *std::min_element(value.begin(), value.end()); }
    double highest() const { return *std::max_element(value.begin(), value.end()); }
};

Minima arc_minima(const Cyclic& c, const Kernel& kernel, const std::vector<double>* hints) {
    const AngleSet set = c.to_set();
    Minima m;
    m.argmin.resize(c.size());
    m.value.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::optional<double> hint;
        if (hints) hint = (*hints)[i];
        const ArcMinimum r = minimize_on_arc(set, kernel, {c.th[i], c.right(i)}, kDefaultMinTol, hint);
        m.argmin[i] = r.argmin;
        m.value[i] = r.value;
    }
    return m;
}

double half_min_gap(const Cyclic& c, std::size_t j) {
    return 0.5 * std::min({c.gap(c.prev(j)), c.gap(j), c.gap(c.next(j))});
}

// Highest local minimum; exact ties go to the arc whose left end has the
// smallest angle in [0, 2pi), i.e. the smallest arc_partition index.
std::size_t target_arc(const Cyclic& c, const Minima& m) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (m.value[i] > m.value[best] ||
            (m.value[i] == m.value[best] && wrap_angle(c.th[i]) < wrap_angle(c.th[best])))
            best = i;
    }
    return best;
}

}  // namespace

AngleSet spread_move(const AngleSet& set, std::size_t arc_index, double eps) {
    const auto d = set.distinct();
    if (d.size() < 2) throw CircleError(ErrorCode::Degenerate, "spread_move needs two distinct atoms");
    if (arc_index >= d.size()) throw CircleError(ErrorCode::OutOfDomain, "arc index out of range");
    const Cyclic c{d};
    if (!(std::abs(eps) < half_min_gap(c, arc_index)))
        throw CircleError(ErrorCode::StepTooLarge, "step would reorder atoms");

    const double left = d[arc_index];
    const double right = d[(arc_index + 1) % d.size()];
    std::vector<double> raw(set.begin(), set.end());
    for (double& a : raw) {
        if (std::abs(angle_diff(a, left)) <= kAngleTol) a -= eps;
        else if (std::abs(angle_diff(a, right)) <= kAngleTol) a += eps;
    }
    return AngleSet::from_raw(raw);
}

SearchResult equalize_search(const AngleSet& initial, const Kernel& kernel, const SearchParams& params) {
    if (initial.has_coincident_atoms())
        throw CircleError(ErrorCode::Degenerate, "equalize_search needs distinct points");

    SearchResult out{initial, {}, false, 0, {}};
    if (initial.size() == 1) {
        out.report = local_minima_report(initial, kernel);
        out.converged = true;
        out.min_history.push_back(out.report.values.front());
        return out;
    }

    Cyclic cur{std::vector<double>(initial.begin(), initial.end())};
    Minima mins = arc_minima(cur, kernel, nullptr);
    out.min_history.push_back(mins.lowest());

    for (int it = 0; it < params.max_iters; ++it) {
        const double m_now = mins.lowest();
        const double dev = mins.highest() - m_now;
        if (dev <= params.equioscillation_tol * std::max(1.0, std::abs(m_now))) {
            out.converged = true;
            break;
        }

        const std::size_t j = target_arc(cur, mins);
        const double bound = half_min_gap(cur, j) * (1.0 - 1e-9);

        // phi(eps) = target local min - lowest other local min; decreasing in eps.
        struct Trial {
            double eps;
            double phi;
            double m;
            Cyclic c;
            Minima mins;
        };
        const auto trial = [&](double eps) {
            Cyclic c = cur;
            c.spread(j, eps);
            Minima nm = arc_minima(c, kernel, &mins.argmin);
            double others = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != j) others = std::min(others, nm.value[i]);
            const double m = std::min(nm.value[j], others);
            return Trial{eps, nm.value[j] - others, m, std::move(c), std::move(nm)};
        };

        std::optional<Trial> best;
        const auto keep = [&](Trial&& t) {
            const double phi = t.phi;
            const double eps = t.eps;
            if (!best || t.m > best->m) best = std::move(t);
            return std::pair{eps, phi};
        };

        // Bracket the sign change of phi, starting from 1/8 of the smaller neighbouring gap.
        double lo = 0.0, phi_lo = dev, hi = bound, phi_hi = 0.0;
        const double eps0 = std::min(bound, 0.125 * std::min(cur.gap(cur.prev(j)), cur.gap(cur.next(j))));
        const auto first = keep(trial(eps0));
        if (first.second > 0.0) {
            lo = eps0;
            phi_lo = first.second;
            phi_hi = eps0 < bound ? keep(trial(bound)).second : first.second;
        } else {
            hi = eps0;
            phi_hi = first.second;
        }

        if (phi_hi < 0.0) {
            // Illinois-modified regula falsi with bisection fallback
            int side = 0;
            for (int k = 0; k < 200 && hi - lo > params.step_tol * bound; ++k) {
                double x = hi - phi_hi * (hi - lo) / (phi_hi - phi_lo);
                if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
                const auto [eps, phi] = keep(trial(x));
                if (phi == 0.0) break;
                if (phi > 0.0) {
                    lo = eps;
                    phi_lo = phi;
                    if (side == 1) phi_hi *= 0.5;
                    side = 1;
                } else {
                    hi = eps;
                    phi_hi = phi;
                    if (side == -1) phi_lo *= 0.5;
                    side = -1;
                }
            }
        }

        if (!best || best->m < m_now - 1e-12) break;  // no improving step at this resolution
        cur = std::move(best->c);
        mins = std::move(best->mins);
        // keep the representation near [0, 2pi)
        const double shift = kTwoPi * std::floor(cur.th[0] / kTwoPi);
        if (shift != 0.0) {
            for (double& a : cur.th) a -= shift;
            for (double& a : mins.argmin) a -= shift;
        }
        out.min_history.push_back(mins.lowest());
        out.iterations = it + 1;
    }

    out.angles = cur.to_set();
    out.report = local_minima_report(out.angles, kernel);
    if (!out.converged) {
        const double m = out.report.values.empty() ? 0.0 : *std::min_element(out.report.values.begin(), out.report.values.end());
        out.converged = out.report.deviation <= params.equioscillation_tol * std::max(1.0, std::abs(m));
    }
    return out;
}

bool is_uniform(const AngleSet& set, double tol) {
    const std::size_t n = set.size();
    const double target = kTwoPi / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double next = i + 1 < n ? set[i + 1] : set[0] + kTwoPi;
        if (std::abs(next - set[i] - target) > tol) return false;
    }
    return true;
}

ScanReport conjecture_scan(int n, const Kernel& kernel, const SearchParams& params) {
    if (n < 2) throw CircleError(ErrorCode::OutOfDomain, "conjecture_scan needs n >= 2");
    ScanReport rep;
    rep.n = n;
    rep.uniform_value = chebyshev_min(AngleSet::uniform(static_cast<std::size_t>(n)), kernel).global_min;
    rep.runs.resize(static_cast<std::size_t>(params.restarts));

    parallel_for(rep.runs.size(), [&](std::size_t r) {
        Rng rng(derive_seed(params.seed, r));
        const AngleSet start = random_configuration(static_cast<std::size_t>(n), rng);
        const SearchResult res = equalize_search(start, kernel, params);
        ScanRun& run = rep.runs[r];
        run.min_value = res.min_history.back();
        run.deviation = res.report.deviation;
        run.iterations = res.iterations;
        run.converged = res.converged;
        run.uniform = is_uniform(res.angles, kUniformGapTol);
    });

    rep.max_found = -std::numeric_limits<double>::infinity();
    rep.all_converged = true;
    rep.all_uniform = true;
    for (const ScanRun& run : rep.runs) {
        rep.max_found = std::max(rep.max_found, run.min_value);
        rep.all_converged = rep.all_converged && run.converged;
        rep.all_uniform = rep.all_uniform && run.uniform;
    }
    rep.gap = rep.max_found - rep.uniform_value;
    return rep;
}

FejesTothSums fejes_toth_check(const AngleSet& set) {
    if (set.has_coincident_atoms()) throw CircleError(ErrorCode::Degenerate, "fejes_toth_check needs distinct points");
    const RieszKernel k2(2.0);
    const MinimizationResult res = chebyshev_min(set, k2);
    FejesTothSums out;
    for (const ArcMinimum& m : res.per_arc) {
        for (double tk : set) {
            const double s = std::sin(0.5 * (m.argmin - tk));
            out.double_sum += 1.0 / (s * s);
        }
    }
    const double n = static_cast<double>(set.size());
    out.target = n * n * n;
    return out;
}

}  // namespace circlecheb
