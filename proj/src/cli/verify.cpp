#include "circlecheb/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circlecheb/cheb_min.hpp"
#include "circlecheb/config_opt.hpp"
#include "circlecheb/energy.hpp"
#include "circlecheb/parallel.hpp"
#include "circlecheb/polynomial.hpp"
#include "circlecheb/polyrat.hpp"
#include "circlecheb/potential.hpp"
#include "circlecheb/random.hpp"
#include "circlecheb/trig_bernstein.hpp"

namespace circlecheb::cli {

namespace {

class Checks {
public:
    void add(const std::string& name, double measured, double threshold, bool ok) {
        Json c = Json::object();
        c.set("name", name).set("measured", measured).set("threshold", threshold).set("pass", ok);
        arr_.push(std::move(c));
        rows_.push_back({name, measured, threshold, ok});
        pass_ = pass_ && ok;
    }
    bool pass() const { return pass_; }
    Json take() { return std::move(arr_); }
    std::vector<CheckRow> rows() const { return rows_; }

private:
    std::vector<CheckRow> rows_;
    Json arr_ = Json::array();
    bool pass_ = true;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Per-trial values computed in parallel, folded in index order.
template <class T, class F>
std::vector<T> per_trial(int count, F&& body) {
    std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
    parallel_for(out.size(), [&](std::size_t i) { out[i] = body(i); });
    return out;
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

SuiteResult finish(Json report, Checks& checks) {
    const bool pass = checks.pass();
    auto rows = checks.rows();
    report.set("checks", checks.take());
    return {std::move(report), pass, std::move(rows)};
}

SuiteResult core_identities(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(64);
    const int trials = cfg.trials;
    Checks checks;

    auto cos_err = per_trial<double>(trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        const int n = 1 + static_cast<int>(i) % nmax;
        const IdentitySides s = cosform_check(n, kTwoPi * uniform01(rng));
        return rel(s.lhs, s.rhs);
    });
    checks.add("cosform", max_of(cos_err), 1e-8, max_of(cos_err) <= 1e-8);

    auto e4_err = per_trial<double>(trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed ^ 0x5bd1e995u, i));
        const int n = 1 + static_cast<int>(i) % std::min(nmax, 64);
        const TrigProduct q(random_configuration(static_cast<std::size_t>(n), rng));
        const IdentitySides s = logderiv_identity_check(q, kTwoPi * uniform01(rng));
        return rel(s.lhs, s.rhs);
    });
    checks.add("logderiv", max_of(e4_err), 1e-8, max_of(e4_err) <= 1e-8);

    auto fd_err = per_trial<double>(trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed ^ 0x27d4eb2fu, i));
        const int n = 1 + static_cast<int>(i) % std::min(nmax, 32);
        const AngleSet s = random_configuration(static_cast<std::size_t>(n), rng, 1e-2);
        const RieszKernel k(cfg.p);
        double t = kTwoPi * uniform01(rng);
        for (double a : s)
            if (std::abs(angle_diff(t, a)) < 1e-2) t = wrap_angle(t + 2e-2);
        double near = kPi;
        for (double a : s) near = std::min(near, std::abs(angle_diff(t, a)));
        const double h = 1e-4 * near;  // truncation error scales with (h / distance to the nearest atom)^2
        const PotentialValue v = potential(s, t, k);
        const PotentialValue lo = potential(s, t - h, k), hi = potential(s, t + h, k);
        const double fd1 = (hi.value - lo.value) / (2 * h);
        const double fd2 = (hi.first_deriv - lo.first_deriv) / (2 * h);
        const double scale = std::max(std::abs(v.value), 1.0);
        return std::max(std::abs(fd1 - v.first_deriv) / std::max(std::abs(fd1), scale),
                        std::abs(fd2 - v.second_deriv) / std::max(std::abs(fd2), scale));
    });
    checks.add("potential_derivatives", max_of(fd_err), 1e-6, max_of(fd_err) <= 1e-6);

    auto inv_fail = per_trial<double>(trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed ^ 0x9e3779b9u, i));
        std::vector<cplx> c(1 + i % 12 + 1);
        for (auto& x : c) x = cplx(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
        const ComplexPoly g(c);
        const ComplexPoly back = reciprocal(reciprocal(g), g.degree());
        for (int k = 0; k <= g.degree(); ++k)
            if (back[k] != g[k]) return 1.0;
        return 0.0;
    });
    checks.add("reciprocal_involution", max_of(inv_fail), 0.0, max_of(inv_fail) == 0.0);

    Json report = Json::object();
    report.set("n_max", nmax).set("evaluations", trials);
    return finish(std::move(report), checks);
}

SuiteResult theorem_p2(const SuiteConfig& cfg) {
    const int n = cfg.n.value_or(8);
    const RieszKernel k(cfg.p);
    const auto mins = per_trial<double>(cfg.trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        return chebyshev_min(random_configuration(static_cast<std::size_t>(n), rng), k).global_min;
    });
    double found = -INFINITY;
    for (double m : mins) found = std::max(found, m);
    const double bound = cfg.p == 2.0 ? n * n / 4.0 : uniform_min_from_energy(n, cfg.p);
    Checks checks;
    checks.add("max_min_below_bound", found, bound + 1e-9, found <= bound + 1e-9);
    const double uni = chebyshev_min(AngleSet::uniform(static_cast<std::size_t>(n)), k).global_min;
    checks.add("uniform_attains_bound", rel(uni, bound), 1e-10, rel(uni, bound) <= 1e-10);
    Json report = Json::object();
    report.set("n", n).set("p", cfg.p).set("trials", cfg.trials).set("max_min_found", found).set("bound", bound);
    return finish(std::move(report), checks);
}

SuiteResult energy_crossval(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(128);
    const std::vector<double> ps{0.5, 1.0, 2.0, 3.0, 4.0};
    Checks checks;
    Json rows = Json::array();
    for (double p : ps) {
        const RieszKernel k(p);
        const auto errs = per_trial<double>(nmax, [&](std::size_t i) {
            const int n = static_cast<int>(i) + 1;
            const double direct = chebyshev_min(AngleSet::uniform(static_cast<std::size_t>(n)), k).global_min;
            return rel(uniform_min_from_energy(n, p), direct);
        });
        const auto energy_errs = per_trial<double>(nmax - 1, [&](std::size_t i) {
            const int n = static_cast<int>(i) + 2;
            return rel(uniform_energy(n, p).value, riesz_energy(AngleSet::uniform(static_cast<std::size_t>(n)), p).value);
        });
        checks.add("M_from_energy_p" + format_real(p), max_of(errs), 1e-9, max_of(errs) <= 1e-9);
        checks.add("uniform_energy_p" + format_real(p), max_of(energy_errs), 1e-12, max_of(energy_errs) <= 1e-12);
    }
    Json report = Json::object();
    report.set("n_max", nmax).set("p_values", Json::array_of(ps));
    return finish(std::move(report), checks);
}

SuiteResult equifunc(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(16);
    struct Res {
        double alt = 0.0, extra = 0.0, sym = 0.0, expanded = 0.0;
    };
    const auto res = per_trial<Res>(cfg.trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        const int n = 1 + static_cast<int>(i) % nmax;
        const AngleSet s = random_configuration(static_cast<std::size_t>(2 * n + 1), rng, 1e-3);
        std::vector<double> w(s.begin(), s.end());
        const double extra = w.back();
        w.pop_back();
        const EquifuncConstruction c = construct_h(w, extra);
        const ComplexPoly hs = reciprocal(c.h, n);
        Res r;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const cplx z = on_circle(w[k]);
            const cplx want = k % 2 == 0 ? 1.0 : -1.0;
            r.alt = std::max(r.alt, std::abs(c.ratio_at(z) - want));
            r.expanded = std::max(r.expanded, std::abs(c.h(z) / hs(z) - want));
        }
        const cplx z = on_circle(extra);
        r.extra = std::abs(c.ratio_at(z) - cplx(0.0, 1.0));
        r.expanded = std::max(r.expanded, std::abs(c.h(z) / hs(z) - cplx(0.0, 1.0)));
        const ComplexPoly d1 = reciprocal(c.g1, n) - c.g1;
        const ComplexPoly d2 = reciprocal(c.g2, n) + c.g2;
        r.sym = std::max(d1.max_coeff() / c.g1.max_coeff(), d2.max_coeff() / c.g2.max_coeff());
        return r;
    });
    double alt = 0, extra = 0, sym = 0, expanded = 0;
    for (const Res& r : res) {
        alt = std::max(alt, r.alt);
        extra = std::max(extra, r.extra);
        sym = std::max(sym, r.sym);
        expanded = std::max(expanded, r.expanded);
    }
    Checks checks;
    checks.add("alternation_residual", alt, 1e-9, alt <= 1e-9);
    checks.add("extra_point_residual", extra, 1e-9, extra <= 1e-9);
    checks.add("g1_g2_symmetry", sym, 1e-12, sym <= 1e-12);
    Json report = Json::object();
    // informational: the same residual through the expanded coefficients of h
    report.set("n_max", nmax).set("trials", cfg.trials).set("expanded_residual", expanded);
    return finish(std::move(report), checks);
}

SuiteResult bernstein(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(64);
    struct Res {
        bool ok = false;
        bool equal = false;
        bool extremal = false;
        double ratio = 0.0;
    };
    const int uniform_count = std::min(nmax, 16);
    const auto res = per_trial<Res>(cfg.trials + uniform_count, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        const bool uni = i >= static_cast<std::size_t>(cfg.trials);
        const std::size_t n = uni ? i - static_cast<std::size_t>(cfg.trials) + 1 : 1 + i % static_cast<std::size_t>(nmax);
        const AngleSet s = uni ? AngleSet::uniform(n, kTwoPi * uniform01(rng)) : random_configuration(n, rng);
        const TrigProduct q(s);
        const BernsteinReport b = bernstein_check(q, cfg.grid);
        return Res{b.ok, std::abs(b.ratio() - 1.0) <= 1e-6, extremal_form_check(q), b.ratio()};
    });
    int ok = 0, equal = 0, mismatched = 0;
    double worst = 0.0;
    for (const Res& r : res) {
        ok += r.ok;
        equal += r.equal;
        mismatched += r.equal != r.extremal;
        worst = std::max(worst, r.ratio);
    }
    Checks checks;
    checks.add("inequality_holds", static_cast<double>(res.size() - ok), 0.0, ok == static_cast<int>(res.size()));
    checks.add("equality_iff_extremal", mismatched, 0.0, mismatched == 0);
    Json report = Json::object();
    report.set("n_max", nmax).set("sets", res.size()).set("grid", cfg.grid).set("equality_cases", equal).set("max_ratio", worst);
    return finish(std::move(report), checks);
}

SuiteResult m0(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(16);
    const auto vals = per_trial<double>(cfg.trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        return product_min_M0(random_configuration(1 + i % static_cast<std::size_t>(nmax), rng));
    });
    const auto uni = per_trial<double>(nmax, [&](std::size_t i) {
        return std::abs(product_min_M0(AngleSet::uniform(i + 1, 0.1 * static_cast<double>(i))) - 0.5);
    });
    const double worst = max_of(vals);
    Checks checks;
    checks.add("random_at_most_half", worst, 0.5 + 1e-9, worst <= 0.5 + 1e-9);
    checks.add("uniform_equals_half", max_of(uni), 1e-9, max_of(uni) <= 1e-9);
    Json report = Json::object();
    report.set("n_max", nmax).set("trials", cfg.trials).set("max_random", worst);
    return finish(std::move(report), checks);
}

SuiteResult scan(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(6);
    const auto kernel = make_kernel(cfg.kernel, cfg.p);
    SearchParams params;
    params.restarts = cfg.restarts;
    params.seed = cfg.seed;
    params.equioscillation_tol = cfg.tol;
    Checks checks;
    Json rows = Json::array();
    for (int n = 2; n <= nmax; ++n) {
        const ScanReport r = conjecture_scan(n, *kernel, params);
        const double excess = r.max_found - r.uniform_value;
        Json row = Json::object();
        row.set("n", n).set("max_found", r.max_found).set("uniform_value", r.uniform_value).set("gap", r.gap)
            .set("all_converged", r.all_converged).set("all_uniform", r.all_uniform);
        rows.push(std::move(row));
        checks.add("n" + std::to_string(n) + "_uniform", r.all_uniform ? 0.0 : 1.0, 0.0, r.all_uniform);
        checks.add("n" + std::to_string(n) + "_excess", excess, 1e-8, excess <= 1e-8);
    }
    Json report = Json::object();
    report.set("kernel", kernel->name()).set("n_max", nmax).set("restarts", cfg.restarts).set("rows", std::move(rows));
    return finish(std::move(report), checks);
}

SuiteResult fejes_toth(const SuiteConfig& cfg) {
    const int nmax = cfg.n.value_or(32);
    const auto uni = per_trial<double>(nmax, [&](std::size_t i) {
        const FejesTothSums s = fejes_toth_check(AngleSet::uniform(i + 1, 0.3));
        return rel(s.double_sum, s.target);
    });
    const auto slack = per_trial<double>(cfg.trials, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        const std::size_t n = 2 + i % static_cast<std::size_t>(std::max(nmax - 1, 1));
        const FejesTothSums s = fejes_toth_check(random_configuration(n, rng, 1e-3));
        return s.double_sum - s.target;
    });
    double least = INFINITY;
    for (double s : slack) least = std::min(least, s);
    if (slack.empty()) least = 1.0;
    Checks checks;
    checks.add("uniform_equals_n_cubed", max_of(uni), 1e-7, max_of(uni) <= 1e-7);
    checks.add("random_strictly_larger", least, 0.0, least > 0.0);
    Json report = Json::object();
    report.set("n_max", nmax).set("trials", cfg.trials);
    return finish(std::move(report), checks);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core_identities", "theorem_p2", "energy_crossval", "equifunc",
                                                "bernstein",       "m0",         "conjecture_scan", "fejes_toth"};
    return names;
}

std::optional<std::string> canonical_suite(const std::string& name) {
    if (name == "theorem") return "theorem_p2";
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) return name;
    return std::nullopt;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "core_identities") return core_identities(cfg);
    if (name == "theorem_p2") return theorem_p2(cfg);
    if (name == "energy_crossval") return energy_crossval(cfg);
    if (name == "equifunc") return equifunc(cfg);
    if (name == "bernstein") return bernstein(cfg);
    if (name == "m0") return m0(cfg);
    if (name == "conjecture_scan") return scan(cfg);
    if (name == "fejes_toth") return fejes_toth(cfg);
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace circlecheb::cli
