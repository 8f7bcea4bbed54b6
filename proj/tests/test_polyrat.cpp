#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "circlecheb/cheb_min.hpp"
#include "circlecheb/errors.hpp"
#include "circlecheb/kernel.hpp"
#include "circlecheb/polynomial.hpp"
#include "circlecheb/polyrat.hpp"
#include "circlecheb/potential.hpp"
#include "circlecheb/random.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace circlecheb;
using testing::rel_err;

namespace {

const cplx I(0.0, 1.0);

bool coeffs_close(const ComplexPoly& a, const ComplexPoly& b, double tol) {
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        if (std::abs(a[k] - b[k]) > tol) return false;
    return true;
}

ComplexPoly random_poly(int deg, Rng& rng) {
    std::vector<cplx> c(deg + 1);
    for (auto& x : c) x = cplx(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
    return ComplexPoly(c);
}

// 2n sorted random angles plus one extra strictly inside the last arc.
std::pair<std::vector<double>, double> random_tuple(int n, Rng& rng) {
    const AngleSet s = random_configuration(2 * n + 1, rng, 1e-3);
    std::vector<double> w(s.begin(), s.end());
    const double extra = w.back();
    w.pop_back();
    return {w, extra};
}

cplx ratio(const ComplexPoly& h, cplx z) { return h(z) / reciprocal(h, h.degree())(z); }

}  // namespace

TEST_CASE("from_roots") {
    const std::vector<cplx> r1{1.0, -1.0};
    CHECK(coeffs_close(ComplexPoly::from_roots(r1), ComplexPoly({-1.0, 0.0, 1.0}), 0.0));
    CHECK(coeffs_close(ComplexPoly::from_roots(std::vector<cplx>{}), ComplexPoly::constant(1.0), 0.0));
    const std::vector<cplx> r2{1.0, I};
    CHECK(coeffs_close(ComplexPoly::from_roots(r2), ComplexPoly({I, -(1.0 + I), 1.0}), 1e-15));
}

TEST_CASE("polynomial normalization and arithmetic") {
    CHECK(ComplexPoly({1.0, 2.0, 0.0, 0.0}).degree() == 1);
    CHECK(ComplexPoly({0.0}).is_zero());
    CHECK(ComplexPoly().degree() == -1);
    const ComplexPoly a({1.0, 1.0});
    CHECK((a - a).is_zero());
    CHECK(coeffs_close(a * a, ComplexPoly({1.0, 2.0, 1.0}), 0.0));
    CHECK(a.derivative().degree() == 0);
    CHECK(a(2.0) == cplx(3.0));
}

TEST_CASE("reciprocal worked examples") {
    const ComplexPoly g({-1.0, 1.0});
    CHECK(coeffs_close(reciprocal(g, 1), ComplexPoly({1.0, -1.0}), 0.0));
    const ComplexPoly g2({I, -(1.0 + I), 1.0});
    CHECK(coeffs_close(reciprocal(g2, 2), ComplexPoly({1.0, -(1.0 - I), -I}), 1e-15));
    CHECK(coeffs_close(reciprocal(ComplexPoly::constant(1.0), 2), ComplexPoly::monomial(2), 0.0));
    try {
        reciprocal(g2, 1);
        FAIL("expected OrderTooSmall");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::OrderTooSmall);
    }
}

TEST_CASE("reciprocal involution and inversion") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexPoly g = random_poly(1 + trial % 12, rng);
        const ComplexPoly gs = reciprocal(g);
        const ComplexPoly back = reciprocal(gs, g.degree());
        for (int k = 0; k <= g.degree(); ++k) CHECK(back[k] == g[k]);

        // g*(z) = z^d conj(g(1/conj z))
        const cplx z(uniform01(rng) + 0.2, uniform01(rng) - 0.5);
        const cplx expect = std::pow(z, g.degree()) * std::conj(g(1.0 / std::conj(z)));
        CHECK(std::abs(gs(z) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> roots;
        for (int j = 0; j < 1 + trial % 8; ++j) roots.push_back(std::polar(0.3 + 1.5 * uniform01(rng), kTwoPi * uniform01(rng)));
        const ComplexPoly g = ComplexPoly::from_roots(roots);
        const ComplexPoly gs = reciprocal(g);
        for (cplx r : roots) {
            const cplx inv = 1.0 / std::conj(r);
            CHECK(std::abs(gs(inv)) <= 1e-8 * std::max(1.0, gs.max_coeff() * std::pow(std::abs(inv) + 1, g.degree())));
        }
    }
}

TEST_CASE("unimodular_factor") {
    auto g1 = unimodular_factor(ComplexPoly({-1.0, 0.0, 1.0}));
    REQUIRE(g1);
    CHECK(std::abs(*g1 - cplx(-1.0)) <= 1e-12);
    auto g2 = unimodular_factor(ComplexPoly({-I, 1.0}));
    REQUIRE(g2);
    CHECK(std::abs(*g2 - I) <= 1e-12);
    CHECK_FALSE(unimodular_factor(ComplexPoly({-2.0, 1.0})));
    CHECK_THROWS_AS(unimodular_factor(ComplexPoly::constant(2.0)), CircleError);

    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> roots;
        for (int j = 0; j < 1 + trial % 10; ++j) roots.push_back(std::polar(1.0, kTwoPi * uniform01(rng)));
        const ComplexPoly g = std::polar(1.7, 0.3) * ComplexPoly::from_roots(roots);
        auto gamma = unimodular_factor(g);
        REQUIRE(gamma);
        CHECK(std::abs(std::abs(*gamma) - 1.0) <= 1e-9);
        CHECK(coeffs_close(reciprocal(g), *gamma * g, 1e-9 * g.max_coeff()));
    }
}

TEST_CASE("construct_h worked example n = 1") {
    const std::vector<double> w{0.0, kPi};
    const EquifuncConstruction c = construct_h(w, kPi / 2);
    REQUIRE(c.h.degree() == 1);
    CHECK(std::abs(ratio(c.h, 1.0) - 1.0) <= 1e-12);
    CHECK(std::abs(ratio(c.h, -1.0) + 1.0) <= 1e-12);
    CHECK(std::abs(ratio(c.h, I) - I) <= 1e-12);
    CHECK(std::abs(c.alpha - 1.0) <= 1e-12);
    CHECK(std::abs(c.beta - 1.0) <= 1e-12);
    CHECK(c.c == doctest::Approx(1.0).epsilon(1e-12));
    // h = z up to a unimodular constant
    CHECK(std::abs(c.h[0]) <= 1e-12);
    CHECK(std::abs(std::abs(c.h[1]) - 1.0) <= 1e-12);
}

TEST_CASE("construct_h alternation, symmetry and both branches") {
    Rng rng(7);
    for (int n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            auto [w, extra] = random_tuple(n, rng);
            for (int sign : {1, -1}) {
                const EquifuncConstruction c = construct_h(w, extra, sign);
                for (std::size_t k = 0; k < w.size(); ++k) {
                    const cplx expect = k % 2 == 0 ? 1.0 : -1.0;
                    CHECK(std::abs(c.ratio_at(on_circle(w[k])) - expect) <= 1e-9);
                    CHECK(std::abs(ratio(c.h, on_circle(w[k])) - expect) <= 1e-6);
                }
                CHECK(std::abs(c.ratio_at(on_circle(extra)) - I) <= 1e-9);
                const cplx probe = on_circle(0.123);
                CHECK(std::abs(c.h_at(probe) - c.h(probe)) <= 1e-9 * std::max(1.0, c.h.max_coeff()));
                // relative to the largest coefficient, which grows like binomial(n, n/2)
                CHECK(coeffs_close(reciprocal(c.g1, n), c.g1, 1e-12 * c.g1.max_coeff()));
                CHECK(coeffs_close(reciprocal(c.g2, n), -1.0 * c.g2, 1e-12 * c.g2.max_coeff()));
            }
            // arg(g1/g2) = pi/2 mod pi along the circle
            const EquifuncConstruction c = construct_h(w, extra);
            for (int m = 0; m < 200; ++m) {
                const double t = kTwoPi * (m + 0.5) / 200;
                const cplx z = on_circle(t);
                const cplx g1 = c.g1(z), g2 = c.g2(z);
                if (std::abs(g1) < 1e-6 || std::abs(g2) < 1e-6) continue;
                const cplx q = g1 / g2;
                CHECK(std::abs(q.real()) <= 1e-6 * std::abs(q));
            }
        }
    }
}

TEST_CASE("construct_h errors") {
    const std::vector<double> odd{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(construct_h(odd, 3.0), CircleError);
    const std::vector<double> shuffled{0.0, 2.0, 1.0, 3.0};
    try {
        construct_h(shuffled, 4.0);
        FAIL("expected OrderViolation");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::OrderViolation);
    }
    const std::vector<double> w{0.0, kPi};
    try {
        construct_h(w, kPi);
        FAIL("expected Degenerate");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::Degenerate);
    }
    // clockwise order is accepted
    const std::vector<double> cw{3.0, 2.0, 1.0, 0.0};
    CHECK_NOTHROW(construct_h(cw, 5.0));
}

TEST_CASE("blaschke_eval") {
    const BlaschkeProduct id{1.0, 1, {}};
    CHECK(std::abs(blaschke_eval(id, I) - I) <= 1e-15);
    const BlaschkeProduct half{1.0, 0, {0.5}};
    CHECK(std::abs(blaschke_eval(half, 1.0) - 1.0) <= 1e-15);
    try {
        blaschke_eval(half, 2.0);
        FAIL("expected PoleHit");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::PoleHit);
    }
    CHECK_THROWS_AS(BlaschkeProduct({2.0, 0, {}}).validate(), CircleError);
    CHECK_THROWS_AS(BlaschkeProduct({1.0, 0, {1.5}}).validate(), CircleError);

    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        BlaschkeProduct b{std::polar(1.0, kTwoPi * uniform01(rng)), trial % 3, {}};
        while (b.order() < 5) b.alphas.push_back(std::polar(0.05 + 0.9 * uniform01(rng), kTwoPi * uniform01(rng)));
        b.validate();
        for (int m = 0; m < 100; ++m) {
            const cplx z = on_circle(kTwoPi * uniform01(rng));
            CHECK(std::abs(std::abs(blaschke_eval(b, z)) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("rational_R worked examples") {
    const std::vector<double> one{0.0};
    const RationalOnCircle r1 = rational_R(AngleSet::from_raw(one));
    CHECK(std::abs(r1(-1.0) - 4.0) <= 1e-13);
    CHECK(std::abs(r1.eval_expanded(-1.0) - 4.0) <= 1e-13);

    const RationalOnCircle r2 = rational_R(AngleSet::uniform(2));
    CHECK(std::abs(1.0 / r2(I) - 1.0) <= 1e-13);

    const std::vector<double> dup{1.0, 1.0};
    CHECK_THROWS_AS(rational_R(AngleSet::from_raw(dup)), CircleError);
}

TEST_CASE("rational_R matches the potential and is real on the circle") {
    Rng rng(4);
    const RieszKernel k2(2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 12;
        const AngleSet s = random_configuration(n, rng, 1e-2);
        const RationalOnCircle r = rational_R(s);
        CHECK(r.num.degree() == 2 * n);
        CHECK(r.den.degree() <= 2 * n - 1);
        for (int m = 0; m < 10000; ++m) {
            const double t = kTwoPi * (m + 0.5) / 10000;
            const cplx v = r(on_circle(t));
            CHECK(std::abs(v.imag()) <= 1e-9 * std::max(1.0, std::abs(v)));
            if (m % 97 == 0) {
                const double pot = potential(s, t, k2).value;
                CHECK(rel_err(1.0 / v.real(), pot) <= 1e-9);
                CHECK(std::abs(r.eval_expanded(on_circle(t)) - v) <= 1e-8 * std::max(1.0, std::abs(v)));
            }
        }
    }
}

TEST_CASE("derived_g2 worked examples") {
    const DerivedPair d = derived_g2(AngleSet::uniform(2));
    CHECK(coeffs_close(d.g1, ComplexPoly({-I, 0.0, I}), 1e-14));
    CHECK(coeffs_close(d.g2, ComplexPoly({I, 0.0, I}), 1e-14));
    auto roots = polynomial_roots(d.g2);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
    CHECK(std::abs(roots[0] + I) <= 1e-12);
    CHECK(std::abs(roots[1] - I) <= 1e-12);
}

TEST_CASE("derived_g2 roots are the minimizers") {
    const RieszKernel k2(2.0);
    for (int n = 2; n <= 16; ++n) {
        const AngleSet s = AngleSet::uniform(n, 0.3);
        const DerivedPair d = derived_g2(s);
        const auto roots = polynomial_roots(d.g2);
        const auto mins = chebyshev_min(s, k2).per_arc;
        REQUIRE(roots.size() == mins.size());
        for (const ArcMinimum& m : mins) {
            double best = INFINITY;
            for (cplx r : roots) best = std::min(best, std::abs(r - on_circle(m.argmin)));
            CHECK(best <= 1e-8);
        }
        // the two forms of g2/g1 agree
        const cplx z = on_circle(1.234);
        CHECK(std::abs(d.g2(z) / d.g1(z) - derived_g2_over_g1(s, z)) <= 1e-10);
    }

    const DerivedPair d3 = derived_g2(AngleSet::uniform(3));
    double best = 0.0, best_t = 0.0;
    for (int m = 0; m < 30000; ++m) {
        const double t = kTwoPi * m / 30000;
        const double v = std::abs(d3.g1(on_circle(t)));
        if (v > best) best = v, best_t = t;
    }
    double nearest = INFINITY;
    for (cplx r : polynomial_roots(d3.g2)) nearest = std::min(nearest, std::abs(r - on_circle(best_t)));
    CHECK(nearest <= 1e-3);
}

TEST_CASE("equioscillation_detect") {
    std::vector<Sample> cosine;
    for (int m = 0; m < 1024; ++m) {
        const double t = kTwoPi * m / 1024;
        cosine.push_back({t, std::cos(2 * t)});
    }
    const EquioscillationReport r = equioscillation_detect(cosine, 2);
    CHECK(r.order == 2);
    CHECK(r.points.size() == 4);
    CHECK(r.deviation <= 1e-12);
    for (std::size_t i = 0; i + 1 < r.signs.size(); ++i) CHECK(r.signs[i] == -r.signs[i + 1]);

    std::vector<Sample> flat(cosine);
    for (auto& s : flat) s.value = 3.0;
    CHECK(equioscillation_detect(flat, 2).order == 0);

    std::vector<Sample> sparse(cosine.begin(), cosine.begin() + 1);
    for (int m = 1; m < 8; ++m) sparse.push_back({kTwoPi * m / 8, 0.0});
    try {
        equioscillation_detect(sparse, 2);
        FAIL("expected InsufficientResolution");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::InsufficientResolution);
    }
}

TEST_CASE("R minus 2/n^2 equioscillates with order n on uniform sets") {
    for (int n = 2; n <= 16; ++n) {
        const AngleSet s = AngleSet::uniform(n, 0.1 * n);
        const RationalOnCircle r = rational_R(s);
        std::vector<Sample> samples;
        const int count = 64 * n * 8;
        for (int m = 0; m < count; ++m) {
            const double t = kTwoPi * (m + 0.25) / count;
            samples.push_back({t, r(on_circle(t)).real() - 2.0 / (n * n)});
        }
        const EquioscillationReport rep = equioscillation_detect(samples, n, 1e-3);
        CHECK(rep.order == n);
    }
}
