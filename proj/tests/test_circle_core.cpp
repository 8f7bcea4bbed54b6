#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "circlecheb/angle_set.hpp"
#include "circlecheb/errors.hpp"
#include "circlecheb/kernel.hpp"
#include "circlecheb/potential.hpp"
#include "circlecheb/random.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace circlecheb;
using testing::rel_err;

TEST_CASE("normalize_angles reduces mod 2pi and sorts") {
    const std::vector<double> raw{kTwoPi + 0.5, -0.5};
    const AngleSet s = normalize_angles(raw);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s[1] == doctest::Approx(kTwoPi - 0.5).epsilon(1e-14));

    const std::vector<double> zero{0.0};
    CHECK(normalize_angles(zero)[0] == 0.0);

    const std::vector<double> coincide{3.0 * kPi, kPi};
    const AngleSet c = normalize_angles(coincide);
    CHECK(c[0] == doctest::Approx(kPi));
    CHECK(c[1] == doctest::Approx(kPi));
    CHECK(c.has_coincident_atoms());
    CHECK(c.distinct().size() == 1);
}

TEST_CASE("normalize_angles rejects empty and non-finite input") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(normalize_angles(empty), CircleError);
    try {
        normalize_angles(empty);
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::EmptySet);
    }
    const std::vector<double> bad{0.1, std::nan("")};
    try {
        normalize_angles(bad);
        FAIL("expected InvalidAngle");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::InvalidAngle);
    }
    const std::vector<double> inf{INFINITY};
    CHECK_THROWS_AS(normalize_angles(inf), CircleError);
}

TEST_CASE("normalize_angles output invariants hold for random input") {
    Rng rng(11);
    std::normal_distribution<double> wide(0.0, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> raw(1 + trial % 9);
        for (double& a : raw) a = wide(rng);
        const AngleSet s = normalize_angles(raw);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[i] >= 0.0);
            CHECK(s[i] < kTwoPi);
            if (i > 0) CHECK(s[i - 1] <= s[i]);
        }
    }
}

TEST_CASE("distinct atoms merge across the 0/2pi seam") {
    const std::vector<double> raw{0.0, kTwoPi - 1e-13, 1.0};
    const AngleSet s = normalize_angles(raw);
    CHECK(s.distinct().size() == 2);
}

TEST_CASE("potential matches the worked examples") {
    const RieszKernel k2(2.0);
    const std::vector<double> pair{0.0, kPi};
    CHECK(potential(AngleSet::from_raw(pair), kPi / 2, k2).value == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> one{0.0};
    CHECK(potential(AngleSet::from_raw(one), kPi, k2).value == doctest::Approx(0.25).epsilon(1e-14));

    // uniform set: S = (1/4) * 2n^2 / (1 - cos n theta)
    for (int n : {2, 3, 7, 16}) {
        const AngleSet u = AngleSet::uniform(n);
        for (double th : {0.1, 0.77, 2.0, 5.5}) {
            const double expect = 0.25 * 2.0 * n * n / (1.0 - std::cos(n * th));
            CHECK(rel_err(potential(u, th, k2).value, expect) < 1e-12);
        }
    }
}

TEST_CASE("potential signals a pole on an atom instead of throwing") {
    const RieszKernel k2(2.0);
    const std::vector<double> raw{0.0, 1.0};
    const PotentialValue v = potential(AngleSet::from_raw(raw), 1.0, k2);
    CHECK(v.pole_hit);
    CHECK(std::isinf(v.value));
    const LogKernel lg;
    CHECK(potential(AngleSet::from_raw(raw), 0.0, lg).pole_hit);
}

TEST_CASE("Riesz potential equals the chord-length sum") {
    Rng rng(3);
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
        const RieszKernel k(p);
        for (int trial = 0; trial < 50; ++trial) {
            const AngleSet s = random_configuration(1 + trial % 12, rng);
            const double th = kTwoPi * uniform01(rng);
            const PotentialValue v = potential(s, th, k);
            if (v.pole_hit) continue;
            CHECK(rel_err(v.value, testing::chord_potential(s, th, p)) < 1e-9);
        }
    }
}

TEST_CASE("LOG kernel potential is minus log of the product of distances") {
    const LogKernel lg;
    const std::vector<double> raw{0.3, 2.0, 4.4};
    const AngleSet s = AngleSet::from_raw(raw);
    const double th = 1.1;
    double prod = 1.0;
    for (double a : s) prod *= std::abs(std::polar(1.0, th) - std::polar(1.0, a));
    CHECK(potential(s, th, lg).value == doctest::Approx(-std::log(prod)).epsilon(1e-13));
}

TEST_CASE("potential derivatives agree with central differences") {
    Rng rng(5);
    const double h = 1e-5;
    const std::vector<std::unique_ptr<Kernel>> kernels = [] {
        std::vector<std::unique_ptr<Kernel>> v;
        v.push_back(make_kernel(KernelKind::Riesz, 2.0));
        v.push_back(make_kernel(KernelKind::Riesz, 0.5));
        v.push_back(make_kernel(KernelKind::Riesz, 3.0));
        v.push_back(make_kernel(KernelKind::Log));
        return v;
    }();
    for (const auto& k : kernels) {
        for (int trial = 0; trial < 100; ++trial) {
            const AngleSet s = random_configuration(1 + trial % 10, rng);
            double th = kTwoPi * uniform01(rng);
            // keep the stencil well away from the atoms
            bool near = false;
            for (double a : s) near = near || std::abs(angle_diff(th, a)) < 0.05;
            if (near) continue;
            const PotentialValue v = potential(s, th, *k);
            const double fp = potential(s, th + h, *k).value;
            const double fm = potential(s, th - h, *k).value;
            const double d1 = (fp - fm) / (2 * h);
            const double d2 = (fp - 2 * v.value + fm) / (h * h);
            const double d2_from_d1 =
                (potential(s, th + h, *k).first_deriv - potential(s, th - h, *k).first_deriv) / (2 * h);
            const double scale1 = std::max(std::abs(v.first_deriv), std::abs(v.value));
            CHECK(std::abs(d1 - v.first_deriv) <= 1e-6 * scale1);
            CHECK(std::abs(d2_from_d1 - v.second_deriv) <= 1e-6 * std::abs(v.second_deriv));
            // the value-only second difference is dominated by rounding at h = 1e-5
            CHECK(std::abs(d2 - v.second_deriv) <= 1e-3 * std::abs(v.second_deriv) + 1e-4 * std::abs(v.value));
        }
    }
}

TEST_CASE("kernels are even and convex on a 1e4-point grid") {
    const std::vector<std::unique_ptr<Kernel>> kernels = [] {
        std::vector<std::unique_ptr<Kernel>> v;
        for (double p : {0.5, 1.0, 2.0, 3.0, 4.0}) v.push_back(make_kernel(KernelKind::Riesz, p));
        v.push_back(make_kernel(KernelKind::Log));
        return v;
    }();
    for (const auto& k : kernels) {
        CHECK(k->has_pole_at_zero());
        for (int m = 1; m < 10000; ++m) {
            const double th = kTwoPi * m / 10000.0;
            const KernelSample a = k->eval(th);
            const KernelSample b = k->eval(kTwoPi - th);
            CHECK(rel_err(a.value, b.value) < 1e-12 + 1e-15 / std::max(std::abs(b.value), 1e-300));
            CHECK(a.second >= 0.0);
        }
    }
}

TEST_CASE("potential is rotation invariant") {
    Rng rng(8);
    const RieszKernel k(1.5);
    const LogKernel lg;
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const AngleSet s = random_configuration(2 + trial % 9, rng);
        const double th = kTwoPi * uniform01(rng);
        const double delta = kTwoPi * (uniform01(rng) - 0.5);
        bool near = false;
        for (double a : s) near = near || std::abs(angle_diff(th, a)) < 0.01;
        if (near) continue;
        const PotentialValue a = potential(s, th, k);
        const PotentialValue b = potential(s.rotated(delta), th + delta, k);
        CHECK(rel_err(b.value, a.value) < 1e-12);
        const double la = potential(s, th, lg).value;
        const double lb = potential(s.rotated(delta), th + delta, lg).value;
        CHECK(std::abs(la - lb) < 1e-12 * std::max(1.0, std::abs(la)));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("cosform_check worked examples") {
    const IdentitySides a = cosform_check(3, kPi / 3);
    CHECK(a.lhs == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(a.rhs == doctest::Approx(9.0).epsilon(1e-13));

    const IdentitySides b = cosform_check(1, kPi);
    CHECK(b.lhs == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b.rhs == doctest::Approx(1.0).epsilon(1e-13));

    // n = 8, t = 0.3: direct summation of both sides
    double lhs = 0.0;
    for (int j = 1; j <= 8; ++j) lhs += std::pow(std::sin(0.15 - j * kPi / 8), -2);
    const double rhs = 2.0 * 64 / (1.0 - std::cos(8 * 0.3));
    CHECK(rel_err(lhs, rhs) < 1e-9);
    const IdentitySides c = cosform_check(8, 0.3);
    CHECK(rel_err(c.lhs, lhs) < 1e-12);
    CHECK(rel_err(c.rhs, rhs) < 1e-12);
}

TEST_CASE("cosform_check throws at a pole") {
    try {
        cosform_check(4, kPi / 2);
        FAIL("expected PoleHit");
    } catch (const CircleError& e) {
        CHECK(e.code() == ErrorCode::PoleHit);
    }
    CHECK_THROWS_AS(cosform_check(3, 0.0), CircleError);
}

TEST_CASE("cosform identity holds for n <= 64 and random t off the poles") {
    Rng rng(21);
    int checked = 0;
    for (int n = 1; n <= 64; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            const double t = kTwoPi * uniform01(rng);
            // distance from the nearest pole 2 pi j / n
            const double cell = kTwoPi / n;
            const double off = std::fmod(t, cell);
            if (std::min(off, cell - off) < 1e-3) continue;
            const IdentitySides s = cosform_check(n, t);
            REQUIRE(rel_err(s.lhs, s.rhs) <= 1e-9);
            ++checked;
        }
    }
    CHECK(checked > 50000);
}
